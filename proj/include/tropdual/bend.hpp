#pragma once

#include <stdexcept>
#include <vector>

#include "tropdual/polynomial.hpp"
#include "tropdual/region.hpp"

namespace tropdual {

/// A point lies in the bend locus V(f) iff the minimum over the simple
/// monomial terms of f is attained at least twice (∞ minima included; fewer
/// than two terms means no tie is possible).
inline bool in_bend_locus(const DualPolynomial& f, const std::vector<TropValue>& a) {
  if (static_cast<int>(a.size()) != f.vars()) throw std::invalid_argument("point dimension mismatch");
  std::vector<SimpleTerm> terms = simple_terms(f);
  if (terms.size() < 2) return false;
  std::vector<TropValue> values;
  values.reserve(terms.size());
  TropValue best = TropValue::infinity();
  for (const SimpleTerm& t : terms) {
    TropValue v = trop_mul(t.coeff, monomial_value(t.exponent, a));
    if (v < best) best = v;
    values.push_back(std::move(v));
  }
  int hits = 0;
  for (const TropValue& v : values)
    if (v == best && ++hits >= 2) return true;
  return false;
}

inline bool in_variety(const std::vector<DualPolynomial>& gens, const std::vector<TropValue>& a) {
  for (const DualPolynomial& g : gens)
    if (!in_bend_locus(g, a)) return false;
  return true;
}

namespace detail {

/// Value of a simple term restricted to a stratum, as an affine form over the
/// remaining coordinates.
struct StratumTerm {
  std::vector<Rat> lin;
  Rat off;
};

inline bool touches_stratum(const ExponentVector& n, unsigned mask) {
  for (size_t i = 0; i < n.size(); ++i)
    if (n[i] > 0 && (mask & (1u << i))) return true;
  return false;
}

inline std::vector<StratumTerm> surviving_terms(const std::vector<SimpleTerm>& terms, unsigned mask,
                                                int k) {
  std::vector<StratumTerm> out;
  for (const SimpleTerm& t : terms) {
    if (touches_stratum(t.exponent, mask)) continue;
    StratumTerm st;
    st.off = t.coeff.finite();
    for (int i = 0; i < k; ++i)
      if (!(mask & (1u << i))) st.lin.push_back(Rat(t.exponent[i]));
    out.push_back(std::move(st));
  }
  return out;
}

inline LinearConstraint term_relation(const StratumTerm& a, const StratumTerm& b, Rel rel) {
  LinearConstraint c;
  c.rel = rel;
  c.coeffs.reserve(a.lin.size());
  for (size_t i = 0; i < a.lin.size(); ++i) c.coeffs.push_back(a.lin[i] - b.lin[i]);
  c.rhs = b.off - a.off;
  return c;  // a ≤ b  (or a = b)
}

inline std::vector<int> mask_to_stratum(unsigned mask, int k) {
  std::vector<int> s;
  for (int i = 0; i < k; ++i)
    if (mask & (1u << i)) s.push_back(i);
  return s;
}

}  // namespace detail

/// Exact Region of the bend locus.  Per infinity stratum the terms touching
/// an ∞ coordinate evaluate to ∞ and drop out; ties among the rest give one
/// polyhedral cell per term pair, and a stratum killing every term is wholly
/// contained (the ∞ minimum counts as attained by all of them).
inline Region bend_region(const DualPolynomial& f) {
  int k = f.vars();
  if (k > 16) throw std::invalid_argument("stratum enumeration limited to 16 variables");
  Region r = Region::empty(k);
  std::vector<SimpleTerm> terms = simple_terms(f);
  if (terms.size() < 2) return r;
  for (unsigned mask = 0; mask < (1u << k); ++mask) {
    std::vector<detail::StratumTerm> alive = detail::surviving_terms(terms, mask, k);
    std::vector<int> s = detail::mask_to_stratum(mask, k);
    int dim = k - static_cast<int>(s.size());
    if (alive.empty()) {
      r.add_piece(s, Polyhedron::whole(dim));
      continue;
    }
    if (alive.size() == 1) continue;
    for (size_t i = 0; i < alive.size(); ++i) {
      for (size_t j = i + 1; j < alive.size(); ++j) {
        Polyhedron cell;
        cell.dim = dim;
        cell.add(detail::term_relation(alive[i], alive[j], Rel::Eq));
        for (size_t u = 0; u < alive.size(); ++u) {
          if (u == i || u == j) continue;
          cell.add(detail::term_relation(alive[i], alive[u], Rel::Le));
        }
        r.add_piece(s, std::move(cell));
      }
    }
  }
  return region_prune(r);
}

/// Intersection of the generators' bend loci.  For an empty generator list
/// the ambient dimension cannot be inferred and must be supplied.
inline Region variety_region(const std::vector<DualPolynomial>& gens, int k_if_empty = -1) {
  if (gens.empty()) {
    if (k_if_empty < 0) throw std::invalid_argument("variety of no generators needs a dimension");
    return Region::whole(k_if_empty);
  }
  Region acc = bend_region(gens.front());
  for (size_t i = 1; i < gens.size(); ++i)
    acc = region_intersect(acc, bend_region(gens[i]));
  return region_prune(acc);
}

}  // namespace tropdual
