#pragma once

#include <stdexcept>
#include <vector>

#include "tropdual/bend.hpp"
#include "tropdual/polynomial.hpp"
#include "tropdual/region.hpp"

namespace tropdual {

/// One generating relation lhs ∼ rhs of a congruence on the classical
/// polynomial semiring.
struct CongruencePair {
  DualPolynomial lhs;
  DualPolynomial rhs;

  CongruencePair(DualPolynomial l, DualPolynomial r) : lhs(std::move(l)), rhs(std::move(r)) {
    if (lhs.vars() != rhs.vars()) throw std::invalid_argument("congruence sides share variables");
    if (!lhs.is_classical() || !rhs.is_classical())
      throw std::invalid_argument("congruence sides must be classical polynomials");
  }

  int vars() const { return lhs.vars(); }
};

inline bool satisfies(const CongruencePair& p, const std::vector<TropValue>& a) {
  return pi(poly_eval(p.lhs, a)) == pi(poly_eval(p.rhs, a));
}

inline bool satisfies_all(const std::vector<CongruencePair>& pairs,
                          const std::vector<TropValue>& a) {
  for (const CongruencePair& p : pairs)
    if (!satisfies(p, a)) return false;
  return true;
}

/// (f, g) × (f′, g′) = (ff′ + gg′, fg′ + gf′): the product compatible with
/// both relations without subtraction.
inline CongruencePair twisted_product(const CongruencePair& p, const CongruencePair& q) {
  return CongruencePair(
      poly_add(poly_mul(p.lhs, q.lhs), poly_mul(p.rhs, q.rhs)),
      poly_add(poly_mul(p.lhs, q.rhs), poly_mul(p.rhs, q.lhs)));
}

namespace detail {

inline Region pair_region(const CongruencePair& pair) {
  int k = pair.vars();
  if (k > 16) throw std::invalid_argument("stratum enumeration limited to 16 variables");
  Region r = Region::empty(k);
  std::vector<SimpleTerm> lhs_terms = simple_terms(pair.lhs);
  std::vector<SimpleTerm> rhs_terms = simple_terms(pair.rhs);
  for (unsigned mask = 0; mask < (1u << k); ++mask) {
    std::vector<StratumTerm> F = surviving_terms(lhs_terms, mask, k);
    std::vector<StratumTerm> G = surviving_terms(rhs_terms, mask, k);
    std::vector<int> s = mask_to_stratum(mask, k);
    int dim = k - static_cast<int>(s.size());
    if (F.empty() && G.empty()) {
      r.add_piece(s, Polyhedron::whole(dim));  // both sides ∞
      continue;
    }
    if (F.empty() || G.empty()) continue;  // finite against ∞
    for (const StratumTerm& f : F) {
      for (const StratumTerm& g : G) {
        Polyhedron cell;
        cell.dim = dim;
        cell.add(term_relation(f, g, Rel::Eq));
        for (const StratumTerm& u : F)
          if (&u != &f) cell.add(term_relation(f, u, Rel::Le));
        for (const StratumTerm& v : G)
          if (&v != &g) cell.add(term_relation(g, v, Rel::Le));
        r.add_piece(s, std::move(cell));
      }
    }
  }
  return region_compact(r);
}

}  // namespace detail

/// V(E) for the congruence generated by the pairs: the locus where every
/// lhs agrees with its rhs, as an exact Region.  Cells mimic bend_region:
/// on each stratum, a minimizing term of one side must tie a minimizing term
/// of the other.
inline Region congruence_region(const std::vector<CongruencePair>& pairs, int k_if_empty = -1) {
  if (pairs.empty()) {
    if (k_if_empty < 0) throw std::invalid_argument("empty congruence needs a dimension");
    return Region::whole(k_if_empty);
  }
  for (const CongruencePair& p : pairs)
    if (p.vars() != pairs.front().vars())
      throw std::invalid_argument("congruence pairs share variables");
  Region acc = detail::pair_region(pairs.front());
  for (size_t i = 1; i < pairs.size(); ++i)
    acc = region_intersect(acc, detail::pair_region(pairs[i]));
  return region_prune(acc);
}

}  // namespace tropdual
