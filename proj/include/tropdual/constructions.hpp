#pragma once

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "tropdual/bend.hpp"
#include "tropdual/congruence.hpp"
#include "tropdual/polynomial.hpp"
#include "tropdual/region.hpp"

namespace tropdual {

/// E = ⟨x^n + c·x^m ∼ c·x^m⟩: the congruence carving out {c + m·a ≤ n·a}.
struct HalfspaceCongruence {
  ExponentVector n;
  ExponentVector m;
  Rat c;

  HalfspaceCongruence(ExponentVector n_, ExponentVector m_, Rat c_)
      : n(std::move(n_)), m(std::move(m_)), c(std::move(c_)) {
    if (n.size() != m.size()) throw std::invalid_argument("exponent vectors share length");
    for (int v : n)
      if (v < 0) throw std::invalid_argument("exponents are nonnegative");
    for (int v : m)
      if (v < 0) throw std::invalid_argument("exponents are nonnegative");
    if (n == m) throw std::invalid_argument("degenerate halfspace congruence (n = m)");
  }

  int vars() const { return static_cast<int>(n.size()); }

  CongruencePair pair() const {
    int k = vars();
    DualPolynomial rhs = DualPolynomial::monomial(k, m, DualValue::from_trop(TropValue(c)));
    DualPolynomial lhs = poly_add(DualPolynomial::monomial(k, n, DualValue::one()), rhs);
    return CongruencePair(lhs, rhs);
  }
};

/// Open box ∏ B_i: each coordinate either a bounded interval (lo, hi) or a
/// ray (lo, ∞] — the ray contains the point ∞.
struct CoordInterval {
  Rat lo;
  std::optional<Rat> hi;
};

struct IntervalSpec {
  std::vector<CoordInterval> coords;

  explicit IntervalSpec(std::vector<CoordInterval> cs) : coords(std::move(cs)) {
    if (coords.empty()) throw std::invalid_argument("box needs at least one coordinate");
    for (const CoordInterval& c : coords)
      if (c.hi && !(c.lo < *c.hi)) throw std::invalid_argument("interval bounds must satisfy lo < hi");
  }

  int vars() const { return static_cast<int>(coords.size()); }
};

namespace detail {

/// Promotes f from k to k+1 variables; the new variable enters with exponent 0.
inline DualPolynomial with_embedding_var(const DualPolynomial& f) {
  DualPolynomial out = DualPolynomial::zero(f.vars() + 1);
  for (const auto& [n, c] : f.terms()) {
    ExponentVector m = n;
    m.push_back(0);
    out.add_term(m, c);
  }
  return out;
}

inline DualPolynomial embedding_var_poly(int k_plus_1) {
  ExponentVector e(k_plus_1, 0);
  e.back() = 1;
  return DualPolynomial::monomial(k_plus_1, e, DualValue::one());
}

/// y + 0, the generator pinning the embedding variable to 0.
inline DualPolynomial slice_poly(int k_plus_1) {
  return poly_add(embedding_var_poly(k_plus_1),
                  DualPolynomial::constant(k_plus_1, DualValue::one()));
}

/// y·(x^n + c·x^m) + c·x^m over k+1 variables.
inline DualPolynomial lem1_fgen(const HalfspaceCongruence& h) {
  int k1 = h.vars() + 1;
  ExponentVector ny = h.n, my = h.m, m0 = h.m;
  ny.push_back(1);
  my.push_back(1);
  m0.push_back(0);
  DualValue cv = DualValue::from_trop(TropValue(h.c));
  DualPolynomial out = DualPolynomial::monomial(k1, ny, DualValue::one());
  out = poly_add(out, DualPolynomial::monomial(k1, my, cv));
  out = poly_add(out, DualPolynomial::monomial(k1, m0, cv));
  return out;
}

/// x^n + (c + cε)·x^m over k variables: the one-generator dual ideal of the
/// same halfspace.
inline DualPolynomial dual_halfspace_gen(const HalfspaceCongruence& h) {
  DualValue cc(TropValue(h.c), TropValue(h.c));
  return poly_add(DualPolynomial::monomial(h.vars(), h.n, DualValue::one()),
                  DualPolynomial::monomial(h.vars(), h.m, cc));
}

/// Splits a reduced polyhedron into halfspace congruences: each constraint
/// β·a ≤ r scales to coprime integers and splits as m = β⁺, n = β⁻, c = −r,
/// so that c + m·a ≤ n·a reads back as β·a ≤ r.  Equalities become opposite
/// halfspace pairs.  Returns nothing when the piece is syntactically
/// infeasible; an empty list means the whole space.
inline std::optional<std::vector<HalfspaceCongruence>> piece_to_halfspaces(const Polyhedron& piece) {
  std::vector<HalfspaceCongruence> out;
  Polyhedron p = reduce(piece);
  auto split = [&out](const LinearConstraint& row) {
    LinearConstraint c = normalize(row);
    ExponentVector n(c.coeffs.size()), m(c.coeffs.size());
    for (size_t i = 0; i < c.coeffs.size(); ++i) {
      Int v = rat_num(c.coeffs[i]);  // integral after normalize
      if (v > 0) m[i] = static_cast<int>(v);
      else n[i] = static_cast<int>(-v);
    }
    out.emplace_back(std::move(n), std::move(m), -c.rhs);
  };
  for (const LinearConstraint& c : p.constraints) {
    if (c.is_ground()) {
      if (!c.ground_holds()) return std::nullopt;
      continue;
    }
    switch (c.rel) {
      case Rel::Lt:
        throw std::logic_error("strict constraint cannot become a halfspace congruence");
      case Rel::Le:
        split(c);
        break;
      case Rel::Eq: {
        split({c.coeffs, c.rhs, Rel::Le});
        LinearConstraint flipped;
        for (const Rat& v : c.coeffs) flipped.coeffs.push_back(-v);
        flipped.rhs = -c.rhs;
        flipped.rel = Rel::Le;
        split(flipped);
        break;
      }
    }
  }
  return out;
}

}  // namespace detail

/// Ideal of a single halfspace congruence over T[x₁..x_k, y]:
/// ⟨y·(x^n + c·x^m) + c·x^m, y + 0⟩.
inline std::vector<DualPolynomial> halfspace_congruence_to_ideal(const HalfspaceCongruence& h) {
  return {detail::lem1_fgen(h), detail::slice_poly(h.vars() + 1)};
}

/// Intersection of halfspaces: all the halfspace f-generators plus one y + 0.
inline std::vector<DualPolynomial> convex_to_ideal(const std::vector<HalfspaceCongruence>& hs) {
  if (hs.empty()) throw std::invalid_argument("convex piece needs at least one halfspace");
  for (const HalfspaceCongruence& h : hs)
    if (h.vars() != hs.front().vars()) throw std::invalid_argument("halfspaces share variables");
  std::vector<DualPolynomial> out;
  out.reserve(hs.size() + 1);
  for (const HalfspaceCongruence& h : hs) out.push_back(detail::lem1_fgen(h));
  out.push_back(detail::slice_poly(hs.front().vars() + 1));
  return out;
}

/// Product ideal: every way of picking one generator per part.  A part with
/// no generators is the zero ideal, so the product collapses to it (variety =
/// everything, generator list empty).
inline std::vector<DualPolynomial> union_to_ideal(
    const std::vector<std::vector<DualPolynomial>>& parts) {
  if (parts.empty()) throw std::invalid_argument("union needs at least one part");
  unsigned long long count = 1;
  for (const auto& part : parts) {
    count *= static_cast<unsigned long long>(part.size());
    if (count > 100000ull) throw std::runtime_error("union of ideals: generator blowup");
  }
  std::vector<DualPolynomial> out;
  if (count == 0) return out;
  std::vector<size_t> pick(parts.size(), 0);
  while (true) {
    DualPolynomial prod = parts[0][pick[0]];
    for (size_t i = 1; i < parts.size(); ++i) prod = poly_mul(prod, parts[i][pick[i]]);
    if (std::find(out.begin(), out.end(), prod) == out.end()) out.push_back(std::move(prod));
    size_t i = 0;
    while (i < parts.size() && ++pick[i] == parts[i].size()) pick[i++] = 0;
    if (i == parts.size()) break;
  }
  return out;
}

/// Appends the embedding coordinate pinned to 0: i(a) = (a, 0).  Every
/// stratum keeps its ∞ set; y itself is always finite.
inline Region horizontal_embed(const Region& r) {
  Region out{r.k + 1, {}};
  for (const auto& [s, pieces] : r.strata) {
    int dim = r.k - static_cast<int>(s.size()) + 1;
    for (const Polyhedron& p : pieces) {
      Polyhedron q;
      q.dim = dim;
      for (const LinearConstraint& c : p.constraints) {
        LinearConstraint e = c;
        e.coeffs.push_back(Rat(0));
        q.add(std::move(e));
      }
      LinearConstraint pin;
      pin.coeffs.assign(dim, Rat(0));
      pin.coeffs.back() = 1;
      pin.rhs = 0;
      pin.rel = Rel::Eq;
      q.add(std::move(pin));
      out.strata[s].push_back(std::move(q));
    }
  }
  return out;
}

namespace detail {

/// Region → classical ideal over T[x, y]: each finite-stratum piece becomes a
/// convex intersection of halfspace ideals, pieces are united by the product
/// ideal.  Pieces outside the finite stratum are not consulted; round-trip
/// checks are the caller's job.
inline std::vector<DualPolynomial> region_to_classical_ideal(const Region& r) {
  std::vector<std::vector<DualPolynomial>> parts;
  auto it = r.strata.find({});
  if (it != r.strata.end()) {
    for (const Polyhedron& piece : it->second) {
      auto hs = piece_to_halfspaces(piece);
      if (!hs) continue;
      if (hs->empty()) parts.push_back({slice_poly(r.k + 1)});
      else parts.push_back(convex_to_ideal(*hs));
    }
  }
  if (parts.empty()) return {DualPolynomial::constant(r.k + 1, DualValue::one())};
  return union_to_ideal(parts);
}

/// Region → ideal over T̃[x]: one generator x^n + (c+cε)x^m per halfspace,
/// concatenation for intersections, products for unions.
inline std::vector<DualPolynomial> region_to_dual_ideal(const Region& r) {
  std::vector<std::vector<DualPolynomial>> parts;
  auto it = r.strata.find({});
  if (it != r.strata.end()) {
    for (const Polyhedron& piece : it->second) {
      auto hs = piece_to_halfspaces(piece);
      if (!hs) continue;
      std::vector<DualPolynomial> part;
      for (const HalfspaceCongruence& h : *hs) part.push_back(dual_halfspace_gen(h));
      parts.push_back(std::move(part));  // empty part = zero ideal = whole space
    }
  }
  if (parts.empty()) return {DualPolynomial::constant(r.k, DualValue::one())};
  return union_to_ideal(parts);
}

}  // namespace detail

/// Classical ideal over T[x, y] whose variety is the embedded congruence
/// variety i(V(E)); goes through the exact region decomposition.
inline std::vector<DualPolynomial> congruence_to_ideal(const std::vector<CongruencePair>& pairs) {
  if (pairs.empty()) throw std::invalid_argument("need at least one congruence pair");
  Region r = region_prune(congruence_region(pairs));
  return detail::region_to_classical_ideal(r);
}

/// Ideal over T̃[x] whose bend locus is V(E) itself (no extra variable).
inline std::vector<DualPolynomial> congruence_to_dual_ideal(
    const std::vector<CongruencePair>& pairs) {
  if (pairs.empty()) throw std::invalid_argument("need at least one congruence pair");
  Region r = region_prune(congruence_region(pairs));
  return detail::region_to_dual_ideal(r);
}

/// Classical ideal over T[x, y] with variety i(V(gens)) for generators over T̃.
inline std::vector<DualPolynomial> dual_ideal_to_classical(
    const std::vector<DualPolynomial>& gens) {
  if (gens.empty()) throw std::invalid_argument("need at least one generator");
  Region r = region_prune(variety_region(gens));
  return detail::region_to_classical_ideal(r);
}

/// Generators {𝒻ᵢ} with ⋃ V(𝒻ᵢ) = complement of the open box: per bounded
/// coordinate (x_i + εx_i + lo)(x_i + hi + hi·ε), per ray coordinate
/// x_i + εx_i + lo.
inline std::vector<DualPolynomial> box_complement_ideal(const IntervalSpec& spec) {
  int k = spec.vars();
  std::vector<DualPolynomial> out;
  for (int i = 0; i < k; ++i) {
    const CoordInterval& ci = spec.coords[i];
    ExponentVector e(k, 0);
    e[i] = 1;
    DualPolynomial low = poly_add(
        DualPolynomial::monomial(k, e, DualValue(TropValue(Rat(0)), TropValue(Rat(0)))),
        DualPolynomial::constant(k, DualValue::from_trop(TropValue(ci.lo))));
    if (!ci.hi) {
      out.push_back(std::move(low));
      continue;
    }
    DualPolynomial high = poly_add(
        DualPolynomial::monomial(k, e, DualValue::one()),
        DualPolynomial::constant(k, DualValue(TropValue(*ci.hi), TropValue(*ci.hi))));
    out.push_back(poly_mul(low, high));
  }
  return out;
}

/// The box complement as a Region, built directly from the interval bounds
/// (used as the independent expected value for the topology generators).
inline Region box_complement_region(const IntervalSpec& spec) {
  int k = spec.vars();
  Region out = Region::empty(k);
  for (int i = 0; i < k; ++i) {
    const CoordInterval& ci = spec.coords[i];
    Region one = Region::empty(k);
    for (unsigned mask = 0; mask < (1u << k); ++mask) {
      std::vector<int> s = detail::mask_to_stratum(mask, k);
      int dim = k - static_cast<int>(s.size());
      if (mask & (1u << i)) {
        // x_i = ∞ lies outside a bounded interval, inside a ray
        if (ci.hi) one.add_piece(s, Polyhedron::whole(dim));
        continue;
      }
      int local = 0;
      for (int j = 0; j < i; ++j)
        if (!(mask & (1u << j))) ++local;
      LinearConstraint le_lo;
      le_lo.coeffs.assign(dim, Rat(0));
      le_lo.coeffs[local] = 1;
      le_lo.rhs = ci.lo;
      le_lo.rel = Rel::Le;
      Polyhedron below;
      below.dim = dim;
      below.add(le_lo);
      one.add_piece(s, std::move(below));
      if (ci.hi) {
        LinearConstraint ge_hi;
        ge_hi.coeffs.assign(dim, Rat(0));
        ge_hi.coeffs[local] = -1;
        ge_hi.rhs = -*ci.hi;
        ge_hi.rel = Rel::Le;
        Polyhedron above;
        above.dim = dim;
        above.add(ge_hi);
        one.add_piece(s, std::move(above));
      }
    }
    out = region_union(out, one);
  }
  return out;
}

inline bool in_box(const IntervalSpec& spec, const std::vector<TropValue>& a) {
  if (static_cast<int>(a.size()) != spec.vars()) throw std::invalid_argument("point dimension mismatch");
  for (int i = 0; i < spec.vars(); ++i) {
    const CoordInterval& ci = spec.coords[i];
    if (a[i].is_inf()) {
      if (ci.hi) return false;
      continue;
    }
    if (!(ci.lo < a[i].finite())) return false;
    if (ci.hi && !(a[i].finite() < *ci.hi)) return false;
  }
  return true;
}

/// Textbook-naive translation f ∼ g ↦ f + y·g (plus y + 0), kept as the
/// documented failure mode: its variety can pick up extra diagonal pieces.
inline std::vector<DualPolynomial> naive_congruence_ideal(const std::vector<CongruencePair>& pairs) {
  if (pairs.empty()) throw std::invalid_argument("need at least one congruence pair");
  int k1 = pairs.front().vars() + 1;
  std::vector<DualPolynomial> out;
  for (const CongruencePair& p : pairs) {
    DualPolynomial lifted = poly_add(
        detail::with_embedding_var(p.lhs),
        poly_mul(detail::embedding_var_poly(k1), detail::with_embedding_var(p.rhs)));
    out.push_back(std::move(lifted));
  }
  out.push_back(detail::slice_poly(k1));
  return out;
}

/// A construction output bundled with its round-trip verification: the
/// generators, the region they were built from, the region they actually cut
/// out, and the region_equal verdict between the two.
struct ConstructionCheck {
  std::vector<DualPolynomial> generators;
  Region expected;
  Region actual;
  RegionEqualResult verdict;
};

inline ConstructionCheck checked_halfspace_ideal(const HalfspaceCongruence& h) {
  ConstructionCheck out;
  out.generators = halfspace_congruence_to_ideal(h);
  out.expected = horizontal_embed(congruence_region({h.pair()}));
  out.actual = variety_region(out.generators);
  out.verdict = region_equal(out.expected, out.actual);
  return out;
}

inline ConstructionCheck checked_convex_ideal(const std::vector<HalfspaceCongruence>& hs) {
  ConstructionCheck out;
  out.generators = convex_to_ideal(hs);
  std::vector<CongruencePair> pairs;
  for (const HalfspaceCongruence& h : hs) pairs.push_back(h.pair());
  out.expected = horizontal_embed(congruence_region(pairs));
  out.actual = variety_region(out.generators);
  out.verdict = region_equal(out.expected, out.actual);
  return out;
}

inline ConstructionCheck checked_union_ideal(const std::vector<std::vector<DualPolynomial>>& parts) {
  ConstructionCheck out;
  out.generators = union_to_ideal(parts);
  int k = 0;
  for (const auto& part : parts)
    for (const DualPolynomial& g : part) k = g.vars();
  Region acc = Region::empty(k);
  for (const auto& part : parts) acc = region_union(acc, variety_region(part, k));
  out.expected = std::move(acc);
  out.actual = variety_region(out.generators, k);
  out.verdict = region_equal(out.expected, out.actual);
  return out;
}

inline ConstructionCheck checked_congruence_to_ideal(const std::vector<CongruencePair>& pairs) {
  ConstructionCheck out;
  out.generators = congruence_to_ideal(pairs);
  out.expected = horizontal_embed(congruence_region(pairs));
  out.actual = variety_region(out.generators);
  out.verdict = region_equal(out.expected, out.actual);
  return out;
}

inline ConstructionCheck checked_naive_ideal(const std::vector<CongruencePair>& pairs) {
  ConstructionCheck out;
  out.generators = naive_congruence_ideal(pairs);
  out.expected = horizontal_embed(congruence_region(pairs));
  out.actual = variety_region(out.generators);
  out.verdict = region_equal(out.expected, out.actual);
  return out;
}

inline ConstructionCheck checked_congruence_to_dual_ideal(const std::vector<CongruencePair>& pairs) {
  ConstructionCheck out;
  out.generators = congruence_to_dual_ideal(pairs);
  out.expected = congruence_region(pairs);
  out.actual = variety_region(out.generators, pairs.front().vars());
  out.verdict = region_equal(out.expected, out.actual);
  return out;
}

inline ConstructionCheck checked_dual_to_classical(const std::vector<DualPolynomial>& gens) {
  ConstructionCheck out;
  out.generators = dual_ideal_to_classical(gens);
  out.expected = horizontal_embed(variety_region(gens));
  out.actual = variety_region(out.generators);
  out.verdict = region_equal(out.expected, out.actual);
  return out;
}

inline ConstructionCheck checked_box_ideal(const IntervalSpec& spec) {
  ConstructionCheck out;
  out.generators = box_complement_ideal(spec);
  out.expected = box_complement_region(spec);
  Region acc = Region::empty(spec.vars());
  for (const DualPolynomial& g : out.generators) acc = region_union(acc, bend_region(g));
  out.actual = std::move(acc);
  out.verdict = region_equal(out.expected, out.actual);
  return out;
}

}  // namespace tropdual
