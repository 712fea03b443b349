#pragma once

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "tropdual/polyhedron.hpp"
#include "tropdual/trop.hpp"

namespace tropdual {

/// Subset of T^k as a finite union of rational polyhedra organized by
/// infinity strata: the key lists the coordinates pinned to ∞ (0-based,
/// sorted), the polyhedra constrain the remaining coordinates in index order.
struct Region {
  int k = 0;
  std::map<std::vector<int>, std::vector<Polyhedron>> strata;

  static Region empty(int k) { return Region{k, {}}; }

  /// All of T^k: every stratum unconstrained.
  static Region whole(int k) {
    if (k < 0 || k > 16) throw std::invalid_argument("stratum enumeration limited to 16 variables");
    Region r{k, {}};
    for (unsigned mask = 0; mask < (1u << k); ++mask) {
      std::vector<int> s;
      for (int i = 0; i < k; ++i)
        if (mask & (1u << i)) s.push_back(i);
      r.strata[s].push_back(Polyhedron::whole(k - static_cast<int>(s.size())));
    }
    return r;
  }

  void add_piece(const std::vector<int>& stratum, Polyhedron piece) {
    strata[stratum].push_back(std::move(piece));
  }

  bool is_empty_syntactically() const {
    for (const auto& [s, pieces] : strata)
      if (!pieces.empty()) return false;
    return true;
  }
};

inline std::vector<int> infinity_stratum_of(const std::vector<TropValue>& a) {
  std::vector<int> s;
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i].is_inf()) s.push_back(static_cast<int>(i));
  return s;
}

inline std::vector<Rat> finite_part(const std::vector<TropValue>& a) {
  std::vector<Rat> out;
  for (const TropValue& v : a)
    if (!v.is_inf()) out.push_back(v.finite());
  return out;
}

/// Lifts stratum-local coordinates back to a T^k point.
inline std::vector<TropValue> lift_point(int k, const std::vector<int>& stratum,
                                         const std::vector<Rat>& coords) {
  std::vector<TropValue> out(k, TropValue::infinity());
  size_t j = 0;
  for (int i = 0; i < k; ++i) {
    if (std::find(stratum.begin(), stratum.end(), i) != stratum.end()) continue;
    out[i] = TropValue(coords[j++]);
  }
  return out;
}

inline bool region_contains(const Region& r, const std::vector<TropValue>& a) {
  if (static_cast<int>(a.size()) != r.k) throw std::invalid_argument("point dimension mismatch");
  auto it = r.strata.find(infinity_stratum_of(a));
  if (it == r.strata.end()) return false;
  std::vector<Rat> coords = finite_part(a);
  for (const Polyhedron& p : it->second)
    if (contains_point(p, coords)) return true;
  return false;
}

/// Drops empty pieces, removes redundant constraints, and deduplicates.
/// Pieces come out sorted with the least-constrained first, which is also the
/// preferred order for cover checks (big pieces chip away more per split).
inline Region region_compact(const Region& r) {
  Region out{r.k, {}};
  for (const auto& [s, pieces] : r.strata) {
    std::vector<Polyhedron> kept;
    for (const Polyhedron& p : pieces) {
      if (is_trivially_empty(p) || is_empty(p)) continue;
      kept.push_back(remove_redundant(p));
    }
    std::sort(kept.begin(), kept.end(), [](const Polyhedron& a, const Polyhedron& b) {
      if (a.constraints.size() != b.constraints.size())
        return a.constraints.size() < b.constraints.size();
      return a < b;
    });
    kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
    if (!kept.empty()) out.strata[s] = std::move(kept);
  }
  return out;
}

namespace detail {

/// a ⊆ b for single polyhedra (b's equalities expanded into walls).
inline bool piece_contained(const Polyhedron& a, const Polyhedron& b) {
  for (const LinearConstraint& c : b.constraints) {
    std::vector<LinearConstraint> walls;
    if (c.rel == Rel::Eq) {
      walls.push_back({c.coeffs, c.rhs, Rel::Le});
      LinearConstraint flipped;
      for (const Rat& v : c.coeffs) flipped.coeffs.push_back(-v);
      flipped.rhs = -c.rhs;
      flipped.rel = Rel::Le;
      walls.push_back(flipped);
    } else {
      walls.push_back(c);
    }
    for (const LinearConstraint& wall : walls) {
      Polyhedron probe = a;
      probe.add(negate_constraint(wall));
      if (!is_empty(probe)) return false;
    }
  }
  return true;
}

}  // namespace detail

/// compact + removal of pieces contained in a single other piece.  Costlier
/// than region_compact; used where small piece lists matter (ideal
/// construction, CLI output).
inline Region region_prune(const Region& r) {
  Region out = region_compact(r);
  for (auto& [s, pieces] : out.strata) {
    std::vector<bool> dead(pieces.size(), false);
    for (size_t i = 0; i < pieces.size(); ++i) {
      if (dead[i]) continue;
      for (size_t j = 0; j < pieces.size(); ++j) {
        if (i == j || dead[j]) continue;
        if (detail::piece_contained(pieces[i], pieces[j])) {
          dead[i] = true;
          break;
        }
      }
    }
    std::vector<Polyhedron> kept;
    for (size_t i = 0; i < pieces.size(); ++i)
      if (!dead[i]) kept.push_back(pieces[i]);
    pieces = std::move(kept);
  }
  for (auto it = out.strata.begin(); it != out.strata.end();) {
    if (it->second.empty()) it = out.strata.erase(it);
    else ++it;
  }
  return out;
}

inline Region region_union(const Region& a, const Region& b) {
  if (a.k != b.k) throw std::invalid_argument("region dimension mismatch");
  Region out = a;
  for (const auto& [s, pieces] : b.strata)
    for (const Polyhedron& p : pieces) out.strata[s].push_back(p);
  return region_compact(out);
}

inline Region region_intersect(const Region& a, const Region& b) {
  if (a.k != b.k) throw std::invalid_argument("region dimension mismatch");
  Region out{a.k, {}};
  for (const auto& [s, pieces] : a.strata) {
    auto it = b.strata.find(s);
    if (it == b.strata.end()) continue;
    for (const Polyhedron& p : pieces) {
      for (const Polyhedron& q : it->second) {
        Polyhedron meet = p;
        for (const LinearConstraint& c : q.constraints) meet.add(c);
        out.strata[s].push_back(std::move(meet));
      }
    }
  }
  return region_compact(out);
}

struct RegionCompareResult {
  Verdict verdict = Verdict::True;
  std::optional<std::vector<TropValue>> witness;  // point of the left side not in the right
};

/// A ⊆ B, stratum by stratum.
inline RegionCompareResult region_covers_region(const Region& a, const Region& b,
                                                const CoverOptions& options = {}) {
  if (a.k != b.k) throw std::invalid_argument("region dimension mismatch");
  RegionCompareResult result;
  bool undecided = false;
  static const std::vector<Polyhedron> kNone;
  for (const auto& [s, pieces] : a.strata) {
    auto it = b.strata.find(s);
    const std::vector<Polyhedron>& cover = it == b.strata.end() ? kNone : it->second;
    for (const Polyhedron& p : pieces) {
      std::optional<std::vector<Rat>> local;
      Verdict v = region_covers(p, cover, &local, options);
      if (v == Verdict::False) {
        result.verdict = Verdict::False;
        if (local) result.witness = lift_point(a.k, s, *local);
        return result;
      }
      if (v == Verdict::Undecided) undecided = true;
    }
  }
  result.verdict = undecided ? Verdict::Undecided : Verdict::True;
  return result;
}

struct RegionEqualResult {
  Verdict verdict = Verdict::True;
  std::optional<std::vector<TropValue>> witness;
  bool witness_in_left = false;  // witness lies in left∖right (else right∖left)
};

inline RegionEqualResult region_equal(const Region& a, const Region& b,
                                      const CoverOptions& options = {}) {
  RegionEqualResult result;
  RegionCompareResult ab = region_covers_region(a, b, options);
  if (ab.verdict == Verdict::False) {
    result.verdict = Verdict::False;
    result.witness = ab.witness;
    result.witness_in_left = true;
    return result;
  }
  RegionCompareResult ba = region_covers_region(b, a, options);
  if (ba.verdict == Verdict::False) {
    result.verdict = Verdict::False;
    result.witness = ba.witness;
    result.witness_in_left = false;
    return result;
  }
  result.verdict = (ab.verdict == Verdict::Undecided || ba.verdict == Verdict::Undecided)
                       ? Verdict::Undecided
                       : Verdict::True;
  return result;
}

inline std::string point_to_string(const std::vector<TropValue>& a) {
  std::string out = "(";
  for (size_t i = 0; i < a.size(); ++i) {
    if (i) out += ", ";
    out += trop_to_string(a[i]);
  }
  out += ")";
  return out;
}

inline const char* rel_name(Rel r) {
  switch (r) {
    case Rel::Le: return "le";
    case Rel::Lt: return "lt";
    case Rel::Eq: return "eq";
  }
  return "le";
}

inline nlohmann::json region_to_json(const Region& r) {
  nlohmann::json strata = nlohmann::json::array();
  for (const auto& [s, pieces] : r.strata) {
    nlohmann::json inf_coords = nlohmann::json::array();
    for (int i : s) inf_coords.push_back(i + 1);
    nlohmann::json polys = nlohmann::json::array();
    for (const Polyhedron& p : pieces) {
      nlohmann::json constraints = nlohmann::json::array();
      for (const LinearConstraint& c : p.constraints) {
        nlohmann::json coeffs = nlohmann::json::array();
        for (const Rat& v : c.coeffs) coeffs.push_back(rat_to_string(v));
        constraints.push_back(
            {{"coeffs", coeffs}, {"rel", rel_name(c.rel)}, {"rhs", rat_to_string(c.rhs)}});
      }
      polys.push_back({{"constraints", constraints}});
    }
    strata.push_back({{"inf_coords", inf_coords}, {"polyhedra", polys}});
  }
  return {{"k", r.k}, {"strata", strata}};
}

inline Region region_from_json(const nlohmann::json& j) {
  auto fail = [](const std::string& what) -> void {
    throw std::runtime_error("region json: " + what);
  };
  if (!j.is_object() || !j.contains("k") || !j.contains("strata")) fail("need k and strata");
  Region r;
  r.k = j.at("k").get<int>();
  if (r.k < 0) fail("k must be nonnegative");
  for (const auto& stratum : j.at("strata")) {
    std::vector<int> s;
    for (const auto& idx : stratum.at("inf_coords")) {
      int i = idx.get<int>();
      if (i < 1 || i > r.k) fail("inf_coords index out of range");
      s.push_back(i - 1);
    }
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end()) fail("duplicate inf_coords");
    int dim = r.k - static_cast<int>(s.size());
    std::vector<Polyhedron> pieces;
    for (const auto& poly : stratum.at("polyhedra")) {
      Polyhedron p;
      p.dim = dim;
      for (const auto& cons : poly.at("constraints")) {
        LinearConstraint c;
        for (const auto& coeff : cons.at("coeffs")) {
          auto v = rat_from_string(coeff.get<std::string>());
          if (!v) fail("bad rational " + coeff.get<std::string>());
          c.coeffs.push_back(*v);
        }
        if (static_cast<int>(c.coeffs.size()) != dim) fail("coeffs length mismatch");
        auto rhs = rat_from_string(cons.at("rhs").get<std::string>());
        if (!rhs) fail("bad rational " + cons.at("rhs").get<std::string>());
        c.rhs = *rhs;
        std::string rel = cons.at("rel").get<std::string>();
        if (rel == "le") c.rel = Rel::Le;
        else if (rel == "lt") c.rel = Rel::Lt;
        else if (rel == "eq") c.rel = Rel::Eq;
        else fail("bad rel " + rel);
        p.add(std::move(c));
      }
      pieces.push_back(std::move(p));
    }
    if (r.strata.count(s)) fail("duplicate stratum");
    r.strata[s] = std::move(pieces);
  }
  return r;
}

}  // namespace tropdual
