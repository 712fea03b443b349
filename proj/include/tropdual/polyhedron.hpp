#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tropdual/rational.hpp"

namespace tropdual {

enum class Rel { Le, Lt, Eq };

/// Halfspace or hyperplane: coeffs·x REL rhs.
struct LinearConstraint {
  std::vector<Rat> coeffs;
  Rat rhs;
  Rel rel = Rel::Le;

  bool is_ground() const {
    for (const Rat& c : coeffs)
      if (c != 0) return false;
    return true;
  }

  /// Truth value of a ground constraint (all coefficients zero).
  bool ground_holds() const {
    switch (rel) {
      case Rel::Le: return Rat(0) <= rhs;
      case Rel::Lt: return Rat(0) < rhs;
      case Rel::Eq: return Rat(0) == rhs;
    }
    return false;
  }

  friend bool operator==(const LinearConstraint& a, const LinearConstraint& b) {
    return a.rel == b.rel && a.rhs == b.rhs && a.coeffs == b.coeffs;
  }
  friend bool operator<(const LinearConstraint& a, const LinearConstraint& b) {
    if (a.rel != b.rel) return a.rel < b.rel;
    if (a.coeffs != b.coeffs) return a.coeffs < b.coeffs;
    return a.rhs < b.rhs;
  }
};

/// Scales to coprime integer coefficients; the scaling factor is positive, so
/// inequality direction is preserved.  Equalities get a positive leading
/// coefficient.
inline LinearConstraint normalize(LinearConstraint c) {
  Int lcm_den = 1;
  for (const Rat& v : c.coeffs) lcm_den = boost::multiprecision::lcm(lcm_den, rat_den(v));
  lcm_den = boost::multiprecision::lcm(lcm_den, rat_den(c.rhs));
  Int gcd_num = 0;
  auto fold = [&](const Rat& v) {
    Int scaled = rat_num(v) * (lcm_den / rat_den(v));
    gcd_num = boost::multiprecision::gcd(gcd_num, boost::multiprecision::abs(scaled));
  };
  for (const Rat& v : c.coeffs) fold(v);
  if (gcd_num == 0) {
    // ground constraint: scale rhs to a canonical value
    if (c.rhs != 0) c.rhs = c.rhs > 0 ? Rat(1) : Rat(-1);
    return c;
  }
  Rat scale = Rat(lcm_den, gcd_num);
  bool flip = false;
  if (c.rel == Rel::Eq) {
    for (const Rat& v : c.coeffs) {
      if (v != 0) {
        flip = v < 0;
        break;
      }
    }
  }
  if (flip) scale = -scale;
  for (Rat& v : c.coeffs) v *= scale;
  c.rhs *= scale;
  return c;
}

inline LinearConstraint negate_constraint(const LinearConstraint& c) {
  LinearConstraint out;
  out.coeffs.reserve(c.coeffs.size());
  for (const Rat& v : c.coeffs) out.coeffs.push_back(-v);
  out.rhs = -c.rhs;
  out.rel = c.rel == Rel::Le ? Rel::Lt : Rel::Le;
  return out;  // Eq must be expanded by the caller before negating
}

/// Conjunction of linear constraints over `dim` rational coordinates.
/// An empty constraint list is the whole space; dim 0 is a single point.
struct Polyhedron {
  int dim = 0;
  std::vector<LinearConstraint> constraints;

  static Polyhedron whole(int dim) { return Polyhedron{dim, {}}; }

  static Polyhedron empty(int dim) {
    LinearConstraint falsum;
    falsum.coeffs.assign(dim, Rat(0));
    falsum.rhs = -1;
    falsum.rel = Rel::Le;
    return Polyhedron{dim, {falsum}};
  }

  void add(LinearConstraint c) { constraints.push_back(std::move(c)); }

  friend bool operator==(const Polyhedron& a, const Polyhedron& b) {
    return a.dim == b.dim && a.constraints == b.constraints;
  }
  friend bool operator<(const Polyhedron& a, const Polyhedron& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    return a.constraints < b.constraints;
  }
};

inline bool contains_point(const Polyhedron& p, const std::vector<Rat>& a) {
  for (const LinearConstraint& c : p.constraints) {
    Rat lhs = 0;
    for (int i = 0; i < p.dim; ++i) lhs += c.coeffs[i] * a[i];
    switch (c.rel) {
      case Rel::Le:
        if (!(lhs <= c.rhs)) return false;
        break;
      case Rel::Lt:
        if (!(lhs < c.rhs)) return false;
        break;
      case Rel::Eq:
        if (lhs != c.rhs) return false;
        break;
    }
  }
  return true;
}

/// Cheap syntactic cleanup: normalizes, folds ground rows, deduplicates, and
/// consolidates constraints sharing a coefficient vector.  Detects only
/// syntactic infeasibility; full emptiness needs is_empty.
inline Polyhedron reduce(const Polyhedron& p) {
  std::map<std::vector<Rat>, std::pair<std::optional<Rat>, bool>> bounds;  // coeffs -> (rhs, strict)
  std::map<std::vector<Rat>, Rat> equalities;
  for (const LinearConstraint& raw : p.constraints) {
    LinearConstraint c = normalize(raw);
    if (c.is_ground()) {
      if (!c.ground_holds()) return Polyhedron::empty(p.dim);
      continue;
    }
    if (c.rel == Rel::Eq) {
      auto it = equalities.find(c.coeffs);
      if (it != equalities.end()) {
        if (it->second != c.rhs) return Polyhedron::empty(p.dim);
      } else {
        equalities.emplace(c.coeffs, c.rhs);
      }
    } else {
      bool strict = c.rel == Rel::Lt;
      auto it = bounds.find(c.coeffs);
      if (it == bounds.end()) {
        bounds.emplace(c.coeffs, std::make_pair(c.rhs, strict));
      } else {
        auto& [rhs, s] = it->second;
        if (c.rhs < *rhs) {
          rhs = c.rhs;
          s = strict;
        } else if (c.rhs == *rhs) {
          s = s || strict;
        }
      }
    }
  }
  // equalities subsume parallel inequalities; opposite inequality pairs may
  // collapse to an equality or reveal infeasibility
  Polyhedron out;
  out.dim = p.dim;
  for (const auto& [coeffs, rhs] : equalities) {
    // an equality with flipped sign is stored under the same key by
    // normalize(), so only parallel inequality checks remain
    auto it = bounds.find(coeffs);
    if (it != bounds.end()) {
      const auto& [bound, strict] = it->second;
      if (rhs > *bound || (rhs == *bound && strict)) return Polyhedron::empty(p.dim);
    }
    std::vector<Rat> noeffs(coeffs.size());
    for (size_t i = 0; i < coeffs.size(); ++i) noeffs[i] = -coeffs[i];
    auto op = bounds.find(noeffs);
    if (op != bounds.end()) {
      const auto& [bound, strict] = op->second;
      if (-rhs > *bound || (-rhs == *bound && strict)) return Polyhedron::empty(p.dim);
    }
    out.add({coeffs, rhs, Rel::Eq});
  }
  std::vector<std::vector<Rat>> done;
  for (const auto& [coeffs, entry] : bounds) {
    const auto& [rhs, strict] = entry;
    if (equalities.count(coeffs)) continue;
    std::vector<Rat> noeffs(coeffs.size());
    for (size_t i = 0; i < coeffs.size(); ++i) noeffs[i] = -coeffs[i];
    if (equalities.count(noeffs)) {
      if (-equalities.at(noeffs) > *rhs) return Polyhedron::empty(p.dim);
      continue;
    }
    auto op = bounds.find(noeffs);
    if (op != bounds.end()) {
      const auto& [orhs, ostrict] = op->second;
      // coeffs·x ≤ rhs and coeffs·x ≥ -orhs
      if (-*orhs > *rhs) return Polyhedron::empty(p.dim);
      if (-*orhs == *rhs) {
        if (strict || ostrict) return Polyhedron::empty(p.dim);
        if (std::find(done.begin(), done.end(), noeffs) == done.end()) {
          LinearConstraint eq{coeffs, *rhs, Rel::Eq};
          out.add(normalize(eq));
          done.push_back(coeffs);
        }
        continue;
      }
    }
    out.add({coeffs, *rhs, strict ? Rel::Lt : Rel::Le});
  }
  return out;
}

inline bool is_trivially_empty(const Polyhedron& p) {
  for (const LinearConstraint& c : p.constraints)
    if (c.is_ground() && !c.ground_holds()) return true;
  return false;
}

/// Fourier–Motzkin projection: eliminates the given coordinate exactly.
/// Equalities involving the variable substitute first; otherwise every lower
/// bound pairs with every upper bound, strict iff either parent is strict.
inline Polyhedron fm_eliminate(const Polyhedron& p, int var) {
  auto drop_column = [&](const LinearConstraint& c) {
    LinearConstraint out;
    out.rel = c.rel;
    out.rhs = c.rhs;
    out.coeffs.reserve(c.coeffs.size() - 1);
    for (int i = 0; i < static_cast<int>(c.coeffs.size()); ++i)
      if (i != var) out.coeffs.push_back(c.coeffs[i]);
    return out;
  };
  Polyhedron src = reduce(p);
  if (is_trivially_empty(src)) return Polyhedron::empty(p.dim - 1);

  const LinearConstraint* subst = nullptr;
  for (const LinearConstraint& c : src.constraints)
    if (c.rel == Rel::Eq && c.coeffs[var] != 0) {
      subst = &c;
      break;
    }
  Polyhedron out;
  out.dim = p.dim - 1;
  if (subst) {
    for (const LinearConstraint& c : src.constraints) {
      if (&c == subst) continue;
      if (c.coeffs[var] == 0) {
        out.add(drop_column(c));
        continue;
      }
      Rat factor = c.coeffs[var] / subst->coeffs[var];
      LinearConstraint merged = c;
      for (size_t i = 0; i < merged.coeffs.size(); ++i)
        merged.coeffs[i] -= factor * subst->coeffs[i];
      merged.rhs -= factor * subst->rhs;
      out.add(drop_column(merged));
    }
    return reduce(out);
  }
  std::vector<const LinearConstraint*> lowers, uppers;
  for (const LinearConstraint& c : src.constraints) {
    if (c.coeffs[var] == 0) {
      out.add(drop_column(c));
    } else if (c.coeffs[var] > 0) {
      uppers.push_back(&c);
    } else {
      lowers.push_back(&c);
    }
  }
  for (const LinearConstraint* lo : lowers) {
    for (const LinearConstraint* up : uppers) {
      Rat a = -lo->coeffs[var];  // positive
      Rat b = up->coeffs[var];   // positive
      LinearConstraint merged;
      merged.coeffs.resize(src.dim);
      for (int i = 0; i < src.dim; ++i)
        merged.coeffs[i] = b * lo->coeffs[i] + a * up->coeffs[i];
      merged.rhs = b * lo->rhs + a * up->rhs;
      merged.rel = (lo->rel == Rel::Lt || up->rel == Rel::Lt) ? Rel::Lt : Rel::Le;
      out.add(drop_column(merged));
    }
  }
  return reduce(out);
}

namespace detail {

/// Feasibility of a 1-dimensional reduced system, exactly.
inline bool interval_feasible(const Polyhedron& p) {
  std::optional<Rat> eq;
  std::optional<Rat> lo, hi;
  bool lo_strict = false, hi_strict = false;
  for (const LinearConstraint& c : p.constraints) {
    if (c.is_ground()) {
      if (!c.ground_holds()) return false;
      continue;
    }
    Rat coeff = c.coeffs[0];
    Rat bound = c.rhs / coeff;
    if (c.rel == Rel::Eq) {
      if (eq && *eq != bound) return false;
      eq = bound;
      continue;
    }
    bool strict = c.rel == Rel::Lt;
    if (coeff > 0) {
      if (!hi || bound < *hi) {
        hi = bound;
        hi_strict = strict;
      } else if (bound == *hi) {
        hi_strict = hi_strict || strict;
      }
    } else {
      if (!lo || bound > *lo) {
        lo = bound;
        lo_strict = strict;
      } else if (bound == *lo) {
        lo_strict = lo_strict || strict;
      }
    }
  }
  if (eq) {
    if (lo && (*eq < *lo || (*eq == *lo && lo_strict))) return false;
    if (hi && (*eq > *hi || (*eq == *hi && hi_strict))) return false;
    return true;
  }
  if (lo && hi) {
    if (*lo > *hi) return false;
    if (*lo == *hi && (lo_strict || hi_strict)) return false;
  }
  return true;
}

inline int pick_elimination_var(const Polyhedron& p) {
  for (const LinearConstraint& c : p.constraints)
    if (c.rel == Rel::Eq)
      for (int i = 0; i < p.dim; ++i)
        if (c.coeffs[i] != 0) return i;
  int best = 0;
  long best_cost = -1;
  for (int v = 0; v < p.dim; ++v) {
    long lows = 0, ups = 0;
    for (const LinearConstraint& c : p.constraints) {
      if (c.coeffs[v] > 0) ++ups;
      else if (c.coeffs[v] < 0) ++lows;
    }
    long cost = lows * ups;
    if (best_cost < 0 || cost < best_cost) {
      best_cost = cost;
      best = v;
    }
  }
  return best;
}

}  // namespace detail

/// Exact emptiness by full elimination.
inline bool is_empty(const Polyhedron& p) {
  Polyhedron cur = reduce(p);
  while (true) {
    if (is_trivially_empty(cur)) return true;
    if (cur.dim == 0) {
      for (const LinearConstraint& c : cur.constraints)
        if (!c.ground_holds()) return true;
      return false;
    }
    if (cur.dim == 1) return !detail::interval_feasible(cur);
    if (cur.constraints.empty()) return false;
    cur = fm_eliminate(cur, detail::pick_elimination_var(cur));
  }
}

/// Exact rational point inside p, if any.
inline std::optional<std::vector<Rat>> find_point(const Polyhedron& p) {
  if (is_empty(p)) return std::nullopt;
  struct Stage {
    Polyhedron poly;
    int var;
  };
  std::vector<Stage> stages;
  Polyhedron cur = reduce(p);
  while (cur.dim > 0) {
    int var = detail::pick_elimination_var(cur);
    stages.push_back({cur, var});
    cur = fm_eliminate(cur, var);
  }
  std::vector<Rat> point;  // grows from innermost projection outward
  for (auto it = stages.rbegin(); it != stages.rend(); ++it) {
    const Polyhedron& poly = it->poly;
    int var = it->var;
    // point currently holds values for poly's columns except `var`
    auto value_at = [&](const LinearConstraint& c) {
      Rat acc = c.rhs;
      int j = 0;
      for (int i = 0; i < poly.dim; ++i) {
        if (i == var) continue;
        acc -= c.coeffs[i] * point[j];
        ++j;
      }
      return acc;  // residual: c.coeffs[var] * x_var REL acc
    };
    std::optional<Rat> eq, lo, hi;
    bool lo_strict = false, hi_strict = false;
    for (const LinearConstraint& c : poly.constraints) {
      if (c.coeffs[var] == 0) continue;
      Rat bound = value_at(c) / c.coeffs[var];
      if (c.rel == Rel::Eq) {
        eq = bound;
      } else if (c.coeffs[var] > 0) {
        if (!hi || bound < *hi) {
          hi = bound;
          hi_strict = c.rel == Rel::Lt;
        } else if (bound == *hi && c.rel == Rel::Lt) {
          hi_strict = true;
        }
      } else {
        if (!lo || bound > *lo) {
          lo = bound;
          lo_strict = c.rel == Rel::Lt;
        } else if (bound == *lo && c.rel == Rel::Lt) {
          lo_strict = true;
        }
      }
    }
    Rat value;
    if (eq) {
      value = *eq;
    } else if (lo && hi) {
      value = (*lo == *hi) ? *lo : (*lo + *hi) / 2;
    } else if (lo) {
      value = lo_strict ? *lo + 1 : *lo;
    } else if (hi) {
      value = hi_strict ? *hi - 1 : *hi;
    } else {
      value = 0;
    }
    point.insert(point.begin() + var, value);
  }
  return point;
}

/// Drops constraints implied by the others.  An inequality H is redundant iff
/// rest ∧ ¬H is empty; an equality needs both of its walls implied.  Dropping
/// happens greedily against the current (still equivalent) set, so the result
/// depends on constraint order but always describes the same set.
inline Polyhedron remove_redundant(const Polyhedron& p) {
  Polyhedron cur = reduce(p);
  if (is_trivially_empty(cur)) return cur;
  for (size_t i = 0; i < cur.constraints.size();) {
    Polyhedron rest;
    rest.dim = cur.dim;
    for (size_t j = 0; j < cur.constraints.size(); ++j)
      if (j != i) rest.add(cur.constraints[j]);
    const LinearConstraint& c = cur.constraints[i];
    bool redundant;
    if (c.rel == Rel::Eq) {
      LinearConstraint le{c.coeffs, c.rhs, Rel::Le};
      LinearConstraint ge;
      for (const Rat& v : c.coeffs) ge.coeffs.push_back(-v);
      ge.rhs = -c.rhs;
      ge.rel = Rel::Le;
      Polyhedron probe_le = rest, probe_ge = rest;
      probe_le.add(negate_constraint(le));
      probe_ge.add(negate_constraint(ge));
      redundant = is_empty(probe_le) && is_empty(probe_ge);
    } else {
      Polyhedron probe = rest;
      probe.add(negate_constraint(c));
      redundant = is_empty(probe);
    }
    if (redundant) cur.constraints.erase(cur.constraints.begin() + i);
    else ++i;
  }
  return cur;
}

enum class Verdict { True, False, Undecided };

struct CoverOptions {
  long budget_factor = 10;
};

namespace detail {

inline Polyhedron conjoin(Polyhedron base, const LinearConstraint& extra) {
  base.add(extra);
  return base;
}

inline Verdict covers_rec(const Polyhedron& p, const std::vector<Polyhedron>& pieces, long& budget,
                          std::optional<std::vector<Rat>>* witness) {
  if (is_empty(p)) return Verdict::True;
  // pieces disjoint from p cannot cover any part of it and would only split
  // the recursion for nothing
  std::vector<Polyhedron> useful;
  useful.reserve(pieces.size());
  for (const Polyhedron& piece : pieces) {
    Polyhedron meet = piece;
    for (const LinearConstraint& c : p.constraints) meet.add(c);
    if (!is_empty(meet)) useful.push_back(piece);
  }
  if (useful.empty()) {
    if (witness && !*witness) *witness = find_point(p);
    return Verdict::False;
  }
  if (--budget < 0) return Verdict::Undecided;
  Polyhedron q = reduce(useful.front());
  std::vector<LinearConstraint> walls;
  for (const LinearConstraint& c : q.constraints) {
    if (c.rel == Rel::Eq) {
      walls.push_back({c.coeffs, c.rhs, Rel::Le});
      LinearConstraint flipped;
      flipped.coeffs.reserve(c.coeffs.size());
      for (const Rat& v : c.coeffs) flipped.coeffs.push_back(-v);
      flipped.rhs = -c.rhs;
      flipped.rel = Rel::Le;
      walls.push_back(flipped);
    } else {
      walls.push_back(c);
    }
  }
  std::vector<Polyhedron> rest(useful.begin() + 1, useful.end());
  Polyhedron cur = p;
  bool undecided = false;
  for (const LinearConstraint& wall : walls) {
    Verdict v = covers_rec(reduce(conjoin(cur, negate_constraint(wall))), rest, budget, witness);
    if (v == Verdict::False) return Verdict::False;
    if (v == Verdict::Undecided) undecided = true;
    cur = conjoin(std::move(cur), wall);
  }
  return undecided ? Verdict::Undecided : Verdict::True;
}

}  // namespace detail

/// True iff p ⊆ ⋃ pieces.  Splits p along the first useful piece's walls and
/// recurses on the complement slabs.  A exhausted node budget yields
/// Undecided, never a wrong verdict.  On False, *witness (if given) receives
/// an uncovered point.
inline Verdict region_covers(const Polyhedron& p, const std::vector<Polyhedron>& pieces,
                             std::optional<std::vector<Rat>>* witness = nullptr,
                             const CoverOptions& options = {}) {
  size_t max_constraints = 1;
  for (const Polyhedron& q : pieces)
    max_constraints = std::max(max_constraints, q.constraints.size());
  long budget = options.budget_factor * static_cast<long>(std::max<size_t>(pieces.size(), 1)) *
                static_cast<long>(max_constraints);
  return detail::covers_rec(reduce(p), pieces, budget, witness);
}

}  // namespace tropdual
