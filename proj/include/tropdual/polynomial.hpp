#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tropdual/trop.hpp"

namespace tropdual {

/// Exponent vector (n_1,...,n_k) of a monomial x^n; entries nonnegative.
using ExponentVector = std::vector<int>;

/// Value of x^n at a point of T^k.  x_i^0 contributes 1_T = 0 even at a_i = ∞.
inline TropValue monomial_value(const ExponentVector& n, const std::vector<TropValue>& a) {
  Rat sum = 0;
  for (size_t i = 0; i < n.size(); ++i) {
    if (n[i] == 0) continue;
    if (a[i].is_inf()) return TropValue::infinity();
    sum += Rat(n[i]) * a[i].finite();
  }
  return TropValue(sum);
}

/// Simple monomial term c·x^n·ε^δ with c finite and δ ∈ {0, 1}.
struct SimpleTerm {
  ExponentVector exponent;
  TropValue coeff;  // never ∞
  int eps_degree = 0;

  friend bool operator==(const SimpleTerm& s, const SimpleTerm& t) {
    return s.exponent == t.exponent && s.coeff == t.coeff && s.eps_degree == t.eps_degree;
  }
};

/// Multivariate polynomial over the tropical dual numbers in k variables.
/// Canonical form: finitely supported exponent→coefficient map with no 0_T̃
/// coefficients.  Terms sharing an exponent merge by dual_add at insertion, so
/// a repeated classical monomial must be entered with an ε copy (x + εx) to
/// stay visible as two simple terms.
class DualPolynomial {
 public:
  explicit DualPolynomial(int k) : k_(k) {
    if (k < 0) throw std::invalid_argument("variable count must be nonnegative");
  }

  static DualPolynomial zero(int k) { return DualPolynomial(k); }

  static DualPolynomial constant(int k, const DualValue& c) {
    DualPolynomial f(k);
    f.add_term(ExponentVector(k, 0), c);
    return f;
  }

  static DualPolynomial monomial(int k, const ExponentVector& n, const DualValue& c) {
    DualPolynomial f(k);
    f.add_term(n, c);
    return f;
  }

  int vars() const { return k_; }
  const std::map<ExponentVector, DualValue>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  bool is_classical() const {
    for (const auto& [n, c] : terms_)
      if (!c.b.is_inf()) return false;
    return true;
  }

  void add_term(const ExponentVector& n, const DualValue& c) {
    if (static_cast<int>(n.size()) != k_)
      throw std::invalid_argument("exponent vector length mismatch");
    for (int e : n)
      if (e < 0) throw std::invalid_argument("exponents must be nonnegative");
    if (c.is_zero()) return;
    auto it = terms_.find(n);
    if (it == terms_.end()) {
      terms_.emplace(n, c);
    } else {
      it->second = dual_add(it->second, c);
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  friend bool operator==(const DualPolynomial& f, const DualPolynomial& g) {
    return f.k_ == g.k_ && f.terms_ == g.terms_;
  }
  friend bool operator!=(const DualPolynomial& f, const DualPolynomial& g) { return !(f == g); }

 private:
  int k_;
  std::map<ExponentVector, DualValue> terms_;
};

inline void require_same_vars(const DualPolynomial& f, const DualPolynomial& g) {
  if (f.vars() != g.vars()) throw std::invalid_argument("variable count mismatch");
}

inline DualPolynomial poly_add(const DualPolynomial& f, const DualPolynomial& g) {
  require_same_vars(f, g);
  DualPolynomial out = f;
  for (const auto& [n, c] : g.terms()) out.add_term(n, c);
  return out;
}

inline DualPolynomial poly_mul(const DualPolynomial& f, const DualPolynomial& g) {
  require_same_vars(f, g);
  DualPolynomial out(f.vars());
  for (const auto& [n, c] : f.terms()) {
    for (const auto& [m, d] : g.terms()) {
      ExponentVector sum(n.size());
      for (size_t i = 0; i < n.size(); ++i) sum[i] = n[i] + m[i];
      out.add_term(sum, dual_mul(c, d));
    }
  }
  return out;
}

inline DualValue poly_eval(const DualPolynomial& f, const std::vector<TropValue>& a) {
  if (static_cast<int>(a.size()) != f.vars())
    throw std::invalid_argument("point dimension mismatch");
  DualValue acc = DualValue::zero();
  for (const auto& [n, c] : f.terms()) {
    TropValue mono = monomial_value(n, a);
    acc = dual_add(acc, dual_mul(c, DualValue::from_trop(mono)));
  }
  return acc;
}

/// Coefficientwise π; the result is classical.
inline DualPolynomial poly_pi(const DualPolynomial& f) {
  DualPolynomial out(f.vars());
  for (const auto& [n, c] : f.terms())
    out.add_term(n, DualValue::from_trop(pi(c)));
  return out;
}

/// Simple terms of f, in exponent order with δ=0 before δ=1.
inline std::vector<SimpleTerm> simple_terms(const DualPolynomial& f) {
  std::vector<SimpleTerm> out;
  for (const auto& [n, c] : f.terms()) {
    if (!c.a.is_inf()) out.push_back({n, c.a, 0});
    if (!c.b.is_inf()) out.push_back({n, c.b, 1});
  }
  return out;
}

/// min over simple terms of (coeff + n·a); equals π(f(a)).
inline TropValue min_term_value(const DualPolynomial& f, const std::vector<TropValue>& a) {
  TropValue best = TropValue::infinity();
  for (const SimpleTerm& t : simple_terms(f))
    best = trop_add(best, trop_mul(t.coeff, monomial_value(t.exponent, a)));
  return best;
}

namespace detail {

inline std::string variable_name(int index, int k, int embed_index) {
  if (index == embed_index) return "y";
  if (k == 1 && embed_index != 0) return "x";
  return "x" + std::to_string(index + 1);
}

}  // namespace detail

/// Renders canonical text in the CLI grammar; total degree descending, then
/// reverse-lex on exponents.  Dual coefficients are parenthesized, classical
/// coefficient 1_T is left implicit on nonconstant monomials.
/// embed_index: variable rendered as the embedding variable y, or -1.
inline std::string poly_to_string_named(const DualPolynomial& f, int embed_index) {
  if (f.is_zero()) return "inf";
  int k = f.vars();
  int base_vars = embed_index >= 0 ? k - 1 : k;
  std::vector<std::pair<ExponentVector, DualValue>> items(f.terms().begin(), f.terms().end());
  auto total = [](const ExponentVector& n) {
    int t = 0;
    for (int e : n) t += e;
    return t;
  };
  std::sort(items.begin(), items.end(), [&](const auto& lhs, const auto& rhs) {
    int tl = total(lhs.first), tr = total(rhs.first);
    if (tl != tr) return tl > tr;
    return lhs.first > rhs.first;
  });
  std::string out;
  for (const auto& [n, c] : items) {
    if (!out.empty()) out += " + ";
    std::string mono;
    for (size_t i = 0; i < n.size(); ++i) {
      if (n[i] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += detail::variable_name(static_cast<int>(i), base_vars, embed_index);
      if (n[i] > 1) mono += "^" + std::to_string(n[i]);
    }
    std::string coeff;
    bool needs_parens = !c.b.is_inf();
    if (mono.empty()) {
      coeff = dual_to_string(c);
      needs_parens = false;
    } else if (c == DualValue::one()) {
      coeff.clear();
    } else {
      coeff = dual_to_string(c);
    }
    if (needs_parens) coeff = "(" + coeff + ")";
    if (coeff.empty()) {
      out += mono;
    } else if (mono.empty()) {
      out += coeff;
    } else {
      out += coeff + "*" + mono;
    }
  }
  return out;
}

inline std::string poly_to_string(const DualPolynomial& f) {
  return poly_to_string_named(f, -1);
}

}  // namespace tropdual
