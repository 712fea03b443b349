#pragma once

#include <optional>
#include <string>
#include <utility>

#include "tropdual/rational.hpp"

namespace tropdual {

/// Element of the tropical semifield T = (Q ∪ {∞}, min, +).
/// ∞ is the additive identity, rational 0 the multiplicative identity.
class TropValue {
 public:
  TropValue() : inf_(true) {}  // defaults to ∞ = additive identity
  explicit TropValue(Rat v) : inf_(false), value_(std::move(v)) {}
  explicit TropValue(int v) : inf_(false), value_(v) {}

  static TropValue infinity() { return TropValue(); }
  static TropValue zero() { return TropValue(); }      // 0_T = ∞
  static TropValue one() { return TropValue(Rat(0)); }  // 1_T = 0

  bool is_inf() const { return inf_; }
  const Rat& finite() const { return value_; }

  friend bool operator==(const TropValue& x, const TropValue& y) {
    if (x.inf_ != y.inf_) return false;
    return x.inf_ || x.value_ == y.value_;
  }
  friend bool operator!=(const TropValue& x, const TropValue& y) { return !(x == y); }

  /// Standard order of Q ∪ {∞} with ∞ maximal; used by min and by tie tests.
  friend bool operator<(const TropValue& x, const TropValue& y) {
    if (y.inf_) return !x.inf_;
    if (x.inf_) return false;
    return x.value_ < y.value_;
  }
  friend bool operator<=(const TropValue& x, const TropValue& y) { return !(y < x); }

 private:
  bool inf_;
  Rat value_{};
};

/// Tropical addition: minimum.
inline TropValue trop_add(const TropValue& x, const TropValue& y) { return x < y ? x : y; }

/// Tropical multiplication: rational addition, ∞ absorbing.
inline TropValue trop_mul(const TropValue& x, const TropValue& y) {
  if (x.is_inf() || y.is_inf()) return TropValue::infinity();
  return TropValue(x.finite() + y.finite());
}

/// Tropical multiplicative inverse of a finite value.
inline std::optional<TropValue> trop_inverse(const TropValue& x) {
  if (x.is_inf()) return std::nullopt;
  return TropValue(-x.finite());
}

inline std::string trop_to_string(const TropValue& x) {
  return x.is_inf() ? "inf" : rat_to_string(x.finite());
}

/// Element a+bε of the semiring of tropical dual numbers.  ε² = 1_T, so the
/// product is twisted: (a+bε)(c+dε) = (ac+bd) + (ad+bc)ε in min-plus terms.
/// The a+bε form is unique; equality is componentwise.
struct DualValue {
  TropValue a;  // ε-free part
  TropValue b;  // ε part

  DualValue() = default;
  DualValue(TropValue a_, TropValue b_) : a(std::move(a_)), b(std::move(b_)) {}

  static DualValue zero() { return {TropValue::infinity(), TropValue::infinity()}; }
  static DualValue one() { return {TropValue::one(), TropValue::infinity()}; }
  static DualValue eps() { return {TropValue::infinity(), TropValue::one()}; }
  static DualValue from_trop(TropValue t) { return {std::move(t), TropValue::infinity()}; }

  bool is_zero() const { return a.is_inf() && b.is_inf(); }
  bool is_classical() const { return b.is_inf(); }

  friend bool operator==(const DualValue& x, const DualValue& y) {
    return x.a == y.a && x.b == y.b;
  }
  friend bool operator!=(const DualValue& x, const DualValue& y) { return !(x == y); }
};

inline DualValue dual_add(const DualValue& x, const DualValue& y) {
  return {trop_add(x.a, y.a), trop_add(x.b, y.b)};
}

inline DualValue dual_mul(const DualValue& x, const DualValue& y) {
  return {trop_add(trop_mul(x.a, y.a), trop_mul(x.b, y.b)),
          trop_add(trop_mul(x.a, y.b), trop_mul(x.b, y.a))};
}

/// Inverse -α exists iff exactly one of a, b is ∞.
inline std::optional<DualValue> dual_inverse(const DualValue& x) {
  if (x.a.is_inf() == x.b.is_inf()) return std::nullopt;
  auto neg = [](const TropValue& t) {
    return t.is_inf() ? TropValue::infinity() : TropValue(-t.finite());
  };
  return DualValue{neg(x.a), neg(x.b)};
}

/// π : a+bε ↦ min{a, b}; semiring homomorphism onto T, identity on T.
inline TropValue pi(const DualValue& x) { return trop_add(x.a, x.b); }

/// Canonical text: "inf", "3", "e", "2e", "3+1e", "3-2e", "1+0e".
/// Scalars denote b = ∞; "<r>e" denotes a = ∞; "e" alone is ∞+0ε.
inline std::string dual_to_string(const DualValue& x) {
  if (x.b.is_inf()) return trop_to_string(x.a);
  std::string eps_part;
  if (x.b.finite() == 0) {
    eps_part = "e";
  } else {
    eps_part = rat_to_string(x.b.finite()) + "e";
  }
  if (x.a.is_inf()) return eps_part;
  std::string out = rat_to_string(x.a.finite());
  if (x.b.finite() < 0) {
    out += '-';
    out += rat_to_string(-x.b.finite());
    out += 'e';
  } else {
    out += '+';
    out += x.b.finite() == 0 ? std::string("0e") : eps_part;
  }
  return out;
}

}  // namespace tropdual
