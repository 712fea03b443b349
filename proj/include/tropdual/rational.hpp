#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <string_view>

namespace tropdual {

/// Exact rational scalar used everywhere; no floating point in the core.
using Rat = boost::multiprecision::cpp_rational;
using Int = boost::multiprecision::cpp_int;

inline Int rat_num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int rat_den(const Rat& r) { return boost::multiprecision::denominator(r); }

/// Lowest-terms text: "3", "-7/2". Denominator 1 is omitted.
inline std::string rat_to_string(const Rat& r) {
  std::string s = rat_num(r).str();
  if (rat_den(r) != 1) {
    s += '/';
    s += rat_den(r).str();
  }
  return s;
}

/// Accepts "p", "p/q", and decimal forms like "-1.25"; exact, no rounding.
inline std::optional<Rat> rat_from_string(std::string_view text) {
  size_t pos = 0;
  bool neg = false;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    neg = text[pos] == '-';
    ++pos;
  }
  auto digits = [&](Int& out) -> bool {
    bool any = false;
    out = 0;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
      out = out * 10 + (text[pos] - '0');
      ++pos;
      any = true;
    }
    return any;
  };
  Int whole;
  if (!digits(whole)) return std::nullopt;
  Rat value(whole);
  if (pos < text.size() && text[pos] == '.') {
    ++pos;
    size_t start = pos;
    Int frac;
    if (!digits(frac)) return std::nullopt;
    Int scale = 1;
    for (size_t i = start; i < pos; ++i) scale *= 10;
    value += Rat(frac, scale);
  } else if (pos < text.size() && text[pos] == '/') {
    ++pos;
    Int den;
    if (!digits(den) || den == 0) return std::nullopt;
    value = Rat(whole, den);
  }
  if (pos != text.size()) return std::nullopt;
  if (neg) value = -value;
  return value;
}

}  // namespace tropdual
