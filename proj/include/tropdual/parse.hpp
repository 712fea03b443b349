#pragma once

#include <algorithm>
#include <cctype>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tropdual/polynomial.hpp"

namespace tropdual {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, size_t position)
      : std::runtime_error("parse error at position " + std::to_string(position) + ": " +
                           message),
        position_(position) {}
  size_t position() const { return position_; }

 private:
  size_t position_;
};

/// Ambient variable layout of a parsed expression: total variable count and
/// the index rendered as the embedding variable y (-1 when y is absent).
struct VarSpec {
  int total = 1;
  int embed_index = -1;

  int base_vars() const { return embed_index >= 0 ? total - 1 : total; }
};

namespace detail {

enum class TokKind { Num, Ident, Plus, Minus, Star, Caret, LParen, RParen, Tilde, Semi, Comma, End };

struct Token {
  TokKind kind;
  std::string text;
  Rat value;
  size_t pos = 0;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) { advance(); }

  const Token& peek() const { return tok_; }

  Token next() {
    Token t = tok_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    tok_.pos = pos_;
    tok_.text.clear();
    if (pos_ >= text_.size()) {
      tok_.kind = TokKind::End;
      return;
    }
    char c = text_[pos_];
    auto sym = [&](TokKind k) {
      tok_.kind = k;
      tok_.text = c;
      ++pos_;
    };
    switch (c) {
      case '+': sym(TokKind::Plus); return;
      case '-': sym(TokKind::Minus); return;
      case '*': sym(TokKind::Star); return;
      case '^': sym(TokKind::Caret); return;
      case '(': sym(TokKind::LParen); return;
      case ')': sym(TokKind::RParen); return;
      case '~': sym(TokKind::Tilde); return;
      case ';': sym(TokKind::Semi); return;
      case ',': sym(TokKind::Comma); return;
      default: break;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (pos_ + 1 < text_.size() && (text_[pos_] == '/' || text_[pos_] == '.') &&
          std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
        ++pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      }
      tok_.kind = TokKind::Num;
      tok_.text = std::string(text_.substr(start, pos_ - start));
      auto r = rat_from_string(tok_.text);
      if (!r) throw ParseError("bad number '" + tok_.text + "'", start);
      tok_.value = *r;
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      tok_.kind = TokKind::Ident;
      tok_.text = std::string(text_.substr(start, pos_ - start));
      return;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", pos_);
  }

  std::string_view text_;
  size_t pos_ = 0;
  Token tok_;
};

class PolyParser {
 public:
  PolyParser(std::string_view text, VarSpec spec) : lex_(text), spec_(spec) {}

  /// poly := ['-'] addend (('+' | '-') addend)*
  /// A '-' negates the leading numeric literal of the next addend; it exists
  /// so dual literals like 3-2e read as 3 + (-2)e.
  DualPolynomial parse_poly() {
    bool negate = consume_if(TokKind::Minus);
    DualPolynomial f = parse_addend(negate);
    while (true) {
      if (consume_if(TokKind::Plus)) {
        bool neg = consume_if(TokKind::Minus);
        f = poly_add(f, parse_addend(neg));
      } else if (peek_kind() == TokKind::Minus) {
        lex_.next();
        f = poly_add(f, parse_addend(true));
      } else {
        break;
      }
    }
    return f;
  }

  void expect_end() {
    if (peek_kind() != TokKind::End)
      throw ParseError("unexpected trailing input '" + lex_.peek().text + "'", lex_.peek().pos);
  }

  bool consume_if(TokKind k) {
    if (peek_kind() == k) {
      lex_.next();
      return true;
    }
    return false;
  }

  TokKind peek_kind() const { return lex_.peek().kind; }
  const Token& peek() const { return lex_.peek(); }

 private:
  /// addend := factor ('*' factor | 'e')*   with 'e' acting as *ε (fused 2e).
  DualPolynomial parse_addend(bool negate_leading) {
    DualPolynomial acc = parse_factor(negate_leading);
    while (true) {
      if (consume_if(TokKind::Star)) {
        acc = poly_mul(acc, parse_factor(false));
      } else if (peek_kind() == TokKind::Ident && lex_.peek().text == "e") {
        lex_.next();
        acc = poly_mul(acc, DualPolynomial::constant(spec_.total, DualValue::eps()));
      } else {
        break;
      }
    }
    return acc;
  }

  DualPolynomial parse_factor(bool negate) {
    const Token& t = lex_.peek();
    switch (t.kind) {
      case TokKind::LParen: {
        lex_.next();
        DualPolynomial inner = parse_poly();
        if (!consume_if(TokKind::RParen)) throw ParseError("expected ')'", lex_.peek().pos);
        return inner;
      }
      case TokKind::Num: {
        Token num = lex_.next();
        Rat v = negate ? Rat(-num.value) : num.value;
        return DualPolynomial::constant(spec_.total, DualValue::from_trop(TropValue(v)));
      }
      case TokKind::Ident: {
        if (negate) throw ParseError("'-' must be followed by a number", t.pos);
        if (t.text == "inf") {
          lex_.next();
          return DualPolynomial::zero(spec_.total);
        }
        if (t.text == "e") {
          lex_.next();
          return DualPolynomial::constant(spec_.total, DualValue::eps());
        }
        return parse_var_power();
      }
      default:
        throw ParseError("expected a term", t.pos);
    }
  }

  DualPolynomial parse_var_power() {
    Token name = lex_.next();
    int index = var_index(name);
    int exp = 1;
    if (consume_if(TokKind::Caret)) {
      const Token& e = lex_.peek();
      if (e.kind != TokKind::Num || rat_den(e.value) != 1 || e.value < 0)
        throw ParseError("exponent must be a nonnegative integer", e.pos);
      exp = static_cast<int>(rat_num(e.value).convert_to<long long>());
      lex_.next();
    }
    ExponentVector n(spec_.total, 0);
    n[index] = exp;
    return DualPolynomial::monomial(spec_.total, n, DualValue::one());
  }

  int var_index(const Token& name) const {
    const std::string& s = name.text;
    if (s == "y") {
      if (spec_.embed_index < 0)
        throw ParseError("variable y is not available here", name.pos);
      return spec_.embed_index;
    }
    if (s == "x") {
      if (spec_.base_vars() != 1)
        throw ParseError("plain x is only valid with one variable; use x1..x" +
                             std::to_string(spec_.base_vars()),
                         name.pos);
      return 0;
    }
    if (s.size() > 1 && s[0] == 'x') {
      int idx = 0;
      for (size_t i = 1; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
          throw ParseError("unknown variable '" + s + "'", name.pos);
        idx = idx * 10 + (s[i] - '0');
      }
      if (idx < 1 || idx > spec_.base_vars())
        throw ParseError("variable '" + s + "' out of range (1.." +
                             std::to_string(spec_.base_vars()) + ")",
                         name.pos);
      return idx - 1;
    }
    throw ParseError("unknown variable '" + s + "'", name.pos);
  }

  Lexer lex_;
  VarSpec spec_;
};

}  // namespace detail

/// Scans for variable usage: returns the inferred VarSpec (max x-index, with
/// y appended as the last variable when present).  A variable-free expression
/// infers one variable.
inline VarSpec infer_vars(std::string_view text) {
  detail::Lexer lex(text);
  int max_x = 0;
  bool has_y = false;
  while (lex.peek().kind != detail::TokKind::End) {
    detail::Token t = lex.next();
    if (t.kind != detail::TokKind::Ident) continue;
    if (t.text == "y") has_y = true;
    else if (t.text.size() > 1 && t.text[0] == 'x') {
      bool numeric = true;
      int idx = 0;
      for (size_t i = 1; i < t.text.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(t.text[i]))) { numeric = false; break; }
        idx = idx * 10 + (t.text[i] - '0');
      }
      if (numeric && idx > max_x) max_x = idx;
    }
  }
  int base = std::max(max_x, 1);
  VarSpec spec;
  spec.total = base + (has_y ? 1 : 0);
  spec.embed_index = has_y ? base : -1;
  return spec;
}

inline DualPolynomial parse_polynomial(std::string_view text, const VarSpec& spec) {
  detail::PolyParser p(text, spec);
  DualPolynomial f = p.parse_poly();
  p.expect_end();
  return f;
}

inline DualPolynomial parse_polynomial(std::string_view text) {
  return parse_polynomial(text, infer_vars(text));
}

/// ';'-separated polynomial list over a common variable layout.
inline std::vector<DualPolynomial> parse_polynomial_list(std::string_view text,
                                                         const VarSpec& spec) {
  detail::PolyParser p(text, spec);
  std::vector<DualPolynomial> out;
  out.push_back(p.parse_poly());
  while (p.consume_if(detail::TokKind::Semi)) out.push_back(p.parse_poly());
  p.expect_end();
  return out;
}

inline std::vector<DualPolynomial> parse_polynomial_list(std::string_view text) {
  return parse_polynomial_list(text, infer_vars(text));
}

/// Congruence text: `f ~ g; f2 ~ g2; ...`.
inline std::vector<std::pair<DualPolynomial, DualPolynomial>> parse_relation_list(
    std::string_view text, const VarSpec& spec) {
  detail::PolyParser p(text, spec);
  std::vector<std::pair<DualPolynomial, DualPolynomial>> out;
  while (true) {
    DualPolynomial lhs = p.parse_poly();
    if (!p.consume_if(detail::TokKind::Tilde))
      throw ParseError("expected '~' between the sides of a relation", p.peek().pos);
    DualPolynomial rhs = p.parse_poly();
    out.emplace_back(std::move(lhs), std::move(rhs));
    if (!p.consume_if(detail::TokKind::Semi)) break;
  }
  p.expect_end();
  return out;
}

inline std::vector<std::pair<DualPolynomial, DualPolynomial>> parse_relation_list(
    std::string_view text) {
  return parse_relation_list(text, infer_vars(text));
}

/// Whole-string DualValue literal (`3`, `inf`, `3+1e`, `2e`, `e`).
inline DualValue parse_dual_value(std::string_view text) {
  VarSpec spec;
  spec.total = 0;
  spec.embed_index = -1;
  DualPolynomial f = parse_polynomial(text, spec);
  if (f.is_zero()) return DualValue::zero();
  return f.terms().begin()->second;
}

inline TropValue parse_trop_value(std::string_view text) {
  size_t a = text.find_first_not_of(" \t");
  size_t b = text.find_last_not_of(" \t");
  if (a == std::string_view::npos) throw ParseError("empty value", 0);
  std::string_view core = text.substr(a, b - a + 1);
  if (core == "inf") return TropValue::infinity();
  auto r = rat_from_string(core);
  if (!r) throw ParseError("bad value '" + std::string(core) + "'", a);
  return TropValue(*r);
}

/// Comma-separated T-point, e.g. "0,inf,1/2".
inline std::vector<TropValue> parse_point(std::string_view text) {
  std::vector<TropValue> out;
  size_t start = 0;
  while (true) {
    size_t comma = text.find(',', start);
    std::string_view item =
        comma == std::string_view::npos ? text.substr(start) : text.substr(start, comma - start);
    out.push_back(parse_trop_value(item));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

/// Basis-open interval: "(a,b)" bounded with a<b, "(c,inf]" a ray.
struct IntervalText {
  Rat lo;
  std::optional<Rat> hi;  // nullopt means (lo, ∞]
};

inline IntervalText parse_interval(std::string_view text) {
  size_t a = text.find_first_not_of(" \t");
  size_t b = text.find_last_not_of(" \t");
  if (a == std::string_view::npos || text[a] != '(')
    throw ParseError("interval must start with '('", a == std::string_view::npos ? 0 : a);
  std::string_view core = text.substr(a, b - a + 1);
  char close = core.back();
  if (close != ')' && close != ']')
    throw ParseError("interval must end with ')' or ']'", b);
  core = core.substr(1, core.size() - 2);
  size_t comma = core.find(',');
  if (comma == std::string_view::npos) throw ParseError("interval needs a comma", a);
  auto lo = rat_from_string(std::string(core.substr(0, comma)));
  if (!lo) throw ParseError("bad interval endpoint", a);
  std::string hi_text(core.substr(comma + 1));
  size_t h0 = hi_text.find_first_not_of(" \t");
  size_t h1 = hi_text.find_last_not_of(" \t");
  hi_text = h0 == std::string::npos ? std::string() : hi_text.substr(h0, h1 - h0 + 1);
  IntervalText out;
  out.lo = *lo;
  if (hi_text == "inf") {
    if (close != ']') throw ParseError("ray interval must close with ']'", b);
    out.hi = std::nullopt;
  } else {
    auto hi = rat_from_string(hi_text);
    if (!hi) throw ParseError("bad interval endpoint", a);
    if (close != ')') throw ParseError("bounded interval must close with ')'", b);
    out.hi = *hi;
  }
  return out;
}

}  // namespace tropdual
