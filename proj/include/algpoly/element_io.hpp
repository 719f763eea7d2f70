#pragma once

// Text form of field elements:
//   element := rational | "(" poly [ "~" decimal ] ")"
//   poly    := [sign] term { sign term }
//   term    := coef [ ["*"] "a" ["^" int] ] | "a" ["^" int]
//   coef    := int [ "/" int ] | decimal
// The "~ approximation" suffix produced by the renderer is accepted and ignored.

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>

#include "algpoly/numfield.hpp"

namespace algpoly {

namespace detail {

class PolyParser {
 public:
  explicit PolyParser(std::string_view text) : text_(text) {}

  RatPoly parse_poly() {
    RatPoly result;
    skip_ws();
    bool first = true;
    while (!at_end() && peek() != ')' && peek() != '~') {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = get() == '-' ? -1 : 1;
        skip_ws();
      } else if (!first) {
        error("expected '+' or '-' between terms");
      }
      auto [coef, exponent] = parse_term();
      if (result.size() <= exponent) result.resize(exponent + 1);
      result[exponent] += sign * coef;
      first = false;
      skip_ws();
    }
    if (first) error("empty polynomial");
    poly::trim(result);
    return result;
  }

  Rational parse_number() {
    skip_ws();
    int sign = 1;
    if (peek() == '+' || peek() == '-') sign = get() == '-' ? -1 : 1;
    return sign * parse_unsigned();
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  char get() { return text_[pos_++]; }
  std::size_t pos() const { return pos_; }

  [[noreturn]] void error(const std::string& msg) const {
    fail(ErrorKind::SyntaxError, msg + " at offset " + std::to_string(pos_) + " in \"" + std::string(text_) + "\"");
  }

 private:
  std::pair<Rational, std::size_t> parse_term() {
    Rational coef = 1;
    bool has_coef = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coef = parse_unsigned();
      has_coef = true;
      skip_ws();
      if (peek() == '*') {
        get();
        skip_ws();
        if (peek() != 'a') error("expected 'a' after '*'");
      }
    }
    if (peek() != 'a') {
      if (!has_coef) error("expected a coefficient or 'a'");
      return {coef, 0};
    }
    get();
    skip_ws();
    std::size_t exponent = 1;
    if (peek() == '^') {
      get();
      skip_ws();
      if (!std::isdigit(static_cast<unsigned char>(peek()))) error("expected exponent");
      exponent = 0;
      while (std::isdigit(static_cast<unsigned char>(peek()))) exponent = exponent * 10 + static_cast<std::size_t>(get() - '0');
    }
    return {coef, exponent};
  }

  Rational parse_unsigned() {
    std::string digits;
    while (std::isdigit(static_cast<unsigned char>(peek()))) digits += get();
    if (digits.empty()) error("expected a number");
    if (peek() == '.') {
      get();
      std::string frac;
      while (std::isdigit(static_cast<unsigned char>(peek()))) frac += get();
      Rational r(Integer(digits + frac, 10), pow10(frac.size()));
      r.canonicalize();
      return r;
    }
    if (peek() == '/') {
      get();
      std::string den;
      while (std::isdigit(static_cast<unsigned char>(peek()))) den += get();
      if (den.empty()) error("expected denominator");
      Integer d(den, 10);
      if (sgn(d) == 0) fail(ErrorKind::BadDenominator, "zero denominator in \"" + std::string(text_) + "\"");
      Rational r(Integer(digits, 10), d);
      r.canonicalize();
      return r;
    }
    return Rational(Integer(digits, 10));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses a polynomial in `a` such as "a^2 - 5" (no surrounding brackets).
inline RatPoly parse_poly(std::string_view text) {
  detail::PolyParser p(text);
  RatPoly r = p.parse_poly();
  p.skip_ws();
  if (!p.at_end()) p.error("unexpected trailing characters");
  return r;
}

/// Parses one element token: a rational number or a bracketed polynomial.
inline NFElem parse_elem(std::string_view text, const FieldPtr& field) {
  detail::PolyParser p(text);
  p.skip_ws();
  RatPoly value;
  if (p.peek() == '(') {
    p.get();
    value = p.parse_poly();
    p.skip_ws();
    if (p.peek() == '~') {
      p.get();
      p.parse_number();
      p.skip_ws();
    }
    if (p.peek() != ')') p.error("expected ')'");
    p.get();
  } else {
    value = RatPoly{p.parse_number()};
    poly::trim(value);
  }
  p.skip_ws();
  if (!p.at_end()) p.error("unexpected trailing characters");
  if (field->is_rational_field() && value.size() > 1 && field.get() == NumberField::rationals().get())
    fail(ErrorKind::FieldElementOutsideGrammar, "'a' used in \"" + std::string(text) + "\" but no number field is defined");
  return NFElem::from_poly(field, value);
}

namespace detail {

inline std::string rational_text(const Rational& q) { return q.get_str(); }

/// Terms from the highest power down, e.g. "5/2*a+15/2"; `spaced` puts
/// blanks around the binary operators ("a^2 - 5").
inline std::string poly_text(const RatPoly& p, bool spaced) {
  std::string out;
  for (std::size_t i = p.size(); i-- > 0;) {
    const Rational& c = p[i];
    if (sgn(c) == 0) continue;
    const bool negative = sgn(c) < 0;
    const Rational mag = abs(c);
    std::string term;
    if (i == 0) {
      term = rational_text(mag);
    } else {
      if (mag != 1) term = rational_text(mag) + "*";
      term += "a";
      if (i > 1) term += "^" + std::to_string(i);
    }
    if (out.empty()) {
      out = (negative ? "-" : "") + term;
    } else if (spaced) {
      out += (negative ? " - " : " + ") + term;
    } else {
      out += (negative ? "-" : "+") + term;
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace detail

/// Rational values print plainly ("-3", "1/2"); others as
/// "(poly ~ approximation)" with `digits` fractional digits.
inline std::string render_elem(const NFElem& x, unsigned digits = 6) {
  if (auto q = x.as_rational()) return detail::rational_text(*q);
  return "(" + detail::poly_text(x.to_poly(), false) + " ~ " + to_fixed(x, digits) + ")";
}

inline std::string render_poly(const RatPoly& p) { return detail::poly_text(p, true); }

}  // namespace algpoly
