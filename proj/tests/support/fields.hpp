#pragma once

#include <random>

#include "algpoly/element_io.hpp"
#include "algpoly/numfield.hpp"

namespace algpoly::testing {

inline FieldPtr sqrt5() {
  static const FieldPtr f = NumberField::create(parse_poly("a^2 - 5"), Rational(1), Rational(3));
  return f;
}

// a^8 = 5, a > 0
inline FieldPtr root8_of_5() {
  static const FieldPtr f = NumberField::create(parse_poly("a^8 - 5"), Rational(1), Rational(2));
  return f;
}

// a^12 + a^6 + a^5 + a^2 - 5 = 0, a > 1
inline FieldPtr p12() {
  static const FieldPtr f = NumberField::create(parse_poly("a^12 + a^6 + a^5 + a^2 - 5"), Rational(1), Rational(2));
  return f;
}

inline NFElem q(const FieldPtr& f, long num, long den = 1) { return NFElem(f, Rational(num, den)); }
inline NFElem el(const FieldPtr& f, const char* text) { return parse_elem(text, f); }

/// Random element with small coefficients; `max_den` > 1 gives fractions.
inline NFElem random_elem(const FieldPtr& f, std::mt19937_64& rng, long range = 20, long max_den = 6) {
  std::uniform_int_distribution<long> c(-range, range), d(1, max_den);
  std::vector<Integer> num(f->degree());
  for (auto& x : num) x = c(rng);
  return NFElem(f, std::move(num), Integer(d(rng)));
}

}  // namespace algpoly::testing
