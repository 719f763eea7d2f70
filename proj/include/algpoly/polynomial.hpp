#pragma once

// Dense univariate polynomials over Q. Index i holds the coefficient of a^i.

#include <gmpxx.h>

#include <cstddef>
#include <utility>
#include <vector>

#include "algpoly/error.hpp"

namespace algpoly {

using Integer = mpz_class;
using Rational = mpq_class;
using RatPoly = std::vector<Rational>;

namespace poly {

inline void trim(RatPoly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

inline RatPoly trimmed(RatPoly p) {
  trim(p);
  return p;
}

/// Degree of a trimmed polynomial; -1 for the zero polynomial.
inline long degree(const RatPoly& p) { return static_cast<long>(p.size()) - 1; }

inline bool is_zero(const RatPoly& p) { return p.empty(); }

inline Rational eval(const RatPoly& p, const Rational& x) {
  Rational acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

inline RatPoly derivative(const RatPoly& p) {
  RatPoly d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<long>(i));
  trim(d);
  return d;
}

inline RatPoly add(const RatPoly& a, const RatPoly& b) {
  RatPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  trim(r);
  return r;
}

inline RatPoly sub(const RatPoly& a, const RatPoly& b) {
  RatPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

inline RatPoly mul(const RatPoly& a, const RatPoly& b) {
  if (a.empty() || b.empty()) return {};
  RatPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

inline RatPoly scale(const RatPoly& a, const Rational& c) {
  RatPoly r = a;
  for (auto& x : r) x *= c;
  trim(r);
  return r;
}

/// Quotient and remainder of a by b (b nonzero).
inline std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b) {
  if (b.empty()) fail(ErrorKind::DivisionByZero, "polynomial division by zero");
  RatPoly rem = trimmed(a);
  if (rem.size() < b.size()) return {RatPoly{}, rem};
  RatPoly quot(rem.size() - b.size() + 1);
  const Rational& lead = b.back();
  while (!rem.empty() && rem.size() >= b.size()) {
    const std::size_t shift = rem.size() - b.size();
    Rational c = rem.back() / lead;
    quot[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) rem[shift + i] -= c * b[i];
    rem.pop_back();  // leading term cancels exactly
    trim(rem);
  }
  trim(quot);
  return {quot, rem};
}

inline RatPoly rem(const RatPoly& a, const RatPoly& b) { return divmod(a, b).second; }

inline RatPoly monic(RatPoly p) {
  trim(p);
  if (p.empty()) return p;
  Rational lead = p.back();
  for (auto& c : p) c /= lead;
  return p;
}

inline RatPoly gcd(RatPoly a, RatPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    RatPoly r = rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

/// Returns (g, s) with s*a == g (mod m) and g = gcd(a, m) monic.
inline std::pair<RatPoly, RatPoly> gcdex_mod(const RatPoly& a, const RatPoly& m) {
  RatPoly r0 = trimmed(m), r1 = trimmed(a);
  RatPoly s0, s1{Rational(1)};
  while (!r1.empty()) {
    auto [q, r] = divmod(r0, r1);
    RatPoly s2 = sub(s0, mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r0.empty()) return {r0, s0};
  Rational lead = r0.back();
  return {scale(r0, 1 / lead), scale(s0, 1 / lead)};
}

/// Sturm chain p, p', -rem(p, p'), ...
inline std::vector<RatPoly> sturm_chain(const RatPoly& p) {
  std::vector<RatPoly> chain{trimmed(p)};
  RatPoly d = derivative(chain[0]);
  if (d.empty()) return chain;
  chain.push_back(d);
  while (true) {
    RatPoly r = rem(chain[chain.size() - 2], chain.back());
    if (r.empty()) break;
    chain.push_back(scale(r, -1));
  }
  return chain;
}

inline int sign_changes(const std::vector<RatPoly>& chain, const Rational& x) {
  int changes = 0, last = 0;
  for (const auto& p : chain) {
    int s = sgn(eval(p, x));
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

/// Number of distinct real roots in the half-open interval (lo, hi].
inline int count_real_roots(const RatPoly& p, const Rational& lo, const Rational& hi) {
  auto chain = sturm_chain(p);
  return sign_changes(chain, lo) - sign_changes(chain, hi);
}

}  // namespace poly
}  // namespace algpoly
