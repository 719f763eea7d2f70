#pragma once

// Exact arithmetic in a real embedded algebraic number field Q[a].
//
// An element is stored as (c_0 + c_1 a + ... + c_{n-1} a^{n-1}) / d with
// integer c_i and a positive integer d, kept in lowest terms after every
// operation. Signs are decided by interval evaluation of the numerator
// polynomial on an enclosure of a; the enclosure is refined on demand.

#include <gmpxx.h>

#include <algorithm>
#include <cstdio>
#include <cstddef>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "algpoly/error.hpp"
#include "algpoly/polynomial.hpp"

namespace algpoly {

class NumberField;
using FieldPtr = std::shared_ptr<const NumberField>;

/// Snapshot of the current enclosure of the generator. Immutable once
/// published; refinement publishes a new, nested snapshot.
struct GeneratorApprox {
  Rational lo, hi;
  long precision = 0;  // hi - lo <= 2^-precision
  bool exact = false;  // lo == hi == a (degree-1 fields)
  // Outward dyadic rounding of [lo, hi]: [dyadic_lo, dyadic_hi] * 2^dyadic_exp.
  Integer dyadic_lo, dyadic_hi;
  long dyadic_exp = 0;
};

namespace detail {

inline Integer floor_q(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

inline Integer ceil_q(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

inline Rational pow2(long e) {
  Rational r = 1;
  if (e >= 0)
    mpz_mul_2exp(r.get_num_mpz_t(), r.get_num_mpz_t(), static_cast<mp_bitcnt_t>(e));
  else
    mpz_mul_2exp(r.get_den_mpz_t(), r.get_den_mpz_t(), static_cast<mp_bitcnt_t>(-e));
  r.canonicalize();
  return r;
}

inline Integer pow10(unsigned long e) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
  return r;
}

/// Closed interval [lo, hi] * 2^exp with integer endpoints.
struct DyadicInterval {
  Integer lo, hi;
  long exp = 0;
};

inline void shift_left(Integer& v, long s) {
  mpz_mul_2exp(v.get_mpz_t(), v.get_mpz_t(), static_cast<mp_bitcnt_t>(s));
}

/// Drops low-order bits so that both endpoints fit into `bits` bits,
/// rounding outward.
inline void round_outward(DyadicInterval& v, long bits) {
  const long blo = static_cast<long>(mpz_sizeinbase(v.lo.get_mpz_t(), 2));
  const long bhi = static_cast<long>(mpz_sizeinbase(v.hi.get_mpz_t(), 2));
  const long b = std::max(blo, bhi);
  if (b <= bits) return;
  const auto s = static_cast<mp_bitcnt_t>(b - bits);
  mpz_fdiv_q_2exp(v.lo.get_mpz_t(), v.lo.get_mpz_t(), s);
  mpz_cdiv_q_2exp(v.hi.get_mpz_t(), v.hi.get_mpz_t(), s);
  v.exp += static_cast<long>(s);
}

inline void add_integer(DyadicInterval& v, const Integer& c) {
  if (v.exp > 0) {
    shift_left(v.lo, v.exp);
    shift_left(v.hi, v.exp);
    v.exp = 0;
  }
  if (v.exp == 0) {
    v.lo += c;
    v.hi += c;
    return;
  }
  Integer s = c;
  shift_left(s, -v.exp);
  v.lo += s;
  v.hi += s;
}

inline void mul_interval(DyadicInterval& v, const Integer& glo, const Integer& ghi, long gexp) {
  Integer lo, hi;
  if (sgn(glo) >= 0) {
    lo = (sgn(v.lo) >= 0 ? v.lo * glo : v.lo * ghi);
    hi = (sgn(v.hi) >= 0 ? v.hi * ghi : v.hi * glo);
  } else if (sgn(ghi) <= 0) {
    lo = (sgn(v.hi) >= 0 ? v.hi * glo : v.hi * ghi);
    hi = (sgn(v.lo) >= 0 ? v.lo * ghi : v.lo * glo);
  } else {
    Integer p1 = v.lo * glo, p2 = v.lo * ghi, p3 = v.hi * glo, p4 = v.hi * ghi;
    lo = std::min({p1, p2, p3, p4});
    hi = std::max({p1, p2, p3, p4});
  }
  v.lo = std::move(lo);
  v.hi = std::move(hi);
  v.exp += gexp;
}

/// Horner evaluation of sum num[i] a^i over the generator enclosure,
/// keeping `bits` bits of working precision.
inline DyadicInterval eval_enclosure(const std::vector<Integer>& num, const GeneratorApprox& g, long bits) {
  DyadicInterval acc{num.back(), num.back(), 0};
  for (std::size_t i = num.size() - 1; i-- > 0;) {
    mul_interval(acc, g.dyadic_lo, g.dyadic_hi, g.dyadic_exp);
    add_integer(acc, num[i]);
    round_outward(acc, bits);
  }
  return acc;
}

inline Rational to_rational(const Integer& m, long exp) {
  Rational r(m);
  return r * pow2(exp);
}

}  // namespace detail

class NumberField {
 public:
  struct PrivateTag {};

  NumberField(PrivateTag, RatPoly monic_poly, Rational lo, Rational hi)
      : min_poly_(std::move(monic_poly)), lo_(std::move(lo)), hi_(std::move(hi)) {
    integral_ = std::all_of(min_poly_.begin(), min_poly_.end(),
                            [](const Rational& c) { return c.get_den() == 1; });
    if (integral_)
      for (const auto& c : min_poly_) min_poly_int_.push_back(c.get_num());
    sign_at_lo_ = sgn(poly::eval(min_poly_, lo_));
  }

  /// Validates the polynomial and interval and computes the initial
  /// 64-bit enclosure of the generator.
  static FieldPtr create(const RatPoly& min_poly, const Rational& lo, const Rational& hi) {
    RatPoly p = poly::trimmed(min_poly);
    if (p.empty()) fail(ErrorKind::ZeroPolynomial, "minimal polynomial is zero");
    if (p.size() == 1) fail(ErrorKind::NoRootInInterval, "constant minimal polynomial has no root");
    p = poly::monic(std::move(p));
    if (!(lo < hi)) fail(ErrorKind::InvalidArgument, "embedding interval must satisfy lo < hi");
    if (poly::degree(poly::gcd(p, poly::derivative(p))) > 0)
      fail(ErrorKind::NotSquareFree, "minimal polynomial is not square-free");
    if (sgn(poly::eval(p, lo)) == 0 || sgn(poly::eval(p, hi)) == 0)
      fail(ErrorKind::NoRootInInterval, "an endpoint of the embedding interval is a root");
    const int roots = poly::count_real_roots(p, lo, hi);
    if (roots != 1)
      fail(ErrorKind::NoRootInInterval,
           "embedding interval contains " + std::to_string(roots) + " real roots, expected exactly 1");
    auto field = std::make_shared<NumberField>(PrivateTag{}, std::move(p), lo, hi);
    field->initialize_generator();
    return field;
  }

  /// The field Q, presented as Q[a] with a = 0.
  static FieldPtr rationals() {
    static const FieldPtr q = create(RatPoly{Rational(0), Rational(1)}, Rational(-1), Rational(1));
    return q;
  }

  std::size_t degree() const { return min_poly_.size() - 1; }
  bool is_rational_field() const { return degree() == 1; }
  const RatPoly& min_poly() const { return min_poly_; }
  bool integral_min_poly() const { return integral_; }
  const std::vector<Integer>& min_poly_integral() const { return min_poly_int_; }
  const Rational& interval_lo() const { return lo_; }
  const Rational& interval_hi() const { return hi_; }

  std::shared_ptr<const GeneratorApprox> generator() const {
    std::lock_guard lock(mutex_);
    return approx_;
  }

  long precision() const { return generator()->precision; }

  /// Shrinks the enclosure of a until its width is at most 2^-bits. Calls
  /// that ask for less than the current precision return immediately.
  void refine(long bits) const {
    std::lock_guard lock(mutex_);
    if (approx_->exact || approx_->precision >= bits) return;
    Rational lo = approx_->lo, hi = approx_->hi;
    const Rational target = detail::pow2(-bits);
    while (hi - lo > target) {
      const Rational w = hi - lo;
      // 2^-q <= w/8
      const long q = static_cast<long>(mpz_sizeinbase(w.get_den_mpz_t(), 2)) -
                     static_cast<long>(mpz_sizeinbase(w.get_num_mpz_t(), 2)) + 4;
      // dyadic point near the midpoint, strictly inside (lo, hi)
      Rational mid = Rational(detail::floor_q((lo + hi) / 2 * detail::pow2(q))) * detail::pow2(-q);
      if (mid <= lo || mid >= hi) mid = (lo + hi) / 2;
      const int s = sgn(poly::eval(min_poly_, mid));
      if (s == 0) {
        lo = hi = mid;
        break;
      }
      (s == sign_at_lo_ ? lo : hi) = mid;
    }
    approx_ = make_approx(std::move(lo), std::move(hi), bits);
  }

 private:
  void initialize_generator() {
    if (is_rational_field()) {
      Rational root = -min_poly_[0];
      approx_ = make_approx(root, root, 0);
      return;
    }
    approx_ = make_approx(lo_, hi_, 0);
    refine(64);
  }

  static std::shared_ptr<const GeneratorApprox> make_approx(Rational lo, Rational hi, long bits) {
    auto g = std::make_shared<GeneratorApprox>();
    g->exact = (lo == hi);
    g->precision = g->exact ? (1L << 30) : bits;
    const long q = std::max(64L, bits + 8);
    g->dyadic_lo = detail::floor_q(lo * detail::pow2(q));
    g->dyadic_hi = detail::ceil_q(hi * detail::pow2(q));
    g->dyadic_exp = -q;
    g->lo = std::move(lo);
    g->hi = std::move(hi);
    return g;
  }

  RatPoly min_poly_;
  Rational lo_, hi_;
  bool integral_ = false;
  std::vector<Integer> min_poly_int_;
  int sign_at_lo_ = 0;
  mutable std::mutex mutex_;
  mutable std::shared_ptr<const GeneratorApprox> approx_;
};

/// Element of a number field in canonical form.
class NFElem {
 public:
  NFElem() = default;

  explicit NFElem(FieldPtr field) : field_(std::move(field)), num_(field_->degree()), den_(1) {}

  NFElem(FieldPtr field, long value) : NFElem(std::move(field)) { num_[0] = value; }

  NFElem(FieldPtr field, const Rational& value) : NFElem(std::move(field)) {
    num_[0] = value.get_num();
    den_ = value.get_den();
  }

  NFElem(FieldPtr field, std::vector<Integer> num, Integer den)
      : field_(std::move(field)), num_(std::move(num)), den_(std::move(den)) {
    if (num_.size() != field_->degree()) fail(ErrorKind::ShapeMismatch, "coefficient count differs from field degree");
    canonicalize();
  }

  /// Reduces a rational polynomial in a modulo the minimal polynomial.
  static NFElem from_poly(FieldPtr field, const RatPoly& p) {
    RatPoly r = poly::rem(p, field->min_poly());
    Integer den = 1;
    for (const auto& c : r) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    std::vector<Integer> num(field->degree());
    for (std::size_t i = 0; i < r.size(); ++i) num[i] = r[i].get_num() * (den / r[i].get_den());
    return NFElem(std::move(field), std::move(num), std::move(den));
  }

  static NFElem generator(FieldPtr field) {
    RatPoly a{Rational(0), Rational(1)};
    return from_poly(std::move(field), a);
  }

  const FieldPtr& field() const { return field_; }
  const std::vector<Integer>& numerators() const { return num_; }
  const Integer& denominator() const { return den_; }

  bool is_zero() const {
    return std::all_of(num_.begin(), num_.end(), [](const Integer& c) { return sgn(c) == 0; });
  }

  /// The rational value iff all coefficients of a^1..a^{n-1} vanish.
  std::optional<Rational> as_rational() const {
    for (std::size_t i = 1; i < num_.size(); ++i)
      if (sgn(num_[i]) != 0) return std::nullopt;
    if (num_.empty()) return Rational(0);
    Rational q(num_[0], den_);
    q.canonicalize();
    return q;
  }

  bool is_rational() const { return as_rational().has_value(); }

  RatPoly to_poly() const {
    RatPoly p;
    for (const auto& c : num_) {
      Rational q(c, den_);
      q.canonicalize();
      p.push_back(q);
    }
    poly::trim(p);
    return p;
  }

  /// Exact sign. Zero is decided structurally; a nonzero sign by interval
  /// evaluation, first raising the working precision of the element and then
  /// the precision of the generator until the enclosure excludes zero.
  int sign() const {
    if (is_zero()) return 0;
    if (num_.size() == 1 || is_rational()) return sgn(num_[0]);
    long work = 64;
    for (;;) {
      auto g = field_->generator();
      if (g->exact) return sgn(exact_value(*g));
      auto v = detail::eval_enclosure(num_, *g, work);
      if (sgn(v.lo) > 0) return 1;
      if (sgn(v.hi) < 0) return -1;
      if (work <= g->precision)
        work *= 2;
      else
        field_->refine(2 * g->precision);
    }
  }

  /// Rational enclosure [lo, hi] of the value with relative working precision
  /// `bits` on a generator of at least `bits` correct bits.
  std::pair<Rational, Rational> enclose(long bits) const {
    if (auto q = as_rational()) return {*q, *q};
    field_->refine(bits);
    auto g = field_->generator();
    if (g->exact) {
      Rational v = exact_value(*g);
      return {v, v};
    }
    auto v = detail::eval_enclosure(num_, *g, bits + 16);
    Rational d(den_);
    return {detail::to_rational(v.lo, v.exp) / d, detail::to_rational(v.hi, v.exp) / d};
  }

  NFElem abs() const { return sign() < 0 ? -*this : *this; }

  /// Largest integer not exceeding the value.
  Integer floor() const {
    if (auto q = as_rational()) return detail::floor_q(*q);
    for (long bits = 64;; bits *= 2) {
      auto [lo, hi] = enclose(bits);
      Integer kl = detail::floor_q(lo), kh = detail::floor_q(hi);
      if (kl == kh) return kl;
      if (kh == kl + 1) return (*this - NFElem(field_, Rational(kh))).sign() >= 0 ? kh : kl;
    }
  }

  Integer ceil() const { return -((-*this).floor()); }

  NFElem inverse() const {
    if (is_zero()) fail(ErrorKind::DivisionByZero, "inverse of zero");
    if (num_.size() == 1) {
      NFElem r(field_);
      r.num_[0] = den_;
      r.den_ = num_[0];
      r.canonicalize();
      return r;
    }
    auto [g, s] = poly::gcdex_mod(to_poly(), field_->min_poly());
    if (poly::degree(g) != 0)
      fail(ErrorKind::DivisionByZero, "element is a zero divisor; the minimal polynomial is reducible");
    return from_poly(field_, s);
  }

  NFElem operator-() const {
    NFElem r = *this;
    for (auto& c : r.num_) c = -c;
    return r;
  }

  NFElem& operator+=(const NFElem& y) { return add_scaled(y, 1); }
  NFElem& operator-=(const NFElem& y) { return add_scaled(y, -1); }

  NFElem& operator*=(const NFElem& y) {
    check_same_field(y);
    const std::size_t n = num_.size();
    if (n == 1) {
      num_[0] *= y.num_[0];
      den_ *= y.den_;
      canonicalize();
      return *this;
    }
    if (is_zero() || y.is_zero()) {
      for (auto& c : num_) c = 0;
      den_ = 1;
      return *this;
    }
    if (!field_->integral_min_poly()) {
      RatPoly p = poly::mul(to_poly(), y.to_poly());
      *this = from_poly(field_, p);
      return *this;
    }
    std::vector<Integer> prod(2 * n - 1);
    for (std::size_t i = 0; i < n; ++i) {
      if (sgn(num_[i]) == 0) continue;
      for (std::size_t j = 0; j < n; ++j) mpz_addmul(prod[i + j].get_mpz_t(), num_[i].get_mpz_t(), y.num_[j].get_mpz_t());
    }
    const auto& mu = field_->min_poly_integral();
    for (std::size_t k = 2 * n - 2; k >= n; --k) {
      if (sgn(prod[k]) == 0) continue;
      for (std::size_t i = 0; i < n; ++i)
        if (sgn(mu[i]) != 0) mpz_submul(prod[k - n + i].get_mpz_t(), prod[k].get_mpz_t(), mu[i].get_mpz_t());
    }
    prod.resize(n);
    num_ = std::move(prod);
    den_ *= y.den_;
    canonicalize();
    return *this;
  }

  NFElem& operator/=(const NFElem& y) {
    check_same_field(y);
    return *this *= y.inverse();
  }

  friend NFElem operator+(NFElem x, const NFElem& y) { return x += y; }
  friend NFElem operator-(NFElem x, const NFElem& y) { return x -= y; }
  friend NFElem operator*(NFElem x, const NFElem& y) { return x *= y; }
  friend NFElem operator/(NFElem x, const NFElem& y) { return x /= y; }

  /// Structural equality of canonical forms.
  friend bool operator==(const NFElem& x, const NFElem& y) {
    return x.field_ == y.field_ && x.den_ == y.den_ && x.num_ == y.num_;
  }

  friend int compare(const NFElem& x, const NFElem& y) { return (x - y).sign(); }
  friend bool operator<(const NFElem& x, const NFElem& y) { return compare(x, y) < 0; }
  friend bool operator>(const NFElem& x, const NFElem& y) { return compare(x, y) > 0; }
  friend bool operator<=(const NFElem& x, const NFElem& y) { return compare(x, y) <= 0; }
  friend bool operator>=(const NFElem& x, const NFElem& y) { return compare(x, y) >= 0; }

  void check_same_field(const NFElem& y) const {
    if (!field_ || field_ != y.field_) fail(ErrorKind::FieldMismatch, "elements belong to different number fields");
  }

 private:
  NFElem& add_scaled(const NFElem& y, int s) {
    check_same_field(y);
    if (den_ == y.den_) {
      for (std::size_t i = 0; i < num_.size(); ++i) {
        if (s > 0)
          num_[i] += y.num_[i];
        else
          num_[i] -= y.num_[i];
      }
    } else {
      Integer l;
      mpz_lcm(l.get_mpz_t(), den_.get_mpz_t(), y.den_.get_mpz_t());
      Integer fx = l / den_, fy = l / y.den_;
      for (std::size_t i = 0; i < num_.size(); ++i) {
        num_[i] *= fx;
        if (s > 0)
          mpz_addmul(num_[i].get_mpz_t(), y.num_[i].get_mpz_t(), fy.get_mpz_t());
        else
          mpz_submul(num_[i].get_mpz_t(), y.num_[i].get_mpz_t(), fy.get_mpz_t());
      }
      den_ = std::move(l);
    }
    canonicalize();
    return *this;
  }

  Rational exact_value(const GeneratorApprox& g) const {
    Rational acc = 0;
    for (std::size_t i = num_.size(); i-- > 0;) acc = acc * g.lo + Rational(num_[i]);
    return acc / Rational(den_);
  }

  void canonicalize() {
    if (sgn(den_) == 0) fail(ErrorKind::DivisionByZero, "zero denominator");
    if (sgn(den_) < 0) {
      den_ = -den_;
      for (auto& c : num_) c = -c;
    }
    if (den_ == 1) return;
    if (is_zero()) {
      den_ = 1;
      return;
    }
    Integer g = den_;
    for (const auto& c : num_) {
      if (sgn(c) == 0) continue;
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
      if (g == 1) return;
    }
    for (auto& c : num_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
  }

  FieldPtr field_;
  std::vector<Integer> num_;
  Integer den_{1};
};

/// Total order on canonical forms that needs no sign decisions; used to key
/// maps by value.
struct StructuralLess {
  bool operator()(const NFElem& x, const NFElem& y) const {
    if (x.denominator() != y.denominator()) return x.denominator() < y.denominator();
    return x.numerators() < y.numerators();
  }
};

inline Integer floor_log10(const Rational& positive) {
  // initial guess from digit counts, then correct
  long e = static_cast<long>(mpz_sizeinbase(positive.get_num_mpz_t(), 10)) -
           static_cast<long>(mpz_sizeinbase(positive.get_den_mpz_t(), 10));
  auto pow10q = [](long k) {
    return k >= 0 ? Rational(detail::pow10(static_cast<unsigned long>(k)))
                  : Rational(Integer(1), detail::pow10(static_cast<unsigned long>(-k)));
  };
  while (pow10q(e) > positive) --e;
  while (pow10q(e + 1) <= positive) ++e;
  return e;
}

namespace detail {

inline Integer round_half_away(const Rational& q) {
  return sgn(q) >= 0 ? floor_q(q + Rational(1, 2)) : -floor_q(-q + Rational(1, 2));
}

inline std::string fixed_digits(const Integer& scaled, unsigned digits, bool negative) {
  Integer m = abs(scaled);
  std::string s = m.get_str();
  if (s.size() <= digits) s.insert(0, digits + 1 - s.size(), '0');
  if (digits > 0) s.insert(s.size() - digits, ".");
  if (negative) s.insert(0, "-");
  return s;
}

}  // namespace detail

/// Decimal rendering with exactly `digits` fractional digits, correctly
/// rounded to nearest.
inline std::string to_fixed(const NFElem& x, unsigned digits) {
  const Rational scale(detail::pow10(digits));
  if (auto q = x.as_rational()) {
    Integer n = detail::round_half_away(*q * scale);
    return detail::fixed_digits(n, digits, sgn(*q) < 0);
  }
  for (long bits = 64;; bits *= 2) {
    auto [lo, hi] = x.enclose(bits);
    Integer a = detail::round_half_away(lo * scale), b = detail::round_half_away(hi * scale);
    if (a == b) return detail::fixed_digits(a, digits, sgn(lo) < 0 || (sgn(a) == 0 && sgn(hi) < 0));
  }
}

namespace detail {

// (mantissa with `sig` digits, decimal exponent of the leading digit)
inline std::pair<Integer, long> round_significant(const Rational& positive, unsigned sig) {
  long e = floor_log10(positive).get_si();
  long shift = static_cast<long>(sig) - 1 - e;
  Rational scaled = positive;
  if (shift >= 0)
    scaled *= Rational(pow10(static_cast<unsigned long>(shift)));
  else
    scaled /= Rational(pow10(static_cast<unsigned long>(-shift)));
  Integer m = round_half_away(scaled);
  if (m == pow10(sig)) {
    m = pow10(sig - 1);
    ++e;
  }
  return {m, e};
}

inline std::string format_significant(const Integer& mantissa, long e, unsigned sig, bool negative) {
  std::string digits = mantissa.get_str();
  std::string out;
  if (e >= -5 && e < static_cast<long>(sig)) {
    if (e >= 0) {
      out = digits.substr(0, static_cast<std::size_t>(e) + 1);
      std::string frac = digits.substr(static_cast<std::size_t>(e) + 1);
      while (!frac.empty() && frac.back() == '0') frac.pop_back();
      if (!frac.empty()) out += "." + frac;
    } else {
      std::string frac = std::string(static_cast<std::size_t>(-e - 1), '0') + digits;
      while (!frac.empty() && frac.back() == '0') frac.pop_back();
      out = "0." + frac;
    }
  } else {
    std::string frac = digits.substr(1);
    while (!frac.empty() && frac.back() == '0') frac.pop_back();
    out = digits.substr(0, 1) + (frac.empty() ? "" : "." + frac);
    char buf[32];
    std::snprintf(buf, sizeof buf, "e%c%02ld", e < 0 ? '-' : '+', e < 0 ? -e : e);
    out += buf;
  }
  return negative ? "-" + out : out;
}

}  // namespace detail

/// Decimal rendering with `sig` significant digits in the style of printf's
/// %g (trailing zeros removed).
inline std::string to_significant(const NFElem& x, unsigned sig) {
  const int s = x.sign();
  if (s == 0) return "0";
  const NFElem ax = s < 0 ? -x : x;
  if (auto q = ax.as_rational()) {
    auto [m, e] = detail::round_significant(*q, sig);
    return detail::format_significant(m, e, sig, s < 0);
  }
  for (long bits = 64;; bits *= 2) {
    auto [lo, hi] = ax.enclose(bits);
    if (sgn(lo) <= 0) continue;
    auto a = detail::round_significant(lo, sig);
    auto b = detail::round_significant(hi, sig);
    if (a == b) return detail::format_significant(a.first, a.second, sig, s < 0);
  }
}

}  // namespace algpoly
