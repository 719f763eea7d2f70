#pragma once

// Scalar types the cone algorithms are instantiated with, and the traits
// that give the algorithms a uniform view of them:
//   NFElem      - exact number field arithmetic (ordered field)
//   mpz_class   - arbitrary precision integers (ordered ring)
//   CheckedInt  - 64-bit machine integers that throw on overflow

#include <gmpxx.h>

#include <cstdint>
#include <numeric>
#include <span>
#include <string>

#include "algpoly/element_io.hpp"
#include "algpoly/numfield.hpp"

namespace algpoly {

class CheckedInt {
 public:
  constexpr CheckedInt() = default;
  constexpr CheckedInt(std::int64_t v) : v_(v) {}  // NOLINT(google-explicit-constructor)

  constexpr std::int64_t value() const { return v_; }

  friend CheckedInt operator+(CheckedInt x, CheckedInt y) {
    std::int64_t r;
    if (__builtin_add_overflow(x.v_, y.v_, &r)) overflow();
    return r;
  }
  friend CheckedInt operator-(CheckedInt x, CheckedInt y) {
    std::int64_t r;
    if (__builtin_sub_overflow(x.v_, y.v_, &r)) overflow();
    return r;
  }
  friend CheckedInt operator*(CheckedInt x, CheckedInt y) {
    std::int64_t r;
    if (__builtin_mul_overflow(x.v_, y.v_, &r)) overflow();
    return r;
  }
  friend CheckedInt operator/(CheckedInt x, CheckedInt y) {
    if (y.v_ == 0) fail(ErrorKind::DivisionByZero, "integer division by zero");
    if (x.v_ == INT64_MIN && y.v_ == -1) overflow();
    return x.v_ / y.v_;
  }
  CheckedInt operator-() const { return CheckedInt(0) - *this; }
  CheckedInt& operator+=(CheckedInt y) { return *this = *this + y; }
  CheckedInt& operator-=(CheckedInt y) { return *this = *this - y; }
  CheckedInt& operator*=(CheckedInt y) { return *this = *this * y; }
  friend bool operator==(CheckedInt x, CheckedInt y) { return x.v_ == y.v_; }
  friend auto operator<=>(CheckedInt x, CheckedInt y) { return x.v_ <=> y.v_; }

 private:
  [[noreturn]] static void overflow() { fail(ErrorKind::ArithmeticOverflow, "64-bit integer overflow"); }
  std::int64_t v_ = 0;
};

template <class T>
struct ScalarTraits;

template <>
struct ScalarTraits<NFElem> {
  static constexpr bool is_field = true;
  static NFElem zero(const NFElem& like) { return NFElem(like.field()); }
  static NFElem one(const NFElem& like) { return NFElem(like.field(), 1L); }
  static int sign(const NFElem& x) { return x.sign(); }
  static bool is_zero(const NFElem& x) { return x.is_zero(); }
  static NFElem divexact(const NFElem& a, const NFElem& b) { return a / b; }
  static NFElem inverse(const NFElem& a) { return a.inverse(); }
  static std::string to_string(const NFElem& x) { return render_elem(x); }

  /// Positive rescaling to a canonical representative. Over Q the vector is
  /// made a primitive integer vector. Otherwise it is divided by the absolute
  /// value of its last nonzero entry and then multiplied by the lcm of the
  /// entries' denominators.
  static void normalize(std::span<NFElem> v) {
    std::size_t last = v.size();
    for (std::size_t i = v.size(); i-- > 0;)
      if (!v[i].is_zero()) {
        last = i;
        break;
      }
    if (last == v.size()) fail(ErrorKind::ZeroVector, "cannot normalize the zero vector");
    const FieldPtr& field = v[last].field();
    if (field->is_rational_field()) {
      Integer l = 1, g = 0;
      for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.denominator().get_mpz_t());
      std::vector<Integer> ints;
      ints.reserve(v.size());
      for (const auto& x : v) {
        ints.push_back(x.numerators()[0] * (l / x.denominator()));
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ints.back().get_mpz_t());
      }
      for (std::size_t i = 0; i < v.size(); ++i) v[i] = NFElem(field, Rational(ints[i] / g));
      return;
    }
    const NFElem scale = v[last].abs().inverse();
    Integer l = 1;
    for (auto& x : v) {
      if (x.is_zero()) continue;
      x *= scale;
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.denominator().get_mpz_t());
    }
    if (l != 1) {
      const NFElem factor(field, Rational(l));
      for (auto& x : v) x *= factor;
    }
  }
};

template <>
struct ScalarTraits<mpz_class> {
  static constexpr bool is_field = false;
  static mpz_class zero(const mpz_class&) { return 0; }
  static mpz_class one(const mpz_class&) { return 1; }
  static int sign(const mpz_class& x) { return sgn(x); }
  static bool is_zero(const mpz_class& x) { return sgn(x) == 0; }
  static mpz_class divexact(const mpz_class& a, const mpz_class& b) {
    mpz_class r;
    mpz_divexact(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
  }
  static std::string to_string(const mpz_class& x) { return x.get_str(); }

  /// Divides by the gcd of the entries.
  static void normalize(std::span<mpz_class> v) {
    mpz_class g = 0;
    for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (sgn(g) == 0) fail(ErrorKind::ZeroVector, "cannot normalize the zero vector");
    if (g == 1) return;
    for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  }
};

template <>
struct ScalarTraits<CheckedInt> {
  static constexpr bool is_field = false;
  static CheckedInt zero(const CheckedInt&) { return 0; }
  static CheckedInt one(const CheckedInt&) { return 1; }
  static int sign(CheckedInt x) { return x.value() > 0 ? 1 : (x.value() < 0 ? -1 : 0); }
  static bool is_zero(CheckedInt x) { return x.value() == 0; }
  static CheckedInt divexact(CheckedInt a, CheckedInt b) { return a / b; }
  static std::string to_string(CheckedInt x) { return std::to_string(x.value()); }

  static void normalize(std::span<CheckedInt> v) {
    std::int64_t g = 0;
    for (auto x : v) g = std::gcd(g, x.value());
    if (g == 0) fail(ErrorKind::ZeroVector, "cannot normalize the zero vector");
    if (g == 1) return;
    for (auto& x : v) x = x.value() / g;
  }
};

template <class T>
concept ConeScalar = requires(const T& a, const T& b) {
  { a + b } -> std::convertible_to<T>;
  { a - b } -> std::convertible_to<T>;
  { a * b } -> std::convertible_to<T>;
  { ScalarTraits<T>::sign(a) } -> std::convertible_to<int>;
  { ScalarTraits<T>::is_zero(a) } -> std::convertible_to<bool>;
};

}  // namespace algpoly
