#pragma once

#include <boost/multiprecision/cpp_dec_float.hpp>

#include "algpoly/numfield.hpp"

namespace algpoly::oracle {

using Dec = boost::multiprecision::cpp_dec_float_100;

// Independent 100-digit evaluation: root by bisection in decimal floating
// point, then Horner on the rational coefficients.
inline Dec decimal_root(const RatPoly& mu, Dec lo, Dec hi) {
  auto f = [&](const Dec& x) {
    Dec acc = 0;
    for (auto it = mu.rbegin(); it != mu.rend(); ++it)
      acc = acc * x + Dec(it->get_num().get_str()) / Dec(it->get_den().get_str());
    return acc;
  };
  const bool lo_negative = f(lo) < 0;
  for (int i = 0; i < 400; ++i) {
    Dec mid = (lo + hi) / 2;
    ((f(mid) < 0) == lo_negative ? lo : hi) = mid;
  }
  return (lo + hi) / 2;
}

inline Dec decimal_root(const NumberField& f) {
  return decimal_root(f.min_poly(), Dec(f.interval_lo().get_str()), Dec(f.interval_hi().get_str()));
}

inline Dec decimal_value(const NFElem& x, const Dec& root) {
  Dec acc = 0;
  const auto& num = x.numerators();
  for (std::size_t i = num.size(); i-- > 0;) acc = acc * root + Dec(num[i].get_str());
  return acc / Dec(x.denominator().get_str());
}

}  // namespace algpoly::oracle
