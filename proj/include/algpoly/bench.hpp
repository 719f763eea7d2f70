#pragma once

// Benchmark families and arithmetic classes. Every family yields a cone over
// a polytope with integer generators (v, 1); the classes differ in the scalar
// type and, for the scaled ones, in multiplying every other non-homogenizing
// coordinate by the field generator.

#include <chrono>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "algpoly/combinat.hpp"
#include "algpoly/dualize.hpp"
#include "algpoly/element_io.hpp"

namespace algpoly::bench {

// Entries are GMP integers: t^d exceeds 64 bits already for C(15, 23).
using IntRows = std::vector<std::vector<Integer>>;

/// Vertices (t, t^2, ..., t^d, 1) for t = 1..n.
inline IntRows cyclic(int d, int n) {
  IntRows rows;
  for (long t = 1; t <= n; ++t) {
    std::vector<Integer> r;
    Integer x = 1;
    for (int k = 0; k < d; ++k) r.push_back(x *= t);
    r.push_back(1);
    rows.push_back(std::move(r));
  }
  return rows;
}

/// The 0/1 cube of dimension d.
inline IntRows cube(int d) {
  IntRows rows;
  for (long m = 0; m < (1L << d); ++m) {
    std::vector<Integer> r;
    for (int k = 0; k < d; ++k) r.push_back((m >> k) & 1);
    r.push_back(1);
    rows.push_back(std::move(r));
  }
  return rows;
}

/// Linear order polytope of S_k: for each permutation, the indicator of
/// "i before j" for all pairs i < j.
inline IntRows linear_order(int k) {
  std::vector<int> perm(static_cast<std::size_t>(k));
  std::iota(perm.begin(), perm.end(), 0);
  IntRows rows;
  do {
    std::vector<int> pos(perm.size());
    for (std::size_t i = 0; i < perm.size(); ++i) pos[static_cast<std::size_t>(perm[i])] = static_cast<int>(i);
    std::vector<Integer> r;
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j) r.push_back(pos[static_cast<std::size_t>(i)] < pos[static_cast<std::size_t>(j)] ? 1 : 0);
    r.push_back(1);
    rows.push_back(std::move(r));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return rows;
}

/// "cyclic:D:N", "cube:D" or "order:K".
inline IntRows family(const std::string& spec) {
  std::vector<std::string> parts;
  std::stringstream ss(spec);
  for (std::string part; std::getline(ss, part, ':');) parts.push_back(part);
  auto num = [&](std::size_t i) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(parts.at(i), &used);
      if (used != parts[i].size() || v < 1) throw std::invalid_argument("");
      return v;
    } catch (const std::exception&) {
      fail(ErrorKind::InvalidArgument, "bad benchmark family '" + spec + "'");
    }
  };
  if (parts.size() == 3 && parts[0] == "cyclic") {
    if (num(1) >= num(2)) fail(ErrorKind::InvalidArgument, "cyclic:D:N needs D < N");
    return cyclic(num(1), num(2));
  }
  if (parts.size() == 2 && parts[0] == "cube") return cube(num(1));
  if (parts.size() == 2 && parts[0] == "order") return linear_order(num(1));
  fail(ErrorKind::InvalidArgument, "unknown benchmark family '" + spec + "' (use cyclic:D:N, cube:D or order:K)");
}

inline const std::vector<std::string>& class_names() {
  static const std::vector<std::string> names{"int", "mpz", "rat", "sc2", "sc8", "p12"};
  return names;
}

/// The field used by a class; nullptr for the integer classes.
inline FieldPtr class_field(const std::string& cls) {
  static const FieldPtr q5 = NumberField::create(parse_poly("a^2 - 5"), Rational(2), Rational(3));
  static const FieldPtr r8 = NumberField::create(parse_poly("a^8 - 5"), Rational(1), Rational(2));
  static const FieldPtr p12 = NumberField::create(parse_poly("a^12 + a^6 + a^5 + a^2 - 5"), Rational(1), Rational(2));
  if (cls == "rat" || cls == "sc2") return q5;
  if (cls == "sc8") return r8;
  if (cls == "p12") return p12;
  if (cls == "int" || cls == "mpz") return nullptr;
  fail(ErrorKind::InvalidArgument, "unknown arithmetic class '" + cls + "'");
}

inline bool is_scaled(const std::string& cls) { return cls == "sc2" || cls == "sc8" || cls == "p12"; }

/// Generators over the class's field, scaled for the scaled classes.
inline std::vector<std::vector<NFElem>> field_rows(const IntRows& rows, const FieldPtr& field, bool scaled) {
  const NFElem a = NFElem::generator(field);
  std::vector<std::vector<NFElem>> out;
  for (const auto& r : rows) {
    std::vector<NFElem> v;
    for (std::size_t k = 0; k < r.size(); ++k) {
      NFElem x(field, Rational(r[k]));
      if (scaled && k + 1 < r.size() && k % 2 == 0) x *= a;
      v.push_back(std::move(x));
    }
    out.push_back(std::move(v));
  }
  return out;
}

struct Row {
  std::string cls;
  bool overflow = false;
  double seconds = 0;
  std::size_t extreme = 0;
  std::size_t facets = 0;
  std::vector<Integer> f_vector;  // empty unless requested
};

template <class T>
Row run_typed(const std::string& cls, const std::vector<std::vector<T>>& gens, const DualizeOptions& options, bool with_f_vector) {
  Row row;
  row.cls = cls;
  try {
    const auto start = std::chrono::steady_clock::now();
    auto res = dualize(gens, options);
    row.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    row.extreme = res.extreme.size();
    row.facets = res.support_forms.size();
    if (with_f_vector) {
      std::vector<std::vector<T>> extreme;
      for (auto i : res.extreme) extreme.push_back(gens[i]);
      std::vector<IndexSet> incidence;
      for (const auto& f : res.support_forms) {
        IndexSet s(extreme.size());
        for (std::size_t i = 0; i < extreme.size(); ++i)
          if (ScalarTraits<T>::is_zero(dot(f, extreme[i]))) s.set(i);
        incidence.push_back(std::move(s));
      }
      row.f_vector = face_lattice(extreme, incidence, extreme.size(), static_cast<long>(res.rank) - 1).f_vector;
    }
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::ArithmeticOverflow) throw;
    row = Row{};
    row.cls = cls;
    row.overflow = true;
  }
  return row;
}

inline Row run_class(const IntRows& rows, const std::string& cls, const DualizeOptions& options, bool with_f_vector) {
  if (cls == "int") {
    std::vector<std::vector<CheckedInt>> g;
    for (const auto& r : rows) {
      g.emplace_back();
      for (const auto& x : r) {
        if (!x.fits_slong_p()) {
          Row row;
          row.cls = cls;
          row.overflow = true;
          return row;
        }
        g.back().emplace_back(x.get_si());
      }
    }
    return run_typed(cls, g, options, with_f_vector);
  }
  if (cls == "mpz") return run_typed(cls, rows, options, with_f_vector);
  return run_typed(cls, field_rows(rows, class_field(cls), is_scaled(cls)), options, with_f_vector);
}

/// Plain table keyed by class; "--" marks a class that overflowed.
inline std::string report(const std::string& family_spec, const IntRows& rows, const std::vector<Row>& results) {
  std::ostringstream os;
  os << "family " << family_spec << ": " << rows.size() << " generators in dimension " << (rows.empty() ? 0 : rows[0].size())
     << '\n';
  os << "class      seconds   extreme_rays  support_hyperplanes  f-vector\n";
  for (const auto& r : results) {
    char buf[128];
    if (r.overflow) {
      std::snprintf(buf, sizeof buf, "%-5s %12s %14s %20s", r.cls.c_str(), "--", "--", "--");
      os << buf << '\n';
      continue;
    }
    std::snprintf(buf, sizeof buf, "%-5s %12.4f %14zu %20zu", r.cls.c_str(), r.seconds, r.extreme, r.facets);
    os << buf;
    if (!r.f_vector.empty()) {
      os << "  ";
      for (std::size_t i = 0; i < r.f_vector.size(); ++i) os << (i ? " " : "") << r.f_vector[i].get_str();
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace algpoly::bench
