#pragma once

// Dense exact linear algebra. Over fields (NFElem) elimination divides by
// pivots; over the integer types it is fraction-free (Bareiss). Pivots are
// the first nonzero entry in column order.

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "algpoly/error.hpp"
#include "algpoly/scalar.hpp"

namespace algpoly {

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix from_rows(const std::vector<std::vector<T>>& rows) {
    Matrix m;
    m.rows_ = rows.size();
    m.cols_ = rows.empty() ? 0 : rows[0].size();
    m.data_.reserve(m.rows_ * m.cols_);
    for (const auto& r : rows) {
      if (r.size() != m.cols_) fail(ErrorKind::ShapeMismatch, "ragged rows");
      m.data_.insert(m.data_.end(), r.begin(), r.end());
    }
    return m;
  }

  static Matrix identity(std::size_t n, const T& like) {
    Matrix m(n, n, ScalarTraits<T>::zero(like));
    for (std::size_t i = 0; i < n; ++i) m(i, i) = ScalarTraits<T>::one(like);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<T> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const T> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
  std::vector<T> row_vector(std::size_t i) const { return {row(i).begin(), row(i).end()}; }

  std::vector<std::vector<T>> to_rows() const {
    std::vector<std::vector<T>> out;
    for (std::size_t i = 0; i < rows_; ++i) out.push_back(row_vector(i));
    return out;
  }

  Matrix transpose() const {
    Matrix t;
    t.rows_ = cols_;
    t.cols_ = rows_;
    t.data_.reserve(data_.size());
    for (std::size_t j = 0; j < cols_; ++j)
      for (std::size_t i = 0; i < rows_; ++i) t.data_.push_back((*this)(i, j));
    return t;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }

  friend bool operator==(const Matrix& x, const Matrix& y) {
    return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.data_ == y.data_;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<T> data_;
};

template <class T>
T dot(std::span<const T> a, std::span<const T> b) {
  if (a.size() != b.size() || a.empty()) fail(ErrorKind::ShapeMismatch, "dot product of incompatible vectors");
  T acc = a[0] * b[0];
  for (std::size_t i = 1; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

template <class T>
T dot(const std::vector<T>& a, const std::vector<T>& b) {
  return dot(std::span<const T>(a), std::span<const T>(b));
}

template <class T>
Matrix<T> multiply(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.cols() != b.rows() || a.cols() == 0) fail(ErrorKind::ShapeMismatch, "matrix product of incompatible shapes");
  Matrix<T> c(a.rows(), b.cols(), ScalarTraits<T>::zero(a(0, 0)));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      T acc = a(i, 0) * b(0, j);
      for (std::size_t k = 1; k < a.cols(); ++k) acc += a(i, k) * b(k, j);
      c(i, j) = std::move(acc);
    }
  return c;
}

namespace detail {

/// Incremental echelon basis: rows are added one at a time and reduced
/// against the accepted ones; each accepted row owns a distinct pivot column.
template <class T>
class EchelonBasis {
 public:
  explicit EchelonBasis(std::size_t dim) : dim_(dim) {}

  /// Returns true and keeps the row if it is independent of those accepted.
  bool add(std::span<const T> v) {
    auto r = reduce(v);
    std::size_t p = first_nonzero(r);
    if (p == dim_) return false;
    rows_.push_back(std::move(r));
    pivots_.push_back(p);
    return true;
  }

  bool independent(std::span<const T> v) const { return first_nonzero(reduce(v)) != dim_; }

  std::size_t rank() const { return rows_.size(); }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  const std::vector<std::vector<T>>& rows() const { return rows_; }

 private:
  using Tr = ScalarTraits<T>;

  std::size_t first_nonzero(const std::vector<T>& v) const {
    for (std::size_t i = 0; i < v.size(); ++i)
      if (!Tr::is_zero(v[i])) return i;
    return dim_;
  }

  std::vector<T> reduce(std::span<const T> v) const {
    if (v.size() != dim_) fail(ErrorKind::ShapeMismatch, "vector length differs from ambient dimension");
    std::vector<T> r(v.begin(), v.end());
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      const std::size_t p = pivots_[k];
      if (Tr::is_zero(r[p])) continue;
      const auto& b = rows_[k];
      if constexpr (Tr::is_field) {
        const T f = r[p] / b[p];
        for (std::size_t j = 0; j < dim_; ++j)
          if (!Tr::is_zero(b[j])) r[j] -= f * b[j];
      } else {
        const T f = r[p], g = b[p];
        for (std::size_t j = 0; j < dim_; ++j) r[j] = g * r[j] - f * b[j];
        if (first_nonzero(r) != dim_) Tr::normalize(r);
      }
    }
    return r;
  }

  std::size_t dim_;
  std::vector<std::vector<T>> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace detail

template <class T>
std::size_t rank(const Matrix<T>& m) {
  detail::EchelonBasis<T> basis(m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    basis.add(m.row(i));
    if (basis.rank() == m.cols()) break;
  }
  return basis.rank();
}

template <class T>
std::size_t rank(const std::vector<std::vector<T>>& rows) {
  if (rows.empty()) return 0;
  detail::EchelonBasis<T> basis(rows[0].size());
  for (const auto& r : rows) {
    basis.add(r);
    if (basis.rank() == rows[0].size()) break;
  }
  return basis.rank();
}

template <class T>
T det(Matrix<T> m) {
  using Tr = ScalarTraits<T>;
  if (m.rows() != m.cols() || m.rows() == 0) fail(ErrorKind::ShapeMismatch, "determinant of a non-square matrix");
  const std::size_t n = m.rows();
  int sign = 1;
  if constexpr (Tr::is_field) {
    T result = Tr::one(m(0, 0));
    for (std::size_t k = 0; k < n; ++k) {
      std::size_t p = k;
      while (p < n && Tr::is_zero(m(p, k))) ++p;
      if (p == n) return Tr::zero(m(0, 0));
      if (p != k) {
        m.swap_rows(p, k);
        sign = -sign;
      }
      const T inv = Tr::inverse(m(k, k));
      result *= m(k, k);
      for (std::size_t i = k + 1; i < n; ++i) {
        if (Tr::is_zero(m(i, k))) continue;
        const T f = m(i, k) * inv;
        for (std::size_t j = k; j < n; ++j)
          if (!Tr::is_zero(m(k, j))) m(i, j) -= f * m(k, j);
      }
    }
    return sign > 0 ? result : -result;
  } else {
    T prev = Tr::one(m(0, 0));
    for (std::size_t k = 0; k + 1 < n; ++k) {
      std::size_t p = k;
      while (p < n && Tr::is_zero(m(p, k))) ++p;
      if (p == n) return Tr::zero(m(0, 0));
      if (p != k) {
        m.swap_rows(p, k);
        sign = -sign;
      }
      for (std::size_t i = k + 1; i < n; ++i) {
        for (std::size_t j = k + 1; j < n; ++j) m(i, j) = Tr::divexact(m(k, k) * m(i, j) - m(i, k) * m(k, j), prev);
        m(i, k) = Tr::zero(prev);
      }
      prev = m(k, k);
    }
    return sign > 0 ? m(n - 1, n - 1) : -m(n - 1, n - 1);
  }
}

/// Returns (R, s) with m * R == s * I and s != 0. Over fields s = 1 and R is
/// the inverse; over integer types R is computed fraction-free.
template <class T>
std::pair<Matrix<T>, T> scaled_inverse(const Matrix<T>& m) {
  using Tr = ScalarTraits<T>;
  if (m.rows() != m.cols() || m.rows() == 0) fail(ErrorKind::ShapeMismatch, "inverse of a non-square matrix");
  const std::size_t n = m.rows();
  const T zero = Tr::zero(m(0, 0));
  Matrix<T> a(n, 2 * n, zero);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a(i, j) = m(i, j);
    a(i, n + i) = Tr::one(zero);
  }
  T prev = Tr::one(zero);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && Tr::is_zero(a(p, k))) ++p;
    if (p == n) fail(ErrorKind::SingularMatrix, "matrix is singular");
    a.swap_rows(p, k);
    if constexpr (Tr::is_field) {
      const T inv = Tr::inverse(a(k, k));
      for (std::size_t j = 0; j < 2 * n; ++j)
        if (!Tr::is_zero(a(k, j))) a(k, j) *= inv;
      for (std::size_t i = 0; i < n; ++i) {
        if (i == k || Tr::is_zero(a(i, k))) continue;
        const T f = a(i, k);
        for (std::size_t j = 0; j < 2 * n; ++j)
          if (!Tr::is_zero(a(k, j))) a(i, j) -= f * a(k, j);
      }
    } else {
      for (std::size_t i = 0; i < n; ++i) {
        if (i == k) continue;
        for (std::size_t j = 0; j < 2 * n; ++j) {
          if (j == k) continue;
          a(i, j) = Tr::divexact(a(k, k) * a(i, j) - a(i, k) * a(k, j), prev);
        }
        a(i, k) = zero;
      }
      prev = a(k, k);
    }
  }
  Matrix<T> r(n, n, zero);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) r(i, j) = a(i, n + j);
  if constexpr (Tr::is_field)
    return {std::move(r), Tr::one(zero)};
  else
    return {std::move(r), prev};
}

/// Exact inverse over a field.
template <class T>
Matrix<T> invert(const Matrix<T>& m) {
  static_assert(ScalarTraits<T>::is_field, "invert requires field arithmetic");
  return scaled_inverse(m).first;
}

/// Unique solution x of m x = b over a field.
template <class T>
std::vector<T> solve(const Matrix<T>& m, const std::vector<T>& b) {
  static_assert(ScalarTraits<T>::is_field, "solve requires field arithmetic");
  if (m.rows() != b.size()) fail(ErrorKind::ShapeMismatch, "right-hand side length differs from row count");
  const Matrix<T> inv = invert(m);
  std::vector<T> x;
  for (std::size_t i = 0; i < inv.rows(); ++i) x.push_back(dot(inv.row(i), std::span<const T>(b)));
  return x;
}

/// Indices of the lexicographically first linearly independent subset of
/// `rows` spanning their span (greedy in input order).
template <class T>
std::vector<std::size_t> independent_subset(const std::vector<std::vector<T>>& rows) {
  std::vector<std::size_t> chosen;
  if (rows.empty()) return chosen;
  detail::EchelonBasis<T> basis(rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (basis.add(rows[i])) chosen.push_back(i);
    if (basis.rank() == rows[0].size()) break;
  }
  return chosen;
}

/// Indices of d linearly independent generators in d-space.
template <class T>
std::vector<std::size_t> find_basis_among(const std::vector<std::vector<T>>& generators) {
  auto chosen = independent_subset(generators);
  const std::size_t d = generators.empty() ? 0 : generators[0].size();
  if (chosen.size() != d) fail(ErrorKind::RankDeficient, "generators do not span the ambient space");
  return chosen;
}

/// Coordinates on the linear span of a set of generators: projection onto the
/// pivot columns of an echelon basis, which is injective on the span.
template <class T>
struct SpanRestriction {
  std::size_t ambient_dim = 0;
  std::vector<std::size_t> coordinates;  // kept pivot columns, increasing

  std::size_t rank() const { return coordinates.size(); }
  bool is_identity() const { return coordinates.size() == ambient_dim; }

  std::vector<T> project(std::span<const T> v) const {
    std::vector<T> r;
    r.reserve(coordinates.size());
    for (std::size_t c : coordinates) r.push_back(v[c]);
    return r;
  }

  /// A linear form on the span given in restricted coordinates, extended by
  /// zero to the ambient space.
  std::vector<T> lift_form(std::span<const T> form, const T& like) const {
    std::vector<T> r(ambient_dim, ScalarTraits<T>::zero(like));
    for (std::size_t i = 0; i < coordinates.size(); ++i) r[coordinates[i]] = form[i];
    return r;
  }
};

template <class T>
std::pair<SpanRestriction<T>, std::vector<std::vector<T>>> restrict_to_span(const std::vector<std::vector<T>>& generators) {
  if (generators.empty()) fail(ErrorKind::InvalidArgument, "restrict_to_span needs at least one generator");
  const std::size_t d = generators[0].size();
  detail::EchelonBasis<T> basis(d);
  for (const auto& g : generators) {
    basis.add(g);
    if (basis.rank() == d) break;
  }
  SpanRestriction<T> s;
  s.ambient_dim = d;
  s.coordinates = basis.pivots();
  std::sort(s.coordinates.begin(), s.coordinates.end());
  std::vector<std::vector<T>> projected;
  projected.reserve(generators.size());
  for (const auto& g : generators) projected.push_back(s.project(g));
  return {std::move(s), std::move(projected)};
}

/// Basis of {x : r . x = 0 for every row r} over a field.
template <class T>
std::vector<std::vector<T>> kernel_basis(const std::vector<std::vector<T>>& rows, std::size_t dim, const T& like) {
  using Tr = ScalarTraits<T>;
  static_assert(Tr::is_field, "kernel_basis requires field arithmetic");
  // reduced row echelon form
  std::vector<std::vector<T>> m = rows;
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < dim && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && Tr::is_zero(m[p][c])) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    const T inv = Tr::inverse(m[r][c]);
    for (auto& x : m[r])
      if (!Tr::is_zero(x)) x *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || Tr::is_zero(m[i][c])) continue;
      const T f = m[i][c];
      for (std::size_t j = 0; j < dim; ++j)
        if (!Tr::is_zero(m[r][j])) m[i][j] -= f * m[r][j];
    }
    pivot_cols.push_back(c);
    ++r;
  }
  std::vector<bool> is_pivot(dim, false);
  for (auto c : pivot_cols) is_pivot[c] = true;
  std::vector<std::vector<T>> basis;
  for (std::size_t f = 0; f < dim; ++f) {
    if (is_pivot[f]) continue;
    std::vector<T> v(dim, Tr::zero(like));
    v[f] = Tr::one(like);
    for (std::size_t i = 0; i < pivot_cols.size(); ++i) v[pivot_cols[i]] = -m[i][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace algpoly
