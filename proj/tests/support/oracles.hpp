#pragma once

// Brute-force reference computations. They share no code with the library
// beyond the scalar types themselves.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "algpoly/numfield.hpp"

namespace algpoly::oracle {

using Vec = std::vector<NFElem>;

inline NFElem dot(const Vec& a, const Vec& b) {
  NFElem s(a[0].field());
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

/// Row echelon rank by plain Gaussian elimination.
inline std::size_t rank(std::vector<Vec> m) {
  if (m.empty()) return 0;
  const std::size_t cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c].is_zero()) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = r + 1; i < m.size(); ++i) {
      if (m[i][c].is_zero()) continue;
      const NFElem f = m[i][c] / m[r][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return r;
}

/// A nonzero vector orthogonal to all rows of a (cols-1) x cols matrix of
/// rank cols-1, via cofactor expansion: x_j = (-1)^j det(M without column j).
inline NFElem det(std::vector<Vec> m) {
  const std::size_t n = m.size();
  NFElem d(m[0][0].field(), 1L);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c].is_zero()) ++p;
    if (p == n) return NFElem(d.field());
    if (p != c) {
      std::swap(m[p], m[c]);
      d = -d;
    }
    d *= m[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m[i][c].is_zero()) continue;
      const NFElem f = m[i][c] / m[c][c];
      for (std::size_t j = c; j < n; ++j) m[i][j] -= f * m[c][j];
    }
  }
  return d;
}

inline Vec cofactor_normal(const std::vector<Vec>& rows) {
  const std::size_t cols = rows[0].size();
  Vec x;
  for (std::size_t j = 0; j < cols; ++j) {
    std::vector<Vec> minor;
    for (const auto& r : rows) {
      Vec m;
      for (std::size_t k = 0; k < cols; ++k)
        if (k != j) m.push_back(r[k]);
      minor.push_back(std::move(m));
    }
    NFElem v = minor.empty() ? NFElem(rows[0][0].field(), 1L) : det(minor);
    x.push_back(j % 2 ? -v : v);
  }
  return x;
}

/// Whether u = c v for some c > 0.
inline bool positively_proportional(const Vec& u, const Vec& v) {
  if (u.size() != v.size()) return false;
  std::size_t k = 0;
  while (k < u.size() && u[k].is_zero()) ++k;
  if (k == u.size() || v[k].is_zero()) return false;
  const NFElem c = v[k] / u[k];
  if (c.sign() <= 0) return false;
  for (std::size_t i = 0; i < u.size(); ++i)
    if (u[i] * c != v[i]) return false;
  return true;
}

/// Same multiset of rays up to positive scaling.
inline bool same_rays(const std::vector<Vec>& a, const std::vector<Vec>& b) {
  if (a.size() != b.size()) return false;
  std::vector<bool> used(b.size(), false);
  for (const auto& x : a) {
    bool found = false;
    for (std::size_t j = 0; j < b.size() && !found; ++j)
      if (!used[j] && positively_proportional(x, b[j])) used[j] = found = true;
    if (!found) return false;
  }
  return true;
}

/// Facets of a full-dimensional pointed cone: all (d-1)-subsets of generators
/// of rank d-1, their normal oriented to be >= 0 on every generator, deduped.
inline std::vector<Vec> brute_force_facets(const std::vector<Vec>& gens) {
  const std::size_t d = gens[0].size();
  const std::size_t n = gens.size();
  std::vector<Vec> facets;
  std::vector<bool> pick(n, false);
  std::fill(pick.begin(), pick.begin() + static_cast<long>(d - 1), true);
  do {
    std::vector<Vec> rows;
    for (std::size_t i = 0; i < n; ++i)
      if (pick[i]) rows.push_back(gens[i]);
    if (d > 1 && rank(rows) != d - 1) continue;
    Vec normal = cofactor_normal(rows);
    int orientation = 0;
    bool ok = true;
    for (const auto& g : gens) {
      const int s = dot(normal, g).sign();
      if (s == 0) continue;
      if (orientation == 0) orientation = s;
      if (s != orientation) {
        ok = false;
        break;
      }
    }
    if (!ok || orientation == 0) continue;
    if (orientation < 0)
      for (auto& x : normal) x = -x;
    bool dup = false;
    for (const auto& f : facets) dup = dup || positively_proportional(f, normal);
    if (!dup) facets.push_back(normal);
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return facets;
}

/// Generators of a pointed full-dimensional cone that span extreme rays:
/// the facets through g have rank d-1. Among positive multiples keep the first.
inline std::vector<std::size_t> extreme_generators(const std::vector<Vec>& gens, const std::vector<Vec>& facets) {
  const std::size_t d = gens[0].size();
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    std::vector<Vec> through;
    for (const auto& f : facets)
      if (dot(f, gens[i]).is_zero()) through.push_back(f);
    if (rank(through) + 1 != d) continue;
    bool dup = false;
    for (auto j : out) dup = dup || positively_proportional(gens[j], gens[i]);
    if (!dup) out.push_back(i);
  }
  return out;
}

/// Number of facets of the cyclic polytope C(d, n) by Gale's evenness
/// condition: d-subsets S of {0..n-1} such that between any two elements not
/// in S the number of elements of S is even.
inline std::uint64_t gale_facet_count(int d, int n) {
  std::uint64_t count = 0;
  std::vector<int> s(d);
  std::function<void(int, int)> rec = [&](int pos, int start) {
    if (pos == d) {
      std::vector<bool> in(n, false);
      for (int x : s) in[x] = true;
      int last_out = -1;
      for (int i = 0; i < n; ++i) {
        if (in[i]) continue;
        if (last_out >= 0) {
          int between = 0;
          for (int j = last_out + 1; j < i; ++j) between += in[j];
          if (between % 2) return;
        }
        last_out = i;
      }
      ++count;
      return;
    }
    for (int x = start; x <= n - (d - pos); ++x) {
      s[pos] = x;
      rec(pos + 1, x + 1);
    }
  };
  rec(0, 0);
  return count;
}

/// Integer points x in the box [lo, hi] with every inequality f(x,1) >= 0.
inline std::set<std::vector<long>> box_scan(const std::vector<Vec>& inequalities, const std::vector<long>& lo,
                                            const std::vector<long>& hi) {
  std::set<std::vector<long>> out;
  const std::size_t d = lo.size();
  std::vector<long> x(lo);
  const FieldPtr field = inequalities[0][0].field();
  while (true) {
    bool ok = true;
    for (const auto& f : inequalities) {
      NFElem v = f[d];
      for (std::size_t i = 0; i < d; ++i) v += f[i] * NFElem(field, x[i]);
      if (v.sign() < 0) {
        ok = false;
        break;
      }
    }
    if (ok) out.insert(x);
    std::size_t k = 0;
    while (k < d && x[k] == hi[k]) {
      x[k] = lo[k];
      ++k;
    }
    if (k == d) break;
    ++x[k];
  }
  return out;
}

/// Permutations of {0..n-1} satisfying `keep`, by exhaustive enumeration.
inline std::size_t count_permutations(std::size_t n, const std::function<bool(const std::vector<std::size_t>&)>& keep) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::size_t count = 0;
  do count += keep(p);
  while (std::next_permutation(p.begin(), p.end()));
  return count;
}

}  // namespace algpoly::oracle
