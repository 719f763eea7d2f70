#pragma once

// Placing triangulation, volumes, lattice points by project-and-lift, and the
// integer hull.

#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "algpoly/dualize.hpp"
#include "algpoly/polyhedron.hpp"

namespace algpoly {

struct Simplex {
  std::vector<std::size_t> generators;  // indices into the triangulated generator list
  NFElem det;                           // determinant of the generator matrix
};

struct Triangulation {
  std::vector<Vec> generators;
  std::vector<Simplex> simplices;
};

/// Placing triangulation of a full-dimensional cone, interleaved with the
/// Fourier-Motzkin steps that provide the visible facets.
inline Triangulation triangulate(const std::vector<Vec>& generators, InsertionOrder order = InsertionOrder::Input) {
  if (generators.empty()) fail(ErrorKind::NotFullDimensional, "nothing to triangulate");
  const std::size_t r = generators[0].size();
  if (rank(generators) != r) fail(ErrorKind::NotFullDimensional, "triangulation needs a full-dimensional cone");

  Triangulation tri;
  tri.generators = generators;
  const auto ord = insertion_order(generators, order);
  std::vector<Vec> ordered;
  for (auto i : ord) ordered.push_back(generators[i]);
  std::vector<std::size_t> basis;
  for (auto p : independent_subset(ordered)) basis.push_back(ord[p]);

  Dualizer<NFElem> engine(generators);
  engine.start(basis);
  std::vector<IndexSet> simplices;
  IndexSet first(generators.size());
  for (auto b : basis) first.set(b);
  simplices.push_back(first);

  for (auto g : ord) {
    if (first.test(g)) continue;
    auto report = engine.add(g);
    if (!report.outside) continue;
    std::vector<IndexSet> added;
    for (const auto& facet : report.visible_facets)
      for (const auto& s : simplices) {
        IndexSet common = s & facet;
        if (common.count() != r - 1) continue;
        common.set(g);
        added.push_back(std::move(common));
      }
    for (auto& s : added) simplices.push_back(std::move(s));
  }

  for (const auto& s : simplices) {
    Simplex simplex;
    std::vector<Vec> rows;
    for (auto i = s.find_first(); i != IndexSet::npos; i = s.find_next(i)) {
      simplex.generators.push_back(i);
      rows.push_back(generators[i]);
    }
    simplex.det = det(Matrix<NFElem>::from_rows(rows));
    tri.simplices.push_back(std::move(simplex));
  }
  return tri;
}

struct VolumeResult {
  NFElem normalized;  // lattice normalized volume, d! times the Euclidean one
  NFElem euclidean;   // exact normalized / d!
};

inline void require_polytope(const Polyhedron& p) {
  if (!p.is_polytope()) fail(ErrorKind::NotAPolytope, "the polyhedron is unbounded");
}

inline Triangulation triangulate(const Polyhedron& p, InsertionOrder order = InsertionOrder::Input) {
  if (p.empty || !p.full_dimensional()) fail(ErrorKind::NotFullDimensional, "the polyhedron is not full-dimensional");
  return triangulate(p.homogenized_generators(), order);
}

inline VolumeResult volume(const Triangulation& tri, std::size_t dim) {
  const FieldPtr field = tri.generators[0][0].field();
  NFElem total(field);
  for (const auto& s : tri.simplices) total += s.det.abs();
  Integer factorial = 1;
  for (std::size_t k = 2; k <= dim; ++k) factorial *= static_cast<unsigned long>(k);
  return {total, total / NFElem(field, Rational(factorial))};
}

inline VolumeResult volume(const Polyhedron& p, InsertionOrder order = InsertionOrder::Input) {
  require_polytope(p);
  return volume(triangulate(p, order), p.dim);
}

using LatticePoint = std::vector<Integer>;

/// Integer points of a polytope. `lift_order` lists the coordinates in the
/// order in which they are fixed; the default is 0, 1, ..., d-1.
inline std::vector<LatticePoint> lattice_points(const Polyhedron& p, std::vector<std::size_t> lift_order = {}) {
  if (p.empty) return {};
  require_polytope(p);
  const std::size_t d = p.dim;
  if (lift_order.empty()) {
    lift_order.resize(d);
    std::iota(lift_order.begin(), lift_order.end(), 0);
  }
  {
    auto check = lift_order;
    std::sort(check.begin(), check.end());
    for (std::size_t i = 0; i < check.size(); ++i)
      if (check.size() != d || check[i] != i) fail(ErrorKind::InvalidArgument, "lift order is not a permutation of the coordinates");
  }
  const FieldPtr& field = p.field;
  if (d == 0) return {LatticePoint{}};

  // constraints[k]: homogenized forms in the first k+1 lift coordinates
  // describing the projection of P onto them
  std::vector<std::vector<Vec>> constraints(d);
  for (std::size_t k = 0; k < d; ++k) {
    std::vector<Vec> projected;
    for (const auto& v : p.vertices) {
      Vec w;
      for (std::size_t j = 0; j <= k; ++j) w.push_back(v[lift_order[j]]);
      projected.push_back(std::move(w));
    }
    Polyhedron proj = polytope(field, projected);
    auto& forms = constraints[k];
    forms = proj.hyperplanes;
    for (const auto& e : proj.equations) {
      forms.push_back(e);
      Vec neg;
      for (const auto& x : e) neg.push_back(-x);
      forms.push_back(std::move(neg));
    }
  }

  std::vector<LatticePoint> out;
  LatticePoint prefix;
  std::function<void(std::size_t)> lift = [&](std::size_t k) {
    if (k == d) {
      LatticePoint x(d);
      for (std::size_t j = 0; j < d; ++j) x[lift_order[j]] = prefix[j];
      out.push_back(std::move(x));
      return;
    }
    std::optional<Integer> lo, hi;
    for (const auto& f : constraints[k]) {
      const std::size_t n = f.size();  // k + 2 entries
      NFElem rest = f[n - 1];
      for (std::size_t j = 0; j < k; ++j)
        if (!f[j].is_zero()) rest += f[j] * NFElem(field, Rational(prefix[j]));
      const NFElem& c = f[k];
      const int s = c.sign();
      if (s == 0) {
        if (rest.sign() < 0) return;
        continue;
      }
      const NFElem bound = -rest / c;
      if (s > 0) {
        Integer b = bound.ceil();
        if (!lo || b > *lo) lo = b;
      } else {
        Integer b = bound.floor();
        if (!hi || b < *hi) hi = b;
      }
    }
    if (!lo || !hi) fail(ErrorKind::NotAPolytope, "coordinate " + std::to_string(lift_order[k] + 1) + " is unbounded");
    for (Integer x = *lo; x <= *hi; ++x) {
      prefix.push_back(x);
      lift(k + 1);
      prefix.pop_back();
    }
  };
  lift(0);
  std::sort(out.begin(), out.end());
  return out;
}

/// Convex hull of the lattice points; empty if there are none.
inline Polyhedron integer_hull(const Polyhedron& p, const std::vector<LatticePoint>& points, const AnalyzeOptions& options = {}) {
  PolyhedronSpec spec;
  spec.field = p.field;
  spec.dim = p.dim;
  for (const auto& x : points) {
    Vec v;
    for (const auto& c : x) v.push_back(NFElem(p.field, Rational(c)));
    spec.vertices.push_back(std::move(v));
  }
  if (spec.vertices.empty()) return detail::empty_polyhedron(p.field, p.dim);
  return analyze(spec, options);
}

}  // namespace algpoly
