#pragma once

// Polyhedra P = conv(v_1..v_u) + cone(c_1..c_t) over a number field, handled
// through the homogenized cone C(P) generated by (v_i, 1) and (c_j, 0).
// Inequalities l(x) + b >= 0 are stored as homogenized forms (l, b).

#include <algorithm>
#include <optional>
#include <vector>

#include "algpoly/dualize.hpp"
#include "algpoly/linalg.hpp"
#include "algpoly/numfield.hpp"

namespace algpoly {

using Vec = std::vector<NFElem>;

/// Raw description as read from an input file. Vertices and rays are affine
/// (length d); inequalities and equations are homogenized (length d+1).
struct PolyhedronSpec {
  FieldPtr field = NumberField::rationals();
  std::size_t dim = 0;
  std::vector<Vec> vertices;
  std::vector<Vec> rays;
  std::vector<Vec> inequalities;
  std::vector<Vec> equations;

  bool has_generators() const { return !vertices.empty() || !rays.empty(); }
  bool has_constraints() const { return !inequalities.empty() || !equations.empty(); }
};

struct Polyhedron {
  FieldPtr field;
  std::size_t dim = 0;          // ambient dimension d
  bool empty = false;
  std::vector<Vec> vertices;    // affine, sorted
  std::vector<Vec> rays;        // normalized, sorted
  std::vector<Vec> hyperplanes; // homogenized support forms, normalized, sorted
  std::vector<Vec> equations;   // homogenized, basis of the implicit equations
  std::size_t cone_rank = 0;    // rank of C(P)
  std::size_t recession_rank = 0;

  long affine_dim() const { return empty ? -1 : static_cast<long>(cone_rank) - 1; }
  bool is_polytope() const { return rays.empty(); }
  bool full_dimensional() const { return !empty && cone_rank == dim + 1; }
  std::size_t embedding_dim() const { return dim + 1; }

  /// Generators of C(P): (v, 1) for the vertices, then (c, 0) for the rays.
  std::vector<Vec> homogenized_generators() const {
    std::vector<Vec> out;
    for (const auto& v : vertices) out.push_back(homogenize(v, 1));
    for (const auto& c : rays) out.push_back(homogenize(c, 0));
    return out;
  }

  /// Per support hyperplane, the generators (vertices then rays) it contains.
  std::vector<IndexSet> incidence() const {
    const auto gens = homogenized_generators();
    std::vector<IndexSet> out;
    for (const auto& h : hyperplanes) {
      IndexSet s(gens.size());
      for (std::size_t i = 0; i < gens.size(); ++i)
        if (dot(h, gens[i]).is_zero()) s.set(i);
      out.push_back(std::move(s));
    }
    return out;
  }

  Vec homogenize(const Vec& x, long last) const {
    Vec r = x;
    r.push_back(NFElem(field, last));
    return r;
  }
};

struct AnalyzeOptions {
  unsigned workers = 1;
  InsertionOrder order = InsertionOrder::Input;
};

/// Exact lexicographic order of vectors.
inline bool lex_less(const Vec& a, const Vec& b) {
  for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i) {
    const int c = compare(a[i], b[i]);
    if (c != 0) return c < 0;
  }
  return a.size() < b.size();
}

namespace detail {

inline void sort_unique(std::vector<Vec>& rows) {
  std::sort(rows.begin(), rows.end(), lex_less);
  rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
}

inline bool is_zero_vector(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const NFElem& x) { return x.is_zero(); });
}

inline void check_width(const std::vector<Vec>& rows, std::size_t width, const char* what) {
  for (const auto& r : rows)
    if (r.size() != width)
      fail(ErrorKind::DimensionMismatch, std::string(what) + " row has " + std::to_string(r.size()) + " entries, expected " +
                                             std::to_string(width));
}

inline Polyhedron empty_polyhedron(const FieldPtr& field, std::size_t dim) {
  Polyhedron p;
  p.field = field;
  p.dim = dim;
  p.empty = true;
  return p;
}

/// V-representation to everything else.
inline Polyhedron from_generators(const FieldPtr& field, std::size_t dim, std::vector<Vec> vertices, std::vector<Vec> rays,
                                  const AnalyzeOptions& options) {
  if (vertices.empty()) {
    if (rays.empty()) return empty_polyhedron(field, dim);
    vertices.push_back(Vec(dim, NFElem(field)));
  }
  Polyhedron p;
  p.field = field;
  p.dim = dim;
  std::vector<Vec> gens;
  for (const auto& v : vertices) gens.push_back(p.homogenize(v, 1));
  for (const auto& c : rays)
    if (!is_zero_vector(c)) gens.push_back(p.homogenize(c, 0));

  auto res = dualize(gens, {options.workers, options.order});
  if (!res.pointed) fail(ErrorKind::NotPointed, "the polyhedron contains a line");
  p.cone_rank = res.rank;
  for (auto i : res.extreme) {
    if (gens[i][dim].is_zero()) {
      p.rays.push_back(normalize(Vec(gens[i].begin(), gens[i].end() - 1)));
    } else {
      p.vertices.push_back(Vec(gens[i].begin(), gens[i].end() - 1));
    }
  }
  p.hyperplanes = res.support_forms;
  p.equations = kernel_basis(gens, dim + 1, NFElem(field));
  for (auto& e : p.equations) e = normalize(e);
  sort_unique(p.vertices);
  sort_unique(p.rays);
  sort_unique(p.hyperplanes);
  p.recession_rank = p.rays.empty() ? 0 : rank(p.rays);
  return p;
}

}  // namespace detail

/// Computes the V- and H-representations, dimensions and recession data.
/// Mixed input (generators and constraints) describes the intersection.
inline Polyhedron analyze(const PolyhedronSpec& spec, const AnalyzeOptions& options = {}) {
  const std::size_t d = spec.dim;
  const FieldPtr& field = spec.field;
  detail::check_width(spec.vertices, d, "vertex");
  detail::check_width(spec.rays, d, "ray");
  detail::check_width(spec.inequalities, d + 1, "inequality");
  detail::check_width(spec.equations, d + 1, "equation");

  if (!spec.has_constraints()) {
    if (!spec.has_generators()) fail(ErrorKind::InvalidArgument, "no polyhedron data given");
    return detail::from_generators(field, d, spec.vertices, spec.rays, options);
  }

  std::vector<Vec> forms;
  if (spec.has_generators()) {
    Polyhedron v = detail::from_generators(field, d, spec.vertices, spec.rays, options);
    if (v.empty) return v;
    forms = v.hyperplanes;
    for (const auto& e : v.equations) {
      forms.push_back(e);
      Vec neg;
      for (const auto& x : e) neg.push_back(-x);
      forms.push_back(std::move(neg));
    }
  }
  for (const auto& f : spec.inequalities) forms.push_back(f);
  for (const auto& e : spec.equations) {
    forms.push_back(e);
    Vec neg;
    for (const auto& x : e) neg.push_back(-x);
    forms.push_back(std::move(neg));
  }
  Vec positive_last(d + 1, NFElem(field));
  positive_last[d] = NFElem(field, 1L);
  forms.push_back(positive_last);
  forms.erase(std::remove_if(forms.begin(), forms.end(), detail::is_zero_vector), forms.end());

  // generators of C(P) are the extreme rays of the dual of the form cone
  auto res = dualize(forms, {options.workers, options.order});
  std::vector<Vec> vertices, rays;
  for (const auto& g : res.support_forms) {
    const int s = g[d].sign();
    Vec affine(g.begin(), g.end() - 1);
    if (s == 0) {
      rays.push_back(std::move(affine));
    } else {
      const NFElem inv = g[d].inverse();
      for (auto& x : affine) x *= inv;
      vertices.push_back(std::move(affine));
    }
  }
  if (vertices.empty()) return detail::empty_polyhedron(field, d);
  if (res.rank < d + 1) fail(ErrorKind::NotPointed, "the polyhedron contains a line");
  return detail::from_generators(field, d, std::move(vertices), std::move(rays), options);
}

/// Convenience: the polytope with the given vertices.
inline Polyhedron polytope(const FieldPtr& field, std::vector<Vec> vertices, const AnalyzeOptions& options = {}) {
  PolyhedronSpec spec;
  spec.field = field;
  spec.dim = vertices.empty() ? 0 : vertices[0].size();
  spec.vertices = std::move(vertices);
  return analyze(spec, options);
}

}  // namespace algpoly
