#pragma once

// Face lattice, f-vector and automorphism groups of polyhedra.
//
// Automorphisms are computed on a complete graph with colored nodes and
// colored edges. Three encodings are used:
//   combinatorial  generators and facets as nodes, edges colored by incidence
//   euclidean      vertices as nodes, edge (i, j) colored by <v_i - b, v_j - b>
//                  with b the barycenter
//   algebraic      vertices as nodes, edge (i, j) colored by w_i^T Q^-1 w_j
//                  with w_i = (v_i, 1) and Q = sum of w_i w_i^T
// Each permutation found for the geometric kinds is certified by an exact
// affine (and, for euclidean, orthogonality) check before it is reported.

#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "algpoly/linalg.hpp"
#include "algpoly/polyhedron.hpp"

namespace algpoly {

struct FaceLattice {
  std::vector<IndexSet> faces;  // generator sets (vertices then rays), the empty face excluded
  std::vector<long> dims;
  std::vector<Integer> f_vector;  // f_vector[i] = number of faces of dimension i - 1
};

/// Faces of a pointed cone given by generators and per-facet incidence,
/// restricted to faces that contain one of the first `num_vertices`
/// generators; `top_dim` is the dimension of the whole polyhedron.
template <class T>
FaceLattice face_lattice(const std::vector<std::vector<T>>& gens, const std::vector<IndexSet>& incidence,
                         std::size_t num_vertices, long top_dim) {
  FaceLattice fl;
  auto has_vertex = [&](const IndexSet& s) {
    auto i = s.find_first();
    return i != IndexSet::npos && i < num_vertices;
  };
  IndexSet all(gens.size());
  all.set();
  std::set<IndexSet> seen{all};
  std::vector<IndexSet> queue{all};
  for (std::size_t q = 0; q < queue.size(); ++q) {
    const IndexSet face = queue[q];
    for (const auto& h : incidence) {
      IndexSet g = face & h;
      if (g == face || !has_vertex(g)) continue;
      if (seen.insert(g).second) queue.push_back(std::move(g));
    }
  }
  fl.f_vector.assign(static_cast<std::size_t>(top_dim) + 2, 0);
  fl.f_vector[0] = 1;
  for (const auto& face : queue) {
    std::vector<std::vector<T>> rows;
    for (auto i = face.find_first(); i != IndexSet::npos; i = face.find_next(i)) rows.push_back(gens[i]);
    const long dim = static_cast<long>(rank(rows)) - 1;
    fl.faces.push_back(face);
    fl.dims.push_back(dim);
    fl.f_vector[static_cast<std::size_t>(dim + 1)] += 1;
  }
  return fl;
}

inline FaceLattice face_lattice(const Polyhedron& p) {
  if (p.empty) {
    FaceLattice fl;
    fl.f_vector = {1};
    return fl;
  }
  return face_lattice(p.homogenized_generators(), p.incidence(), p.vertices.size(), p.affine_dim());
}

// --- colored graph automorphisms ---------------------------------------------

struct ColoredGraph {
  std::vector<int> node_color;
  std::vector<std::vector<int>> edge_color;  // symmetric, diagonal ignored
  std::size_t size() const { return node_color.size(); }
};

using Permutation = std::vector<std::size_t>;

struct GraphGroup {
  Integer order = 1;
  std::vector<Permutation> generators;
};

namespace detail {

/// Canonical color ids: the rank of each node's key among the sorted keys.
template <class Key>
std::vector<int> rank_keys(const std::vector<Key>& keys) {
  std::vector<Key> sorted = keys;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<int> out;
  out.reserve(keys.size());
  for (const auto& k : keys) out.push_back(static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), k) - sorted.begin()));
  return out;
}

inline std::size_t count_classes(const std::vector<int>& colors) {
  return colors.empty() ? 0 : static_cast<std::size_t>(*std::max_element(colors.begin(), colors.end())) + 1;
}

/// Coarsest equitable refinement of a coloring.
inline std::vector<int> refine(const ColoredGraph& g, std::vector<int> colors) {
  const std::size_t n = g.size();
  colors = rank_keys(colors);
  std::size_t classes = count_classes(colors);
  const long width = static_cast<long>(n) + 1;
  while (true) {
    std::vector<std::vector<long>> keys(n);
    for (std::size_t i = 0; i < n; ++i) {
      auto& k = keys[i];
      k.reserve(n);
      k.push_back(colors[i]);
      std::vector<long> nb;
      nb.reserve(n - 1);
      for (std::size_t j = 0; j < n; ++j)
        if (j != i) nb.push_back(g.edge_color[i][j] * width + colors[j]);
      std::sort(nb.begin(), nb.end());
      k.insert(k.end(), nb.begin(), nb.end());
    }
    auto next = rank_keys(keys);
    const std::size_t c = count_classes(next);
    colors = std::move(next);
    if (c == classes) return colors;
    classes = c;
  }
}

inline std::vector<int> individualize(const ColoredGraph& g, const std::vector<int>& colors, std::size_t v) {
  std::vector<std::pair<int, int>> keys;
  for (std::size_t i = 0; i < colors.size(); ++i) keys.emplace_back(colors[i], i == v ? 0 : 1);
  return refine(g, rank_keys(keys));
}

inline std::vector<std::size_t> class_sizes(const std::vector<int>& colors) {
  std::vector<std::size_t> sizes(count_classes(colors), 0);
  for (int c : colors) ++sizes[static_cast<std::size_t>(c)];
  return sizes;
}

inline bool is_automorphism(const ColoredGraph& g, const Permutation& p) {
  const std::size_t n = g.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (g.node_color[i] != g.node_color[p[i]]) return false;
    for (std::size_t j = i + 1; j < n; ++j)
      if (g.edge_color[i][j] != g.edge_color[p[i]][p[j]]) return false;
  }
  return true;
}

inline std::vector<std::size_t> orbit_of(std::size_t x, const std::vector<Permutation>& gens, std::size_t n) {
  std::vector<bool> in(n, false);
  std::vector<std::size_t> orbit{x};
  in[x] = true;
  for (std::size_t k = 0; k < orbit.size(); ++k)
    for (const auto& p : gens)
      if (!in[p[orbit[k]]]) {
        in[p[orbit[k]]] = true;
        orbit.push_back(p[orbit[k]]);
      }
  return orbit;
}

class AutomorphismSearch {
 public:
  explicit AutomorphismSearch(const ColoredGraph& g) : g_(g) {}

  GraphGroup run() {
    GraphGroup group;
    const std::size_t n = g_.size();
    if (n == 0) return group;
    std::vector<int> colors = refine(g_, g_.node_color);
    while (count_classes(colors) < n) {
      const auto sizes = class_sizes(colors);
      int target = 0;
      while (sizes[static_cast<std::size_t>(target)] < 2) ++target;
      std::size_t base = 0;
      while (colors[base] != target) ++base;
      levels_.push_back({colors, target, base});
      colors = individualize(g_, colors, base);
    }
    leaf_ = colors;

    // Stabilizer chain from the deepest level up: the generators known when
    // level l is processed fix the base points of all shallower levels.
    for (std::size_t l = levels_.size(); l-- > 0;) {
      const auto& level = levels_[l];
      auto orbit = orbit_of(level.base, group.generators, n);
      for (std::size_t c = 0; c < n; ++c) {
        if (level.colors[c] != level.target) continue;
        if (std::find(orbit.begin(), orbit.end(), c) != orbit.end()) continue;
        if (auto p = explore(l + 1, individualize(g_, level.colors, c))) {
          group.generators.push_back(std::move(*p));
          orbit = orbit_of(level.base, group.generators, n);
        }
      }
      group.order *= static_cast<unsigned long>(orbit.size());
    }
    return group;
  }

 private:
  struct Level {
    std::vector<int> colors;
    int target;
    std::size_t base;
  };

  std::optional<Permutation> explore(std::size_t l, const std::vector<int>& colors) {
    const std::size_t n = g_.size();
    const auto& reference = l < levels_.size() ? levels_[l].colors : leaf_;
    if (class_sizes(colors) != class_sizes(reference)) return std::nullopt;
    if (l == levels_.size()) {
      std::vector<std::size_t> node_of_color(n);
      for (std::size_t i = 0; i < n; ++i) node_of_color[static_cast<std::size_t>(colors[i])] = i;
      Permutation p(n);
      for (std::size_t i = 0; i < n; ++i) p[i] = node_of_color[static_cast<std::size_t>(leaf_[i])];
      if (!is_automorphism(g_, p)) return std::nullopt;
      return p;
    }
    for (std::size_t c = 0; c < n; ++c) {
      if (colors[c] != levels_[l].target) continue;
      if (auto p = explore(l + 1, individualize(g_, colors, c))) return p;
    }
    return std::nullopt;
  }

  const ColoredGraph& g_;
  std::vector<Level> levels_;
  std::vector<int> leaf_;
};

/// Edge colors from exact field values.
inline ColoredGraph value_graph(const std::vector<std::vector<NFElem>>& values) {
  const std::size_t n = values.size();
  std::map<NFElem, int, StructuralLess> ids;
  auto id = [&](const NFElem& x) { return ids.emplace(x, static_cast<int>(ids.size())).first->second; };
  ColoredGraph g;
  g.node_color.resize(n);
  g.edge_color.assign(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    g.node_color[i] = id(values[i][i]);
    for (std::size_t j = 0; j < n; ++j)
      if (j != i) g.edge_color[i][j] = id(values[i][j]);
  }
  return g;
}

}  // namespace detail

/// Automorphism group of a colored complete graph.
inline GraphGroup graph_automorphisms(const ColoredGraph& g) { return detail::AutomorphismSearch(g).run(); }

enum class AutomorphismKind { Combinatorial, Algebraic, Euclidean };

inline std::string to_string(AutomorphismKind k) {
  switch (k) {
    case AutomorphismKind::Combinatorial: return "Combinatorial";
    case AutomorphismKind::Algebraic: return "Algebraic";
    case AutomorphismKind::Euclidean: return "Euclidean";
  }
  return "";
}

struct AutomorphismGroup {
  AutomorphismKind kind = AutomorphismKind::Combinatorial;
  Integer order = 1;
  std::size_t num_vertices = 0;
  std::size_t num_rays = 0;
  std::vector<Permutation> generator_perms;  // on vertices then rays
  std::vector<Permutation> facet_perms;      // on support hyperplanes
};

/// Orbits of the group generated by `perms` on {0..n-1}, each sorted, in
/// order of their smallest element.
inline std::vector<std::vector<std::size_t>> orbits(const std::vector<Permutation>& perms, std::size_t n,
                                                    std::size_t offset = 0) {
  std::vector<bool> done(n, false);
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t i = 0; i < n; ++i) {
    if (done[i]) continue;
    std::vector<std::size_t> orbit{i};
    done[i] = true;
    for (std::size_t k = 0; k < orbit.size(); ++k)
      for (const auto& p : perms) {
        const std::size_t y = p[orbit[k] + offset] - offset;
        if (!done[y]) {
          done[y] = true;
          orbit.push_back(y);
        }
      }
    std::sort(orbit.begin(), orbit.end());
    out.push_back(std::move(orbit));
  }
  return out;
}

namespace detail {

inline Permutation induced_facet_perm(const std::vector<IndexSet>& incidence, const Permutation& gen_perm) {
  std::map<IndexSet, std::size_t> index;
  for (std::size_t f = 0; f < incidence.size(); ++f) index.emplace(incidence[f], f);
  Permutation out;
  for (const auto& inc : incidence) {
    IndexSet image(inc.size());
    for (auto i = inc.find_first(); i != IndexSet::npos; i = inc.find_next(i)) image.set(gen_perm[i]);
    auto it = index.find(image);
    if (it == index.end()) fail(ErrorKind::InvalidArgument, "permutation does not map facets to facets");
    out.push_back(it->second);
  }
  return out;
}

/// Whether the vertex permutation extends to an affine map of the affine
/// hull (and, if `isometry`, to a Euclidean motion).
inline bool certify(const std::vector<Vec>& vertices, const Permutation& perm, bool isometry) {
  const FieldPtr field = vertices[0][0].field();
  std::vector<Vec> hom;
  for (const auto& v : vertices) {
    Vec w = v;
    w.push_back(NFElem(field, 1L));
    hom.push_back(std::move(w));
  }
  const auto basis = independent_subset(hom);
  const std::size_t r = basis.size();
  auto [span, projected] = restrict_to_span(hom);
  std::vector<Vec> basis_rows;
  for (auto b : basis) basis_rows.push_back(projected[b]);
  const auto inv = invert(Matrix<NFElem>::from_rows(basis_rows).transpose());
  // w_i = sum_k c_ik w_{b_k} must imply w_{p(i)} = sum_k c_ik w_{p(b_k)}
  for (std::size_t i = 0; i < hom.size(); ++i) {
    Vec c;
    for (std::size_t k = 0; k < r; ++k) c.push_back(dot(inv.row(k), std::span<const NFElem>(projected[i])));
    const Vec& target = projected[perm[i]];
    for (std::size_t j = 0; j < r; ++j) {
      NFElem s(field);
      for (std::size_t k = 0; k < r; ++k) s += c[k] * projected[perm[basis[k]]][j];
      if (s != target[j]) return false;
    }
  }
  if (!isometry) return true;
  const std::size_t d = vertices[0].size();
  auto diff = [&](std::size_t a, std::size_t b) {
    Vec out;
    for (std::size_t j = 0; j < d; ++j) out.push_back(vertices[a][j] - vertices[b][j]);
    return out;
  };
  if (r == d + 1) {
    // linear part A = W' W^-1 with columns v_{b_k} - v_{b_0}; require A^T A = I
    std::vector<Vec> w, w2;
    for (std::size_t k = 1; k < r; ++k) {
      w.push_back(diff(basis[k], basis[0]));
      w2.push_back(diff(perm[basis[k]], perm[basis[0]]));
    }
    const auto W = Matrix<NFElem>::from_rows(w).transpose();
    const auto W2 = Matrix<NFElem>::from_rows(w2).transpose();
    const auto A = multiply(W2, invert(W));
    const auto AtA = multiply(A.transpose(), A);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        if (AtA(i, j) != NFElem(field, i == j ? 1L : 0L)) return false;
    return true;
  }
  for (std::size_t k = 1; k < r; ++k)
    for (std::size_t l = 1; l < r; ++l)
      if (dot(diff(basis[k], basis[0]), diff(basis[l], basis[0])) !=
          dot(diff(perm[basis[k]], perm[basis[0]]), diff(perm[basis[l]], perm[basis[0]])))
        return false;
  return true;
}

}  // namespace detail

inline AutomorphismGroup automorphisms(const Polyhedron& p, AutomorphismKind kind) {
  AutomorphismGroup group;
  group.kind = kind;
  if (p.empty) return group;
  group.num_vertices = p.vertices.size();
  group.num_rays = p.rays.size();
  const auto incidence = p.incidence();
  const std::size_t ng = group.num_vertices + group.num_rays;

  if (kind == AutomorphismKind::Combinatorial) {
    const std::size_t nf = incidence.size();
    ColoredGraph g;
    g.node_color.resize(ng + nf);
    g.edge_color.assign(ng + nf, std::vector<int>(ng + nf, 0));
    for (std::size_t i = 0; i < ng; ++i) g.node_color[i] = i < group.num_vertices ? 0 : 1;
    for (std::size_t f = 0; f < nf; ++f) {
      g.node_color[ng + f] = 2;
      for (std::size_t i = 0; i < ng; ++i)
        if (incidence[f].test(i)) g.edge_color[i][ng + f] = g.edge_color[ng + f][i] = 1;
    }
    auto result = graph_automorphisms(g);
    group.order = result.order;
    for (const auto& perm : result.generators) {
      group.generator_perms.emplace_back(perm.begin(), perm.begin() + static_cast<long>(ng));
      Permutation facets;
      for (std::size_t f = 0; f < nf; ++f) facets.push_back(perm[ng + f] - ng);
      group.facet_perms.push_back(std::move(facets));
    }
    return group;
  }

  if (!p.is_polytope())
    fail(ErrorKind::UnboundedPolyhedron, to_string(kind) + " automorphisms are only defined for polytopes");
  const auto& verts = p.vertices;
  const std::size_t n = verts.size();
  const std::size_t d = p.dim;
  std::vector<std::vector<NFElem>> values(n, std::vector<NFElem>(n, NFElem(p.field)));
  if (kind == AutomorphismKind::Euclidean) {
    Vec bary(d, NFElem(p.field));
    for (const auto& v : verts)
      for (std::size_t j = 0; j < d; ++j) bary[j] += v[j];
    const NFElem inv_n = NFElem(p.field, Rational(1, static_cast<long>(n)));
    for (auto& x : bary) x *= inv_n;
    std::vector<Vec> centered;
    for (const auto& v : verts) {
      Vec c;
      for (std::size_t j = 0; j < d; ++j) c.push_back(v[j] - bary[j]);
      centered.push_back(std::move(c));
    }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) values[i][j] = values[j][i] = dot(centered[i], centered[j]);
  } else {
    auto [span, w] = restrict_to_span(p.homogenized_generators());
    const std::size_t r = span.rank();
    Matrix<NFElem> q = Matrix<NFElem>::from_rows(std::vector<Vec>(r, Vec(r, NFElem(p.field))));
    for (const auto& x : w)
      for (std::size_t a = 0; a < r; ++a)
        for (std::size_t b = 0; b < r; ++b) q(a, b) += x[a] * x[b];
    const auto qinv = invert(q);
    std::vector<Vec> qw;
    for (const auto& x : w) {
      Vec y;
      for (std::size_t a = 0; a < r; ++a) y.push_back(dot(qinv.row(a), std::span<const NFElem>(x)));
      qw.push_back(std::move(y));
    }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) values[i][j] = values[j][i] = dot(w[i], qw[j]);
  }
  auto result = graph_automorphisms(detail::value_graph(values));
  for (const auto& perm : result.generators)
    if (!detail::certify(verts, perm, kind == AutomorphismKind::Euclidean))
      fail(ErrorKind::InvalidArgument, "automorphism candidate failed certification");
  group.order = result.order;
  group.generator_perms = result.generators;
  for (const auto& perm : group.generator_perms) group.facet_perms.push_back(detail::induced_facet_perm(incidence, perm));
  return group;
}

}  // namespace algpoly
