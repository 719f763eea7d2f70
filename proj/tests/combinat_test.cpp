#include <gtest/gtest.h>

#include <set>

#include "algpoly/combinat.hpp"
#include "support/oracles.hpp"
#include "support/shapes.hpp"

using namespace algpoly;
using namespace algpoly::testing;

namespace {

using Perm = std::vector<std::size_t>;

std::vector<std::set<std::size_t>> facet_vertex_sets(const Polyhedron& p) {
  std::vector<std::set<std::size_t>> out;
  for (const auto& h : p.hyperplanes) {
    std::set<std::size_t> s;
    for (std::size_t i = 0; i < p.vertices.size(); ++i) {
      auto v = p.vertices[i];
      v.push_back(q(p.field, 1));
      if (oracle::dot(h, v).is_zero()) s.insert(i);
    }
    out.push_back(std::move(s));
  }
  return out;
}

bool preserves_facets(const std::vector<std::set<std::size_t>>& facets, const Perm& perm) {
  std::set<std::set<std::size_t>> all(facets.begin(), facets.end());
  for (const auto& f : facets) {
    std::set<std::size_t> image;
    for (auto i : f) image.insert(perm[i]);
    if (!all.count(image)) return false;
  }
  return true;
}

// some affine map sends v_i to v_perm(i): stacking the homogenized images next
// to the originals does not raise the rank
bool is_affine(const Polyhedron& p, const Perm& perm) {
  std::vector<std::vector<NFElem>> v, both;
  for (std::size_t i = 0; i < p.vertices.size(); ++i) {
    auto row = p.vertices[i];
    row.push_back(q(p.field, 1));
    v.push_back(row);
    auto img = p.vertices[perm[i]];
    img.push_back(q(p.field, 1));
    row.insert(row.end(), img.begin(), img.end());
    both.push_back(std::move(row));
  }
  return oracle::rank(v) == oracle::rank(both);
}

bool is_isometry(const Polyhedron& p, const Perm& perm) {
  auto dist = [&](std::size_t i, std::size_t j) {
    NFElem s(p.field);
    for (std::size_t k = 0; k < p.dim; ++k) {
      const NFElem t = p.vertices[i][k] - p.vertices[j][k];
      s += t * t;
    }
    return s;
  };
  for (std::size_t i = 0; i < perm.size(); ++i)
    for (std::size_t j = i + 1; j < perm.size(); ++j)
      if (dist(i, j) != dist(perm[i], perm[j])) return false;
  return true;
}

std::size_t order_of(const Polyhedron& p, AutomorphismKind kind) { return automorphisms(p, kind).order.get_ui(); }

Polyhedron triangle(const FieldPtr& f, long ax, long ay, long bx, long by, long cx, long cy) {
  return polytope(f, int_rows(f, {{ax, ay}, {bx, by}, {cx, cy}}));
}

Polyhedron dodecahedron() {
  auto ico = polytope(sqrt5(), icosahedron_vertices());
  Rows polar;
  for (const auto& h : ico.hyperplanes) {
    std::vector<NFElem> v;
    for (std::size_t k = 0; k < 3; ++k) v.push_back(-h[k] / h[3]);
    polar.push_back(std::move(v));
  }
  return polytope(sqrt5(), polar);
}

}  // namespace

TEST(Incidence, IcosahedronFacetsAreTriangles) {
  auto p = polytope(sqrt5(), icosahedron_vertices());
  auto inc = p.incidence();
  ASSERT_EQ(inc.size(), 20u);
  for (const auto& s : inc) EXPECT_EQ(s.count(), 3u);
  std::vector<std::size_t> per_vertex(12, 0);
  for (const auto& s : inc)
    for (std::size_t i = 0; i < 12; ++i) per_vertex[i] += s.test(i);
  for (auto c : per_vertex) EXPECT_EQ(c, 5u);
}

TEST(FaceLattice, FVectors) {
  auto ico = face_lattice(polytope(sqrt5(), icosahedron_vertices()));
  EXPECT_EQ(ico.f_vector, (std::vector<Integer>{1, 12, 30, 20, 1}));

  auto r = NumberField::rationals();
  EXPECT_EQ(face_lattice(polytope(r, simplex_vertices(r, 3))).f_vector, (std::vector<Integer>{1, 4, 6, 4, 1}));
  EXPECT_EQ(face_lattice(polytope(r, cube_vertices(r, 4))).f_vector, (std::vector<Integer>{1, 16, 32, 24, 8, 1}));
  EXPECT_EQ(face_lattice(dodecahedron()).f_vector, (std::vector<Integer>{1, 20, 30, 12, 1}));
  // a triangle in space
  EXPECT_EQ(face_lattice(polytope(r, int_rows(r, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}))).f_vector,
            (std::vector<Integer>{1, 3, 3, 1}));
}

TEST(FaceLattice, UnboundedCountsOnlyFacesWithVertices) {
  auto r = NumberField::rationals();
  PolyhedronSpec spec;
  spec.field = r;
  spec.dim = 2;
  spec.inequalities = int_rows(r, {{1, 0, 0}, {0, 1, 0}});
  // the quadrant: apex, two edges, itself
  EXPECT_EQ(face_lattice(analyze(spec)).f_vector, (std::vector<Integer>{1, 1, 2, 1}));
}

TEST(FaceLattice, EulerRelation) {
  for (FieldPtr f : {NumberField::rationals(), sqrt5()}) {
    std::mt19937_64 rng(9);
    for (int i = 0; i < 20; ++i) {
      auto fl = face_lattice(polytope(f, random_polytope(f, rng, 4, 4)));
      Integer alt = 0;
      for (std::size_t k = 0; k < fl.f_vector.size(); ++k) alt += (k % 2 ? -1 : 1) * fl.f_vector[k];
      EXPECT_EQ(alt, 0);
    }
  }
}

TEST(Automorphisms, SmallOrders) {
  auto r = NumberField::rationals();
  auto segment = polytope(r, int_rows(r, {{0}, {1}}));
  EXPECT_EQ(order_of(segment, AutomorphismKind::Combinatorial), 2u);
  EXPECT_EQ(order_of(segment, AutomorphismKind::Euclidean), 2u);

  auto square = polytope(r, cube_vertices(r, 2));
  EXPECT_EQ(order_of(square, AutomorphismKind::Combinatorial), 8u);
  EXPECT_EQ(oracle::count_permutations(4, [&](const Perm& p) { return preserves_facets(facet_vertex_sets(square), p); }), 8u);

  auto simplex = polytope(r, simplex_vertices(r, 3));
  EXPECT_EQ(order_of(simplex, AutomorphismKind::Combinatorial), 24u);
  EXPECT_EQ(order_of(simplex, AutomorphismKind::Algebraic), 24u);
  EXPECT_EQ(order_of(simplex, AutomorphismKind::Euclidean), 6u);

  auto cube = polytope(r, cube_vertices(r, 3));
  EXPECT_EQ(order_of(cube, AutomorphismKind::Combinatorial), 48u);
  EXPECT_EQ(order_of(cube, AutomorphismKind::Algebraic), 48u);
  EXPECT_EQ(order_of(cube, AutomorphismKind::Euclidean), 48u);
}

TEST(Automorphisms, RectangleAndScaleneTriangle) {
  auto r = NumberField::rationals();
  auto rect = polytope(r, int_rows(r, {{0, 0}, {2, 0}, {0, 1}, {2, 1}}));
  EXPECT_EQ(order_of(rect, AutomorphismKind::Combinatorial), 8u);
  EXPECT_EQ(order_of(rect, AutomorphismKind::Algebraic), 8u);
  EXPECT_EQ(order_of(rect, AutomorphismKind::Euclidean), 4u);

  auto scalene = triangle(r, 0, 0, 4, 0, 1, 3);
  EXPECT_EQ(order_of(scalene, AutomorphismKind::Combinatorial), 6u);
  EXPECT_EQ(order_of(scalene, AutomorphismKind::Algebraic), 6u);
  EXPECT_EQ(order_of(scalene, AutomorphismKind::Euclidean), 1u);
}

TEST(Automorphisms, IcosahedronEuclidean) {
  auto p = polytope(sqrt5(), icosahedron_vertices());
  auto g = automorphisms(p, AutomorphismKind::Euclidean);
  EXPECT_EQ(g.order, 120);
  EXPECT_EQ(orbits(g.generator_perms, 12).size(), 1u);
  EXPECT_EQ(orbits(g.facet_perms, 20).size(), 1u);
  for (const auto& perm : g.generator_perms) EXPECT_TRUE(is_isometry(p, perm));
}

TEST(Automorphisms, DodecahedronGroup) {
  auto p = dodecahedron();
  EXPECT_EQ(order_of(p, AutomorphismKind::Combinatorial), 120u);
  EXPECT_EQ(order_of(p, AutomorphismKind::Euclidean), 120u);
}

TEST(Automorphisms, KindsAreNested) {
  auto r = NumberField::rationals();
  for (const auto& p : {polytope(sqrt5(), icosahedron_vertices()), polytope(r, cube_vertices(r, 3)),
                        polytope(r, int_rows(r, {{0, 0}, {2, 0}, {0, 1}, {2, 1}}))}) {
    const auto facets = facet_vertex_sets(p);
    auto eucl = automorphisms(p, AutomorphismKind::Euclidean);
    auto alg = automorphisms(p, AutomorphismKind::Algebraic);
    auto comb = automorphisms(p, AutomorphismKind::Combinatorial);
    for (const auto& perm : eucl.generator_perms) {
      EXPECT_TRUE(is_isometry(p, perm));
      EXPECT_TRUE(is_affine(p, perm));
    }
    for (const auto& perm : alg.generator_perms) {
      EXPECT_TRUE(is_affine(p, perm));
      EXPECT_TRUE(preserves_facets(facets, perm));
    }
    for (const auto& perm : comb.generator_perms) EXPECT_TRUE(preserves_facets(facets, perm));
    EXPECT_EQ(alg.order % eucl.order, 0);
    EXPECT_EQ(comb.order % alg.order, 0);
  }
}

TEST(Automorphisms, BruteForceCounts) {
  auto r = NumberField::rationals();
  std::mt19937_64 rng(17);
  std::vector<Polyhedron> shapes{
      polytope(r, int_rows(r, {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 0, 1}, {0, 1, 1}})),  // prism
      polytope(r, int_rows(r, {{0, 0, 0}, {2, 0, 0}, {0, 2, 0}, {2, 2, 0}, {1, 1, 1}})),             // pyramid
      polytope(r, int_rows(r, {{0, 0}, {2, 0}, {3, 1}, {1, 2}, {-1, 1}})),                           // pentagon
  };
  for (int i = 0; i < 8; ++i) {
    auto p = polytope(r, random_polytope(r, rng, 3, 3));
    if (p.vertices.size() <= 8) shapes.push_back(p);
  }
  for (const auto& p : shapes) {
    const auto facets = facet_vertex_sets(p);
    const std::size_t n = p.vertices.size();
    EXPECT_EQ(order_of(p, AutomorphismKind::Combinatorial),
              oracle::count_permutations(n, [&](const Perm& perm) { return preserves_facets(facets, perm); }));
    EXPECT_EQ(order_of(p, AutomorphismKind::Euclidean),
              oracle::count_permutations(n, [&](const Perm& perm) { return is_isometry(p, perm); }));
  }
}

TEST(Automorphisms, UnboundedRefusesGeometricKinds) {
  auto r = NumberField::rationals();
  PolyhedronSpec spec;
  spec.field = r;
  spec.dim = 2;
  spec.inequalities = int_rows(r, {{1, 0, 0}, {0, 1, 0}});
  auto p = analyze(spec);
  EXPECT_EQ(order_of(p, AutomorphismKind::Combinatorial), 2u);
  try {
    automorphisms(p, AutomorphismKind::Euclidean);
    ADD_FAILURE() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::UnboundedPolyhedron);
  }
}

TEST(Orbits, Basic) {
  std::vector<Perm> gens{{1, 0, 2, 3}, {0, 1, 3, 2}};
  EXPECT_EQ(orbits(gens, 4), (std::vector<std::vector<std::size_t>>{{0, 1}, {2, 3}}));
}
