#include <gtest/gtest.h>

#include "algpoly/linalg.hpp"
#include "support/fields.hpp"
#include "support/oracles.hpp"

using namespace algpoly;
using namespace algpoly::testing;

namespace {

using Rows = std::vector<std::vector<NFElem>>;

Rows rows_of(const FieldPtr& f, std::initializer_list<std::initializer_list<const char*>> text) {
  Rows r;
  for (auto row : text) {
    r.emplace_back();
    for (auto t : row) r.back().push_back(el(f, t));
  }
  return r;
}

}  // namespace

TEST(Linalg, RankExamples) {
  auto f = sqrt5();
  EXPECT_EQ(algpoly::rank(rows_of(f, {{"1", "2"}, {"2", "4"}})), 1u);
  EXPECT_EQ(algpoly::rank(rows_of(f, {{"(a)", "1"}, {"5", "(a)"}})), 1u);
  EXPECT_EQ(algpoly::rank(rows_of(f, {{"(a)", "1"}, {"1", "(a)"}})), 2u);
  EXPECT_EQ(algpoly::rank(std::vector<std::vector<mpz_class>>{{1, 2}, {3, 4}}), 2u);
}

TEST(Linalg, DeterminantExamples) {
  auto f = sqrt5();
  EXPECT_EQ(det(Matrix<NFElem>::from_rows(rows_of(f, {{"(a)", "0"}, {"0", "(a)"}}))), q(f, 5));
  EXPECT_EQ(det(Matrix<mpz_class>::from_rows({{2, 1}, {7, 4}})), 1);
  EXPECT_EQ(det(Matrix<CheckedInt>::from_rows({{0, 1, 0}, {1, 0, 0}, {0, 0, 3}})), CheckedInt(-3));
}

TEST(Linalg, ScaledInverseProperty) {
  std::mt19937_64 rng(42);
  for (auto f : {sqrt5(), p12()}) {
    for (int trial = 0; trial < 30; ++trial) {
      const std::size_t n = 1 + trial % 5;
      Rows rows(n);
      for (auto& r : rows)
        for (std::size_t j = 0; j < n; ++j) r.push_back(random_elem(f, rng, 5, 3));
      if (oracle::rank(rows) != n) continue;
      auto m = Matrix<NFElem>::from_rows(rows);
      auto [inv, s] = scaled_inverse(m);
      ASSERT_FALSE(s.is_zero());
      auto prod = multiply(m, inv);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) ASSERT_EQ(prod(i, j), i == j ? s : NFElem(f));
    }
  }
  std::uniform_int_distribution<long> c(-9, 9);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 1 + trial % 5;
    std::vector<std::vector<mpz_class>> rows(n, std::vector<mpz_class>(n));
    for (auto& r : rows)
      for (auto& x : r) x = c(rng);
    auto m = Matrix<mpz_class>::from_rows(rows);
    if (algpoly::rank(m) != n) continue;
    auto [inv, s] = scaled_inverse(m);
    auto prod = multiply(m, inv);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) ASSERT_EQ(prod(i, j), i == j ? s : mpz_class(0));
  }
}

TEST(Linalg, SingularInverseRaises) {
  auto f = sqrt5();
  EXPECT_THROW(scaled_inverse(Matrix<NFElem>::from_rows(rows_of(f, {{"1", "2"}, {"2", "4"}}))), Error);
}

TEST(Linalg, SolveAndKernel) {
  auto f = sqrt5();
  auto m = Matrix<NFElem>::from_rows(rows_of(f, {{"(a)", "1"}, {"1", "0"}}));
  auto x = solve(m, std::vector<NFElem>{q(f, 5), q(f, 2)});
  EXPECT_EQ(x[0], q(f, 2));
  EXPECT_EQ(x[1], q(f, 5) - q(f, 2) * NFElem::generator(f));
  auto k = kernel_basis(rows_of(f, {{"1", "(a)", "0"}}), 3, q(f, 0));
  ASSERT_EQ(k.size(), 2u);
  for (const auto& v : k) EXPECT_TRUE(oracle::dot(v, rows_of(f, {{"1", "(a)", "0"}})[0]).is_zero());
}

TEST(Linalg, FindBasisAmong) {
  auto f = sqrt5();
  auto gens = rows_of(f, {{"1", "0"}, {"2", "0"}, {"1", "1"}});
  EXPECT_EQ(find_basis_among(gens), (std::vector<std::size_t>{0, 2}));
  EXPECT_THROW(find_basis_among(rows_of(f, {{"1", "0"}, {"2", "0"}})), Error);
}

TEST(Linalg, RestrictToSpanIsInjective) {
  auto f = sqrt5();
  // plane spanned by (1,a,0) and (0,1,1) inside 3-space
  auto gens = rows_of(f, {{"1", "(a)", "0"}, {"0", "1", "1"}, {"1", "(a+1)", "1"}});
  auto [span, projected] = restrict_to_span(gens);
  EXPECT_EQ(span.rank(), 2u);
  EXPECT_EQ(oracle::rank(projected), 2u);
  // a form on the span lifts to one agreeing on every generator
  std::vector<NFElem> form{q(f, 1), q(f, -1)};
  auto lifted = span.lift_form(form, q(f, 0));
  for (std::size_t i = 0; i < gens.size(); ++i) EXPECT_EQ(oracle::dot(lifted, gens[i]), oracle::dot(form, projected[i]));
}
