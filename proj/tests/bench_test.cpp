#include <gtest/gtest.h>

#include <cstdlib>

#include "algpoly/bench.hpp"
#include "support/oracles.hpp"

using namespace algpoly;

namespace {

bench::Row run(const bench::IntRows& rows, const std::string& cls, bool f_vector = false) {
  return bench::run_class(rows, cls, DualizeOptions{4, InsertionOrder::Input}, f_vector);
}

bool long_tests_enabled() {
  const char* v = std::getenv("ALGPOLY_LONG_TESTS");
  return v && std::string(v) == "1";
}

}  // namespace

TEST(Families, Shapes) {
  EXPECT_EQ(bench::cyclic(4, 8).size(), 8u);
  EXPECT_EQ(bench::cyclic(4, 8)[2], (std::vector<Integer>{3, 9, 27, 81, 1}));
  EXPECT_EQ(bench::cube(3).size(), 8u);
  EXPECT_EQ(bench::linear_order(4).size(), 24u);
  EXPECT_EQ(bench::linear_order(4)[0].size(), 7u);
  EXPECT_THROW(bench::family("cyclic:8:4"), Error);
  EXPECT_THROW(bench::family("sphere:3"), Error);
}

TEST(Families, EntriesBeyondSixtyFourBits) {
  const auto rows = bench::cyclic(15, 30);
  Integer expected;
  mpz_ui_pow_ui(expected.get_mpz_t(), 30, 15);
  EXPECT_EQ(rows[29][14], expected);
  EXPECT_TRUE(run(rows, "int").overflow);
}

class CyclicFacets : public ::testing::TestWithParam<std::pair<int, int>> {};

TEST_P(CyclicFacets, MatchGaleEvenness) {
  auto [d, n] = GetParam();
  const auto expected = oracle::gale_facet_count(d, n);
  auto row = run(bench::cyclic(d, n), "mpz");
  EXPECT_EQ(row.facets, expected);
  EXPECT_EQ(row.extreme, static_cast<std::size_t>(n));
  auto scaled = run(bench::cyclic(d, n), "sc2");
  EXPECT_EQ(scaled.facets, expected);
}

INSTANTIATE_TEST_SUITE_P(Small, CyclicFacets,
                         ::testing::Values(std::make_pair(4, 8), std::make_pair(6, 10), std::make_pair(8, 14)));

TEST(CyclicFacets, GaleOracleKnownValues) {
  // C(d, n) for even d has n/(n-d/2) * binom(n-d/2, d/2) facets
  EXPECT_EQ(oracle::gale_facet_count(4, 8), 20u);
  EXPECT_EQ(oracle::gale_facet_count(6, 10), 50u);
  EXPECT_EQ(oracle::gale_facet_count(8, 14), 294u);
  EXPECT_EQ(oracle::gale_facet_count(3, 6), 8u);
}

TEST(Scaling, ClassesAgree) {
  for (const char* fam : {"cube:3", "cyclic:6:10"}) {
    const auto rows = bench::family(fam);
    const auto base = run(rows, "mpz", true);
    for (const auto& cls : bench::class_names()) {
      const auto row = run(rows, cls, true);
      ASSERT_FALSE(row.overflow) << fam << " " << cls;
      EXPECT_EQ(row.facets, base.facets) << fam << " " << cls;
      EXPECT_EQ(row.extreme, base.extreme) << fam << " " << cls;
      EXPECT_EQ(row.f_vector, base.f_vector) << fam << " " << cls;
    }
  }
}

TEST(Scaling, CubeFVector) {
  EXPECT_EQ(run(bench::cube(3), "sc8", true).f_vector, (std::vector<Integer>{1, 8, 12, 6, 1}));
}

TEST(Report, MarksOverflow) {
  const auto rows = bench::cyclic(8, 14);
  std::vector<bench::Row> results{run(rows, "int"), run(rows, "mpz")};
  EXPECT_TRUE(results[0].overflow);
  const std::string table = bench::report("cyclic:8:14", rows, results);
  EXPECT_NE(table.find("int"), std::string::npos);
  EXPECT_NE(table.find("--"), std::string::npos);
  EXPECT_NE(table.find("294"), std::string::npos);
}

TEST(LongRunning, CyclicFifteenThirty) {
  if (!long_tests_enabled()) GTEST_SKIP() << "set ALGPOLY_LONG_TESTS=1 to run";
  EXPECT_EQ(run(bench::cyclic(15, 30), "mpz").facets, 341088u);
}
