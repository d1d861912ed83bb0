#include "qdissect/partitions.hpp"

#include <gtest/gtest.h>

using namespace qdissect;

namespace {

const StatTables& gf() {
  static const StatTables t = gf_stats(120);
  return t;
}

const StatTables& en() {
  static const StatTables t = enumerate_stats(40);
  return t;
}

}  // namespace

TEST(Oracle, SmallValues) {
  EXPECT_EQ(gf().p[0], 1);
  EXPECT_EQ(gf().p[10], 42);
  EXPECT_EQ(gf().p[100], 190569292);
  EXPECT_EQ(std::vector<std::int64_t>(gf().spt.begin(), gf().spt.begin() + 5), (std::vector<std::int64_t>{0, 1, 3, 5, 10}));
}

TEST(Oracle, CrankConventionAtOne) {
  for (const StatTables* t : {&gf(), &en()}) {
    EXPECT_EQ(t->M(0, 0), 1);
    EXPECT_EQ(t->M(0, 1), -1);
    EXPECT_EQ(t->M(1, 1), 1);
    EXPECT_EQ(t->M(-1, 1), 1);
  }
}

TEST(Oracle, EnumerationAgreesWithGeneratingFunctions) {
  for (long n = 0; n <= en().max_n; ++n) {
    EXPECT_EQ(en().p[static_cast<std::size_t>(n)], gf().p[static_cast<std::size_t>(n)]);
    EXPECT_EQ(en().spt[static_cast<std::size_t>(n)], gf().spt[static_cast<std::size_t>(n)]);
    for (long m = -n; m <= n; ++m) {
      EXPECT_EQ(en().N(m, n), gf().N(m, n)) << m << "," << n;
      EXPECT_EQ(en().M(m, n), gf().M(m, n)) << m << "," << n;
    }
  }
}

TEST(Oracle, RowSumsAndSymmetry) {
  for (long n = 0; n <= gf().max_n; ++n) {
    std::int64_t rs = 0, cs = 0;
    for (long m = -n; m <= n; ++m) {
      rs += gf().N(m, n);
      cs += gf().M(m, n);
      EXPECT_EQ(gf().N(m, n), gf().N(-m, n));
      EXPECT_EQ(gf().M(m, n), gf().M(-m, n));
    }
    EXPECT_EQ(rs, gf().p[static_cast<std::size_t>(n)]);
    EXPECT_EQ(cs, gf().p[static_cast<std::size_t>(n)]);
  }
}

TEST(Oracle, RankAndCrankExplainRamanujanCongruences) {
  for (long n = 0; 5 * n + 4 <= gf().max_n; ++n)
    for (long a = 0; a < 5; ++a)
      EXPECT_EQ(class_count(gf(), Stat::Rank, a, 5, 5 * n + 4) * 5, gf().p[static_cast<std::size_t>(5 * n + 4)]);
  for (long n = 0; 11 * n + 6 <= gf().max_n; ++n)
    for (long a = 0; a < 11; ++a)
      EXPECT_EQ(class_count(gf(), Stat::Crank, a, 11, 11 * n + 6) * 11, gf().p[static_cast<std::size_t>(11 * n + 6)]);
  // M(a,11,6) = 1 for every a
  for (long a = 0; a < 11; ++a) EXPECT_EQ(class_count(gf(), Stat::Crank, a, 11, 6), 1);
}

TEST(Oracle, SptIdentity) {
  for (long n = 0; n <= gf().max_n; ++n) EXPECT_EQ(spt_via_identity(gf(), n), gf().spt[static_cast<std::size_t>(n)]);
}

TEST(Oracle, Moments) {
  // partitions of 3: ranks 2, 0, -2; cranks 3, 0, -3
  EXPECT_EQ(moment(gf(), Stat::Rank, 2, 3), 8);
  EXPECT_EQ(moment(gf(), Stat::Crank, 2, 3), 18);
  EXPECT_EQ(moment(gf(), Stat::Crank, 0, 7), 15);
  // crank moment M_2(n) = 2 n p(n)
  for (long n = 2; n <= gf().max_n; ++n)
    EXPECT_EQ(moment(gf(), Stat::Crank, 2, n), 2 * n * gf().p[static_cast<std::size_t>(n)]);
}

TEST(Oracle, DeviationSeries) {
  Series d = deviation_rank(gf(), 0, 5, 50);
  EXPECT_EQ(d.trunc(), 50);
  EXPECT_EQ(d.coeff(0), mpq_class(4, 5));
  for (long n = 0; 5 * n + 4 < 50; ++n) EXPECT_EQ(d.coeff(5 * n + 4), 0);
  EXPECT_THROW(deviation_rank(gf(), 0, 11, 200), std::out_of_range);
}

TEST(Oracle, RangeErrors) {
  EXPECT_THROW(enumerate_stats(kEnumerationCeiling + 1), std::invalid_argument);
  EXPECT_THROW(gf_stats(kTableCeiling + 1), std::invalid_argument);
  EXPECT_THROW(gf().N(0, 121), std::out_of_range);
  EXPECT_THROW(class_count(gf(), Stat::Rank, 0, 0, 3), std::invalid_argument);
}
