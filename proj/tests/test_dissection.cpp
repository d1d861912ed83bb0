#include "qdissect/dissection.hpp"
#include "qdissect/partitions.hpp"

#include <gtest/gtest.h>

using namespace qdissect;

namespace {

const StatTables& tables() {
  static const StatTables t = gf_stats(140);
  return t;
}

}  // namespace

TEST(Dissection, TableShapes) {
  EXPECT_EQ(q_entries().size(), 60u);
  EXPECT_EQ(theta_form_entries().size(), 60u);
  EXPECT_EQ(mock_terms().size(), 10u);
  for (int a = 0; a <= 5; ++a)
    for (int m = 0; m <= 10; ++m) {
      if (m == 6) continue;
      const auto& e = q_entry(a, m);
      EXPECT_EQ(e.a, a);
      EXPECT_EQ(e.m, m);
    }
  EXPECT_THROW(q_entry(6, 0), std::out_of_range);
  EXPECT_THROW(q_entry(0, 6), std::out_of_range);
  EXPECT_THROW(check_residue(6), std::out_of_range);
  EXPECT_NO_THROW(check_residue(6, true));
}

TEST(Dissection, CrankRowsVanishAtResidueSix) {
  for (const auto& row : crank_rows()) EXPECT_EQ(row.at(6), 0);
}

TEST(Dissection, ClassFolding) {
  ProductBasis B(20);
  for (int a = 1; a <= 5; ++a)
    for (int m : {0, 3, 6}) EXPECT_TRUE(eq_to_order(q_table(B, a, m), q_table(B, 11 - a, m), 20));
}

TEST(Dissection, WeightedClassSumVanishes) {
  // sum over all eleven classes of a deviation is zero
  ProductBasis B(30);
  for (int m = 0; m <= 10; ++m) {
    Series rank = Series::zero_to(B.inner_order()), crank = rank;
    for (int a = 0; a <= 5; ++a) {
      rank = add(rank, scale(q_table(B, a, m), mpq_class(kClassWeights[static_cast<std::size_t>(a)])));
      crank = add(crank, scale(qc_table(B, a, m), mpq_class(kClassWeights[static_cast<std::size_t>(a)])));
    }
    EXPECT_TRUE(eq_to_order(rank, Series(), 30)) << m;
    EXPECT_TRUE(eq_to_order(crank, Series(), 30)) << m;
  }
}

TEST(Dissection, ThetaTwoForms) {
  ProductBasis B(120);
  for (const auto& a : theta6_rows()) EXPECT_TRUE(eq_to_order(theta(B, a), theta_alt(B, a), 120));
}

TEST(Dissection, UnitBracket) {
  ProductBasis B(120);
  EXPECT_TRUE(eq_to_order(bracket(B, {1, -1, -1, -1, -1}), B.eval(parse_monomial("J11^2")), 120));
  for (int m = 0; m <= 10; ++m) {
    if (m == 6) continue;
    EXPECT_TRUE(eq_to_order(residue_bracket(B, m, {1, -1, -1, -1, -1, 0}), unit_residue(B, m), 120)) << m;
  }
}

TEST(Dissection, CrankRowsMatchOracle) {
  for (int a = 0; a <= 5; ++a)
    EXPECT_TRUE(eq_to_order(build_v11(crank_rows()[static_cast<std::size_t>(a)], 140), deviation_crank(tables(), a, 11, 140), 140)) << a;
}

TEST(Dissection, DissectedTablesMatchOracle) {
  ProductBasis B(14);
  for (int a = 0; a <= 5; ++a)
    for (int m = 0; m <= 10; ++m) {
      Series oracle = dissect(deviation_rank(tables(), a, 11, 140), 11, m);
      long len = oracle.trunc();
      EXPECT_TRUE(eq_to_order(q_table(B, a, m), oracle, len)) << a << "," << m;
      EXPECT_TRUE(eq_to_order(qc_table(B, a, m), dissect(deviation_crank(tables(), a, 11, 140), 11, m), len)) << a << "," << m;
    }
}

TEST(Dissection, UndissectInvertsDissect) {
  Series d = deviation_rank(tables(), 2, 11, 140);
  std::array<Series, 11> parts;
  for (int m = 0; m < 11; ++m) parts[static_cast<std::size_t>(m)] = dissect(d, 11, m);
  EXPECT_TRUE(eq_to_order(undissect(parts, 130), d, 130));
}

TEST(Dissection, G11PoleTerm) {
  G11Coeffs b;
  b.c = {0, 0, 0, 0, 1};
  Series g = build_g11(b, 30);
  EXPECT_EQ(g.valuation(), -1);
  EXPECT_EQ(g.coeff(-1), 1);
}
