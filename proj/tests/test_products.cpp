#include "qdissect/monomial_parse.hpp"
#include "qdissect/products.hpp"

#include <gtest/gtest.h>

using namespace qdissect;

namespace {

// reference expansion of prod_{k>=1} (1 - q^{m k}) by repeated multiplication
std::vector<long> naive_euler(long m, long order) {
  std::vector<long> c(static_cast<std::size_t>(order));
  c[0] = 1;
  for (long e = m; e < order; e += m)
    for (long n = order - 1; n >= e; --n) c[static_cast<std::size_t>(n)] -= c[static_cast<std::size_t>(n - e)];
  return c;
}

std::vector<long> ints(const Series& s, long from, long to) {
  std::vector<long> out;
  for (long n = from; n < to; ++n) out.push_back(s.coeff(n).get_num().get_si());
  return out;
}

}  // namespace

TEST(Products, EulerPentagonal) {
  EXPECT_EQ(ints(euler_J(1, 8), 0, 8), (std::vector<long>{1, -1, -1, 0, 0, 1, 0, 1}));
  for (long m : {1, 2, 11})
    EXPECT_EQ(ints(euler_J(m, 200), 0, 200), naive_euler(m, 200));
}

TEST(Products, DilationOfJ1IsJ11) {
  Series j1 = euler_J(1, 60);
  Series d = dilate(j1, 11);
  EXPECT_TRUE(eq_to_order(d, euler_J(11, 600), 600));
}

TEST(Products, ThetaSumEqualsProduct) {
  for (long m : {3L, 11L, 22L, 33L})
    for (long a = 1; a < m; ++a) EXPECT_TRUE(eq_to_order(theta_j(a, m, 150), theta_j_product(a, m, 150), 150)) << a << "," << m;
  // J_{1,3} = J_1
  EXPECT_TRUE(eq_to_order(theta_j(1, 3, 13), euler_J(1, 13), 13));
}

TEST(Products, ThetaShiftRelation) {
  // J_{a+m, m} = -q^{-a} J_{a,m}
  for (long a = 1; a < 11; ++a) {
    Series lhs = theta_j(a + 11, 11, 100), rhs = neg(shift(theta_j(a, 11, 120), -a));
    EXPECT_TRUE(eq_to_order(lhs, rhs, 100));
  }
  EXPECT_TRUE(eq_to_order(theta_j(0, 11, 50), Series(), 50));
}

TEST(Products, FinitePochhammerIsExact) {
  Series p = pochhammer(1, 1, 3, 0);
  EXPECT_TRUE(p.exact());
  // (1-q)(1-q^2)(1-q^3) = 1 - q - q^2 + q^4 + q^5 - q^6
  EXPECT_EQ(ints(p, 0, 7), (std::vector<long>{1, -1, -1, 0, 1, 1, -1}));
  EXPECT_TRUE(pochhammer(0, 1, 2, 0).is_exact_zero());
}

TEST(Products, EisensteinSeries) {
  EXPECT_EQ(ints(eisenstein(4, 3), 0, 3), (std::vector<long>{1, 240, 2160}));
  EXPECT_EQ(ints(eisenstein(6, 3), 0, 3), (std::vector<long>{1, -504, -16632}));
  EXPECT_EQ(eisenstein(2, 2).coeff(1), -24);
  EXPECT_THROW(eisenstein(3, 4), SeriesError);
  EXPECT_EQ(bernoulli(1), mpq_class(-1, 2));
  EXPECT_EQ(bernoulli(12), mpq_class(-691, 2730));
}

TEST(Products, EisensteinProductIdentity) {
  // E4^2 = E8 (dimension one)
  Series e4 = eisenstein(4, 60);
  EXPECT_TRUE(eq_to_order(mul(e4, e4), eisenstein(8, 60), 60));
}

TEST(Products, MockGAgainstDefinition) {
  // g(x;q) = x^{-1}(-1 + sum q^{n^2} / ((x)_{n+1} (q/x)_n)) with x = q^2, base q^11
  const long order = 120;
  Series total = Series::zero_to(order + 2);
  for (long n = 0; 11 * n * n < order + 2; ++n) {
    Series den = mul(pochhammer(2, 11, n + 1, 0), pochhammer(9, 11, n, 0));
    total = add(total, shift(invert(den, order + 2), 11 * n * n));
  }
  Series ref = shift(sub(total, Series::one()), -2);
  Series g = mock_g(2, 11, order);
  EXPECT_TRUE(eq_to_order(g, ref, order));
}

TEST(Products, MockGLeadingTerms) {
  // g(q;q^11) = q^-1 (-1 + 1/(1-q) + ...) = 1 + q + ...
  Series g = mock_g(1, 11, 40);
  EXPECT_EQ(g.valuation(), 0);
  EXPECT_EQ(g.coeff(0), 1);
  EXPECT_THROW(mock_g(11, 11, 10), SeriesError);
}

TEST(Products, PhiBranches) {
  Series a = phi(11, 1, 30), b = detail::mock_inner_sum(1, 11, 30);
  EXPECT_TRUE(eq_to_order(a, b, 30));
  Series c = phi(11, 2, 30), d = sub(detail::mock_inner_sum(2, 11, 30), Series::one());
  EXPECT_TRUE(eq_to_order(c, d, 30));
  EXPECT_THROW(phi(9, 1, 10), SeriesError);
}

TEST(Monomials, ParseAndEvaluate) {
  Monomial m = parse_monomial("q^3 J11^2 P1^2 P2^2 P3 / J1^3 P4 P5");
  EXPECT_EQ(m.qpow, 3);
  EXPECT_EQ(m.exp[static_cast<int>(Atom::J1)], -3);
  EXPECT_EQ(m.exp[static_cast<int>(Atom::J11)], 2);
  EXPECT_EQ(m.exp[static_cast<int>(Atom::P5)], -1);
  EXPECT_EQ(parse_monomial("1 / J1"), Monomial::atom(Atom::J1, -1));
  EXPECT_THROW(parse_monomial("J7"), SeriesError);
  EXPECT_THROW(parse_monomial("P1 / P2 / P3"), SeriesError);
}

TEST(Monomials, FoldPIndex) {
  EXPECT_EQ(fold_p_index(6), 5);
  EXPECT_EQ(fold_p_index(9), 2);
  EXPECT_EQ(fold_p_index(-1), 1);
  EXPECT_THROW(fold_p_index(22), SeriesError);
}

TEST(Monomials, BasisEvaluation) {
  ProductBasis B(100);
  Series lhs = B.eval(parse_monomial("P1 P2 P3 P4 P5"));
  Series rhs = mul(euler_J(1, 120), pow(euler_J(11, 120), 4));
  EXPECT_TRUE(eq_to_order(lhs, rhs, 100));
  // 1/J1 is the partition generating function
  Series p = B.eval(parse_monomial("1/J1"));
  EXPECT_EQ(ints(p, 0, 10), (std::vector<long>{1, 1, 2, 3, 5, 7, 11, 15, 22, 30}));
  // memoized results are identical
  EXPECT_EQ(B.eval(parse_monomial("J11^2/P1")), B.eval(parse_monomial("J11^2/P1")));
}

TEST(Monomials, BasisPoolSharesInstances) {
  BasisPool pool;
  EXPECT_EQ(pool.get(50).get(), pool.get(50).get());
  EXPECT_NE(pool.get(50).get(), pool.get(60).get());
}
