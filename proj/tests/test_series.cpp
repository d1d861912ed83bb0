#include "qdissect/series.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace qdissect;

namespace {

Series poly(std::initializer_list<long> c, long val = 0) {
  std::vector<Series::Int> v;
  for (long x : c) v.emplace_back(x);
  return Series::polynomial(val, v);
}

Series windowed(std::vector<long> c, long val = 0) {
  std::vector<Series::Int> v(c.begin(), c.end());
  return Series(val, val + static_cast<long>(c.size()), v);
}

std::vector<long> random_coeffs(std::mt19937& rng, long len) {
  std::uniform_int_distribution<long> d(-9, 9);
  std::vector<long> c(static_cast<std::size_t>(len));
  for (auto& x : c) x = d(rng);
  return c;
}

Series random_series(std::mt19937& rng, long len, long val = 0) { return windowed(random_coeffs(rng, len), val); }

}  // namespace

TEST(Series, ExactZeroAndWindowedZero) {
  Series z;
  EXPECT_TRUE(z.is_exact_zero());
  EXPECT_EQ(z.coeff(1000), 0);
  Series w = Series::zero_to(5);
  EXPECT_FALSE(w.is_exact_zero());
  EXPECT_EQ(w.coeff(4), 0);
  EXPECT_THROW(w.coeff(5), SeriesError);
  EXPECT_TRUE(eq_to_order(z, w, 5));
}

TEST(Series, WindowShrinksUnderAddition) {
  Series a = windowed({1, 2, 3, 4});
  Series b = windowed({1, 1});
  Series s = add(a, b);
  EXPECT_EQ(s.trunc(), 2);
  EXPECT_EQ(s.coeff(0), 2);
  EXPECT_EQ(s.coeff(1), 3);
  EXPECT_THROW(s.coeff(2), SeriesError);
}

TEST(Series, ProductWindow) {
  // (1 + q)(1 - q) = 1 - q^2 known to the smaller window
  Series a = windowed({1, 1, 0, 0, 0});
  Series b = windowed({1, -1, 0});
  Series p = mul(a, b);
  EXPECT_EQ(p.trunc(), 3);
  EXPECT_EQ(p.coeff(0), 1);
  EXPECT_EQ(p.coeff(1), 0);
  EXPECT_EQ(p.coeff(2), -1);
}

TEST(Series, ShiftedProductWindow) {
  // q^2 (known below 5) times (known below 3): known below 2 + 3
  Series a = windowed({1, 0, 0}, 2);
  Series b = windowed({1, 1, 1});
  Series p = mul(a, b);
  EXPECT_EQ(p.trunc(), 5);
  EXPECT_EQ(p.coeff(4), 1);
}

TEST(Series, ExactTimesWindowed) {
  Series p = mul(poly({1, -1}), windowed({1, 1, 1, 1}));
  EXPECT_EQ(p.trunc(), 4);
  EXPECT_EQ(coefficients(p, 0, 4), (std::vector<mpq_class>{1, 0, 0, 0}));
}

TEST(Series, GeometricInverse) {
  Series g = invert(poly({1, -1}), 10);
  for (long n = 0; n < 10; ++n) EXPECT_EQ(g.coeff(n), 1);
  EXPECT_THROW(g.coeff(10), SeriesError);
  EXPECT_THROW(invert(poly({1, -1})), SeriesError);
}

TEST(Series, LaurentInverse) {
  // 1/(2q - q^2) = q^-1/2 (1 + q/2 + q^2/4 + ...)
  Series s = invert(poly({2, -1}, 1), 6);
  EXPECT_EQ(s.valuation(), -1);
  EXPECT_EQ(s.coeff(-1), mpq_class(1, 2));
  EXPECT_EQ(s.coeff(0), mpq_class(1, 4));
  EXPECT_EQ(s.coeff(1), mpq_class(1, 8));
}

TEST(Series, InverseOfZeroThrows) { EXPECT_THROW(invert(Series::zero_to(4)), SeriesError); }

TEST(Series, DilateAndDissectRoundTrip) {
  std::mt19937 rng(7);
  Series a = random_series(rng, 40);
  Series d = dilate(a, 11);
  EXPECT_EQ(d.trunc(), 11 * 39 + 1);
  for (long m = 0; m < 11; ++m) {
    Series part = dissect(d, 11, m);
    if (m == 0)
      EXPECT_TRUE(eq_to_order(part, a, 40));
    else
      EXPECT_TRUE(eq_to_order(part, Series(), part.trunc()));
  }
}

TEST(Series, DissectWindowCount) {
  Series a = windowed(std::vector<long>(330, 1));
  for (long m = 0; m < 11; ++m) EXPECT_EQ(dissect(a, 11, m).trunc(), 30);
  EXPECT_EQ(dissect(windowed(std::vector<long>(331, 1)), 11, 0).trunc(), 31);
}

TEST(Series, ReduceMod) {
  Series a = Series(0, 3, {Series::Int(-1), Series::Int(12), Series::Int(22)});
  Series r = reduce_mod(a, 11);
  EXPECT_EQ(coefficients(r, 0, 3), (std::vector<mpq_class>{10, 1, 0}));
  // 1/2 == 6 mod 11
  Series h = Series(0, 1, {Series::Int(1)}, 2);
  EXPECT_EQ(reduce_mod(h, 11).coeff(0), 6);
  Series bad = Series(0, 1, {Series::Int(1)}, 11);
  EXPECT_THROW(reduce_mod(bad, 11), SeriesError);
}

TEST(Series, FirstDifferenceRespectsWindows) {
  Series a = windowed({1, 2, 3});
  Series b = windowed({1, 2, 4, 5});
  EXPECT_EQ(first_difference(a, b, 3), 2);
  EXPECT_EQ(first_difference(a, b, 2), std::nullopt);
  EXPECT_THROW(first_difference(a, b, 4), SeriesError);
}

TEST(Series, FirstNegative) {
  EXPECT_EQ(first_negative(windowed({1, 0, -2, 3}), 4), 2);
  EXPECT_EQ(first_negative(windowed({1, 0, -2, 3}), 2), std::nullopt);
}

TEST(Series, RationalCoefficients) {
  Series a = Series::from_rationals(0, 3, {mpq_class(1, 3), mpq_class(1, 2), mpq_class(0)});
  EXPECT_EQ(a.coeff(0), mpq_class(1, 3));
  EXPECT_EQ(to_string(a.coeff(1)), "1/2");
  EXPECT_EQ(to_string(mpq_class(-4, 6)), "-2/3");
  EXPECT_EQ(to_string(mpq_class(5)), "5");
}

TEST(Series, Power) {
  Series s = pow(poly({1, 1}), 5);
  EXPECT_EQ(coefficients(s, 0, 6), (std::vector<mpq_class>{1, 5, 10, 10, 5, 1}));
  Series inv = pow(windowed({1, 1, 0, 0, 0, 0}), -2);
  EXPECT_EQ(coefficients(inv, 0, 4), (std::vector<mpq_class>{1, -2, 3, -4}));
}

// property tests on random windowed series

TEST(SeriesProperties, RingAxiomsOnWindows) {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 30; ++trial) {
    Series a = random_series(rng, 25), b = random_series(rng, 20), c = random_series(rng, 30);
    EXPECT_TRUE(eq_to_order(mul(a, b), mul(b, a), 20));
    EXPECT_TRUE(eq_to_order(mul(mul(a, b), c), mul(a, mul(b, c)), 20));
    EXPECT_TRUE(eq_to_order(mul(a, add(b, c)), add(mul(a, b), mul(a, c)), 20));
    EXPECT_TRUE(eq_to_order(sub(a, a), Series(), 25));
  }
}

TEST(SeriesProperties, InverseIsInverse) {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 30; ++trial) {
    auto c = random_coeffs(rng, 20);
    c[0] = trial % 2 ? 1 : 3;
    Series u = windowed(c);
    EXPECT_TRUE(eq_to_order(mul(u, invert(u)), Series::one(), 20));
  }
}

TEST(SeriesProperties, DilationIsMultiplicative) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    Series a = random_series(rng, 12), b = random_series(rng, 12);
    Series lhs = dilate(mul(a, b), 3), rhs = mul(dilate(a, 3), dilate(b, 3));
    EXPECT_TRUE(eq_to_order(lhs, rhs, std::min(lhs.trunc(), rhs.trunc())));
  }
}

TEST(SeriesProperties, TruncationNeverExposesUndeterminedCoefficients) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    auto c = random_coeffs(rng, 15);
    Series a = windowed(c), b = random_series(rng, 15);
    // changing a past its window must not change anything the product exposes
    c.push_back(77);
    Series a2 = windowed(c);
    Series p = mul(a, b), p2 = mul(a2, b);
    EXPECT_TRUE(eq_to_order(p, p2, p.trunc()));
  }
}
