#include "dyck/series.hpp"

#include <gtest/gtest.h>

#include <random>

#include "dyck/enumerate.hpp"
#include "dyck/error.hpp"
#include "oracles.hpp"

namespace dyck {
namespace {

BivariateSeries random_series(int order, std::mt19937_64& gen) {
  BivariateSeries s(order);
  for (int n = 0; n <= order; ++n) {
    for (int k = 0; k <= n; ++k) {
      s.set(n, k, static_cast<long long>(gen() % 21) - 10);
    }
  }
  return s;
}

TEST(BivariateSeries, TriangleBounds) {
  BivariateSeries s(3);
  EXPECT_EQ(s.coeff(2, 3), 0);
  EXPECT_EQ(s.coeff(4, 0), 0);
  EXPECT_THROW(s.set(2, 3, 1), Error);
  EXPECT_THROW(s.set(4, 0, 1), Error);
  EXPECT_THROW(BivariateSeries(-1), Error);
  s.set(3, 3, 7);
  EXPECT_EQ(s.coeff(3, 3), 7);
}

TEST(CatalanSeries, Coefficients) {
  const auto c0 = catalan_series(0);
  EXPECT_EQ(c0.coeff(0, 0), 1);
  const auto c3 = catalan_series(3);
  for (int n = 0; n <= 3; ++n) {
    EXPECT_EQ(c3.coeff(n, 0), oracle::dyck_count(n));
  }
  EXPECT_EQ(c3.coeff(3, 0), 5);
}

TEST(CatalanSeries, SatisfiesFunctionalEquation) {
  for (int order : {0, 1, 5, 20, 30}) {
    EXPECT_TRUE(functional_equation_residual(catalan_series(order)).is_zero())
        << order;
  }
  // A perturbed series must leave a residual.
  auto c = catalan_series(10);
  c.set(7, 0, c.coeff(7, 0) + 1);
  EXPECT_FALSE(functional_equation_residual(c).is_zero());
}

TEST(PrimeSeries, Positive) {
  const auto p = prime_series_pos(6);
  EXPECT_EQ(p.coeff(0, 0), 0);
  EXPECT_EQ(p.coeff(1, 0), 1);
  EXPECT_EQ(p.coeff(4, 0), 5);
  for (int n = 1; n <= 6; ++n) {
    EXPECT_EQ(p.coeff(n, 0), oracle::dyck_count(n - 1));
    for (int k = 1; k <= n; ++k) EXPECT_EQ(p.coeff(n, k), 0);
  }
  // x c(x)
  EXPECT_EQ(p, multiply(BivariateSeries::monomial(6, 1, 0), catalan_series(6)));
}

TEST(PrimeSeries, Negative) {
  const auto p = prime_series_neg(6);
  EXPECT_EQ(p.coeff(1, 1), 1);
  EXPECT_EQ(p.coeff(1, 0), 0);
  EXPECT_EQ(p.coeff(3, 3), 2);
  for (int n = 0; n <= 6; ++n) {
    for (int k = 0; k < n; ++k) EXPECT_EQ(p.coeff(n, k), 0);
  }
}

TEST(Multiply, Examples) {
  std::mt19937_64 gen(3);
  const auto a = random_series(6, gen);
  EXPECT_EQ(multiply(a, BivariateSeries::one(6)), a);
  const auto x = BivariateSeries::monomial(4, 1, 0);
  EXPECT_EQ(multiply(x, x), BivariateSeries::monomial(4, 2, 0));
  const auto c = catalan_series(4);
  EXPECT_EQ(multiply(c, c).coeff(2, 0), 5);
  EXPECT_THROW(multiply(BivariateSeries(2), BivariateSeries(3)), Error);
}

TEST(Multiply, TruncatesAtOrder) {
  const auto x3 = BivariateSeries::monomial(4, 3, 1);
  EXPECT_TRUE(multiply(x3, x3).is_zero());
}

TEST(Multiply, CommutativeAndAssociative) {
  std::mt19937_64 gen(17);
  for (int trial = 0; trial < 20; ++trial) {
    const auto a = random_series(10, gen);
    const auto b = random_series(10, gen);
    const auto c = random_series(10, gen);
    ASSERT_EQ(multiply(a, b), multiply(b, a));
    ASSERT_EQ(multiply(multiply(a, b), c), multiply(a, multiply(b, c)));
  }
}

TEST(GeometricInverse, Examples) {
  EXPECT_EQ(geometric_inverse(BivariateSeries(5)), BivariateSeries::one(5));
  const auto v = geometric_inverse(BivariateSeries::monomial(5, 1, 0));
  for (int n = 0; n <= 5; ++n) EXPECT_EQ(v.coeff(n, 0), 1);
  EXPECT_THROW(geometric_inverse(BivariateSeries::one(3)), Error);
}

TEST(GeometricInverse, InvertsOneMinusU) {
  std::mt19937_64 gen(5);
  for (int trial = 0; trial < 10; ++trial) {
    auto u = random_series(8, gen);
    u.set(0, 0, 0);
    const auto v = geometric_inverse(u);
    const auto one = BivariateSeries::one(8);
    EXPECT_EQ(multiply(v, one - u), one);
  }
}

TEST(NSeries, Examples) {
  const auto N = n_series(4);
  EXPECT_EQ(N.coeff(0, 0), 1);
  for (int k = 0; k <= 3; ++k) EXPECT_EQ(N.coeff(3, k), 5);
  EXPECT_EQ(N.coeff(3, 4), 0);
}

TEST(NSeries, EveryCoefficientIsCatalanUpTo30) {
  const auto N = n_series(30);
  for (int n = 0; n <= 30; ++n) {
    BigInt row_sum = 0;
    for (int k = 0; k <= n; ++k) {
      ASSERT_EQ(N.coeff(n, k), catalan(n)) << n << "," << k;
      row_sum += N.coeff(n, k);
    }
    ASSERT_EQ(row_sum, central_binomial(n));
  }
}

TEST(NSeries, MatchesBruteForceUpTo9) {
  const auto N = n_series(9);
  for (int n = 0; n <= 9; ++n) {
    const auto sizes = oracle::class_sizes(n);
    for (int k = 0; k <= n; ++k) {
      ASSERT_EQ(N.coeff(n, k), sizes[static_cast<std::size_t>(k)]);
    }
  }
}

TEST(SeriesText, DumpFormat) {
  EXPECT_EQ(to_text(n_series(2)), "0\t0\t1\n1\t0\t1\n1\t1\t1\n2\t0\t2\n2\t1\t2\n2\t2\t2\n");
}

}  // namespace
}  // namespace dyck
