#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "rfw/count.hpp"

using rfw::BigCount;
using rfw::FactoredCount;

TEST(FactoredCount, FactorsSmallValues) {
  EXPECT_TRUE(FactoredCount(0).is_zero());
  EXPECT_TRUE(FactoredCount().is_zero());
  EXPECT_TRUE(FactoredCount(1).exponents().empty());
  const FactoredCount c(360);  // 2^3 3^2 5
  EXPECT_EQ(c.exponents().at(2), 3u);
  EXPECT_EQ(c.exponents().at(3), 2u);
  EXPECT_EQ(c.exponents().at(5), 1u);
  EXPECT_EQ(c.to_dense(), 360);
  EXPECT_EQ(FactoredCount(1000003).exponents().at(1000003), 1u);
}

TEST(FactoredCount, ArithmeticMatchesDense) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 500; ++trial) {
    const std::uint64_t a = 1 + rng() % 100000, b = 1 + rng() % 100000;
    const FactoredCount fa(a), fb(b);
    EXPECT_EQ((fa * fb).to_dense(), BigCount(a) * b);
    const std::uint64_t hi = std::max(a, b), lo = std::min(a, b);
    EXPECT_EQ((FactoredCount(hi) - FactoredCount(lo)).to_dense(), BigCount(hi - lo));
    EXPECT_EQ(rfw::divide_exact(fa * fb, fb), fa);
    EXPECT_EQ(rfw::pow_count(fa, 5).to_dense(), rfw::pow_count(BigCount(a), 5));
  }
}

TEST(FactoredCount, SubtractionOfHugeValuesWithSmallCofactors) {
  // 7 * 3^1000000 - 5 * 3^1000000 = 2 * 3^1000000 without dense evaluation.
  const FactoredCount big = rfw::pow_count(FactoredCount(3), 1'000'000);
  const FactoredCount diff = FactoredCount(7) * big - FactoredCount(5) * big;
  EXPECT_EQ(diff, FactoredCount(2) * big);
  EXPECT_NEAR(diff.log(), std::log(2.0) + 1e6 * std::log(3.0), 1e-6);
}

TEST(FactoredCount, ErrorPaths) {
  EXPECT_THROW(FactoredCount(2) - FactoredCount(3), rfw::numeric_error);
  EXPECT_THROW(rfw::divide_exact(FactoredCount(6), FactoredCount(4)), rfw::inexact_division_error);
  EXPECT_THROW(rfw::divide_exact(FactoredCount(6), FactoredCount()), rfw::numeric_error);
  // Coprime cofactors that do not fit in 64 bits.
  const FactoredCount a = rfw::pow_count(FactoredCount(2), 70);
  const FactoredCount b = rfw::pow_count(FactoredCount(3), 2);
  EXPECT_THROW(a - b, rfw::numeric_error);
  EXPECT_EQ(FactoredCount(5) - FactoredCount(), FactoredCount(5));
  EXPECT_TRUE((FactoredCount(5) - FactoredCount(5)).is_zero());
}

TEST(BigCount, DivideExactAndLog) {
  EXPECT_EQ(rfw::divide_exact(BigCount(12), BigCount(4)), 3);
  EXPECT_THROW(rfw::divide_exact(BigCount(13), BigCount(4)), rfw::inexact_division_error);
  const BigCount big = rfw::pow_count(BigCount(3), 5000);
  EXPECT_NEAR(rfw::log_count(big), 5000 * std::log(3.0), 1e-9);
  EXPECT_DOUBLE_EQ(rfw::log_count(BigCount(8)), std::log(8.0));
}
