#include <gtest/gtest.h>

#include <random>

#include "hyperlag/error.hpp"
#include "hyperlag/tower.hpp"
#include "oracles.hpp"

using namespace hyperlag;

TEST(NestedRadical, KnownValues) {
    EXPECT_EQ(nested_radical(1, 256).to_string(20), "5.7735026918962576451e-01");
  EXPECT_EQ(nested_radical(2, 256).to_string(20), "7.3615043403351224290e-01");
  EXPECT_EQ(nested_radical(3, 256).to_string(20), "8.0906065934503347046e-01");
  EXPECT_THROW(nested_radical(0, 256), InputError);
  EXPECT_THROW(nested_radical(1, 32), InputError);
}

TEST(NestedRadical, FixedPointRelation) {
  for (int k = 1; k <= 8; ++k) {
    BigFloat prev = k == 1 ? BigFloat(0L, 512) : nested_radical(k - 1, 512);
    BigFloat cur = nested_radical(k, 512);
    BigFloat rhs = BigFloat(1L, 512) / sqrt(BigFloat(3L, 512) - BigFloat(2L, 512) * prev);
    EXPECT_LT(abs(cur - rhs).log2_abs(), -500.0);
  }
}

TEST(NestedRadical, LimitGapShrinks) {
  double previous = 1.0;
  for (int k = 1; k <= 12; ++k) {
    double gap = limit_gap(k, 256).to_double();
    EXPECT_GT(gap, 0.0);
    EXPECT_LT(gap, previous);
    previous = gap;
  }
}

TEST(DefaultPrecision, Schedule) {
  EXPECT_EQ(default_precision_bits(1), 256);
  EXPECT_EQ(default_precision_bits(5), 256);
  EXPECT_EQ(default_precision_bits(8), 512);
  EXPECT_EQ(default_precision_bits(9), 1024);
}

TEST(Tower, FirstLevels) {
  EXPECT_EQ(tower_polynomial(1), (IntPolynomial{-1, 0, 3}));
  EXPECT_EQ(tower_polynomial(2), (IntPolynomial{3, 0, -18, 0, 23}));
  EXPECT_EQ(tower_polynomial(3), (IntPolynomial{23, 0, -276, 0, 1170, 0, -2052, 0, 1263}));
}

TEST(Tower, MatchesBinomialOracle) {
  const auto seq = tower_sequence(8);
  for (int k = 1; k <= 8; ++k) {
    EXPECT_EQ(seq[static_cast<std::size_t>(k - 1)], IntPolynomial(oracle::tower(k))) << "k=" << k;
    EXPECT_EQ(seq[static_cast<std::size_t>(k - 1)].degree(), 1 << k);
  }
}

TEST(Tower, FunctionalEquationAtRationals) {
  // p_{k+1}(x) = (2x^2)^(2^k) p_k((3x^2 - 1) / (2x^2)), checked exactly.
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<long> num(-50, 50), den(1, 50);
  const auto seq = tower_sequence(7);
  for (int k = 1; k <= 6; ++k) {
    const auto& pk = seq[static_cast<std::size_t>(k - 1)];
    const auto& next = seq[static_cast<std::size_t>(k)];
    for (int t = 0; t < 20; ++t) {
      long a = num(rng);
      if (a == 0) a = 1;
      mpq_class x(a, den(rng));
      x.canonicalize();
      const mpq_class x2 = x * x;
      const mpq_class y = (3 * x2 - 1) / (2 * x2);
      mpq_class scale = 1;
      for (long j = 0; j < (1L << k); ++j) scale *= 2 * x2;
      EXPECT_EQ(next.evaluate(x), scale * pk.evaluate(y)) << "k=" << k << " x=" << x.get_str();
    }
  }
}

TEST(Tower, StepValidatesDegree) {
  EXPECT_THROW(tower_step(IntPolynomial{1, 0, 0, 0, 0, 1}, 2), InputError);
}

TEST(Tower, CapEnforced) {
  EXPECT_THROW(tower_polynomial(13), ResourceError);
  EXPECT_THROW(tower_polynomial(5, 4), ResourceError);
  EXPECT_THROW(tower_polynomial(0), InputError);
}

TEST(Tower, FlipCoefficients) {
  auto p2 = tower_polynomial(2);
  auto b2 = flip_coefficients(2, p2);
  EXPECT_EQ(b2, (std::vector<mpz_class>{3, 0, -18, 0, 23}));
  auto b1 = flip_coefficients(1, tower_polynomial(1));
  EXPECT_EQ(b1, (std::vector<mpz_class>{3, 0, -1}));
  EXPECT_THROW(flip_coefficients(3, p2), InputError);
}
