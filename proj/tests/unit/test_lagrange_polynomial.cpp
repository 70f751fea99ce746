#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "hyperlag/error.hpp"
#include "hyperlag/lagrange_polynomial.hpp"
#include "oracles.hpp"
#include "random_patterns.hpp"

using namespace hyperlag;

TEST(SimplexVector, Normalizes) {
  SimplexVector x({1.0, 3.0});
  EXPECT_DOUBLE_EQ(x[0], 0.25);
  EXPECT_DOUBLE_EQ(x[1], 0.75);
  EXPECT_EQ(SimplexVector::vertex(3, 2), SimplexVector({0.0, 1.0, 0.0}));
  EXPECT_DOUBLE_EQ(SimplexVector::uniform(4)[3], 0.25);
}

TEST(SimplexVector, RejectsBadInput) {
  EXPECT_THROW(SimplexVector({}), InputError);
  EXPECT_THROW(SimplexVector({0.0, 0.0}), InputError);
  EXPECT_THROW(SimplexVector({1.0, -0.5}), InputError);
  EXPECT_THROW(SimplexVector({NAN, 1.0}), InputError);
  EXPECT_THROW(SimplexVector({INFINITY, 1.0}), InputError);
  EXPECT_THROW(SimplexVector::vertex(3, 4), InputError);
}

TEST(LagrangePolynomial, P1AtUniform) {
  LagrangePolynomial poly(build_pk(1));
  // 6 (1/27) + 3 (1/27) + 3 (1/27)
  EXPECT_NEAR(poly.evaluate(SimplexVector::uniform(3)), 12.0 / 27.0, 1e-15);
}

TEST(LagrangePolynomial, ExactCoefficients) {
  LagrangePolynomial poly(build_pk(1));
  ASSERT_EQ(poly.terms().size(), 3u);
  EXPECT_EQ(poly.terms()[0].coefficient, mpq_class(6));
  EXPECT_EQ(poly.terms()[1].coefficient, mpq_class(3));
  std::vector<mpq_class> x{mpq_class(1, 4), mpq_class(1, 4), mpq_class(1, 2)};
  // 6/32 + 3/16 + 3/16
  EXPECT_EQ(poly.evaluate_exact(x), mpq_class(9, 16));
}

TEST(LagrangePolynomial, SingleEdgeThreshold) {
  for (int r = 2; r <= 6; ++r) {
    LagrangePolynomial poly(named_pattern("single-edge-" + std::to_string(r)));
    double expected = 1;
    for (int j = 1; j <= r; ++j) expected *= static_cast<double>(j) / r;
    EXPECT_NEAR(poly.evaluate(SimplexVector::uniform(r)), expected, 1e-15);
  }
}

TEST(LagrangePolynomial, DimensionChecked) {
  LagrangePolynomial poly(build_pk(1));
  std::vector<double> x{0.5, 0.5};
  EXPECT_THROW(poly.evaluate(x), InputError);
  EXPECT_THROW(poly.gradient(x), InputError);
}

TEST(LagrangePolynomial, ZeroPolynomial) {
  LagrangePolynomial poly(Pattern(3, 2, {}));
  EXPECT_TRUE(poly.is_zero());
  EXPECT_EQ(poly.evaluate(SimplexVector::uniform(2)), 0.0);
}

TEST(LagrangePolynomialProperty, AgreesWithDirectEvaluation) {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 200; ++t) {
    Pattern p = tools::random_pattern(rng);
    auto x = tools::random_simplex_point(rng, p.m());
    std::vector<double> xs(x.coords().begin(), x.coords().end());
    EXPECT_NEAR(LagrangePolynomial(p).evaluate(x), oracle::lagrangian_at(p, xs), 1e-13);
  }
}

TEST(LagrangePolynomialProperty, EulerGradientHomogeneity) {
  std::mt19937_64 rng(22);
  for (int t = 0; t < 200; ++t) {
    Pattern p = tools::random_pattern(rng);
    LagrangePolynomial poly(p);
    auto x = tools::random_simplex_point(rng, p.m());
    std::vector<double> xs(x.coords().begin(), x.coords().end());
    std::vector<double> g(xs.size());
    const double value = poly.value_and_gradient(xs, g);
    EXPECT_EQ(g, poly.gradient(x));

    double euler = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) euler += xs[i] * g[i];
    EXPECT_NEAR(euler, p.r() * value, 1e-12);

    const double h = 1e-6;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      auto xp = xs, xm = xs;
      xp[i] += h;
      xm[i] -= h;
      EXPECT_NEAR((poly.evaluate(xp) - poly.evaluate(xm)) / (2 * h), g[i], 1e-6);
    }

    const double c = 0.3;
    auto cx = xs;
    for (double& v : cx) v *= c;
    EXPECT_NEAR(poly.evaluate(cx), std::pow(c, p.r()) * value, 1e-12);

    std::vector<long double> xl(xs.begin(), xs.end());
    EXPECT_NEAR(static_cast<double>(poly.evaluate_extended(xl)), value, 1e-14);
  }
}
