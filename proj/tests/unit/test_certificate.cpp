#include <gtest/gtest.h>

#include "hyperlag/certificate.hpp"
#include "hyperlag/error.hpp"
#include "hyperlag/tower.hpp"

using namespace hyperlag;

TEST(Divisibility, HoldsForFirstTenLevels) {
  const auto seq = tower_sequence(10);
  for (int k = 1; k <= 10; ++k) {
    auto rep = check_divisibility(k, seq[static_cast<std::size_t>(k - 1)]);
    EXPECT_TRUE(rep.passed()) << "k=" << k;
    EXPECT_TRUE(rep.failing_indices.empty());
    EXPECT_EQ(rep.indices_examined, (1u << k) + 1);
  }
}

TEST(Divisibility, DetectsViolations) {
  // b = (1, 0, 3): 3 does not divide b_0.
  auto rep = check_divisibility(1, IntPolynomial{3, 0, 1});
  EXPECT_FALSE(rep.passed());
  EXPECT_FALSE(rep.cond_i_holds);
  EXPECT_EQ(rep.failing_indices, (std::vector<std::size_t>{0, 2}));
  // b = (9, 0, 1) violates only (ii).
  auto rep2 = check_divisibility(1, IntPolynomial{1, 0, 9});
  EXPECT_TRUE(rep2.cond_i_holds);
  EXPECT_FALSE(rep2.cond_ii_holds);
}

TEST(Eisenstein, TowerPolynomials) {
  const auto seq = tower_sequence(10);
  for (int k = 1; k <= 10; ++k) {
    auto w = eisenstein_check(seq[static_cast<std::size_t>(k - 1)], 3);
    EXPECT_TRUE(w.passed) << "k=" << k;
    EXPECT_EQ(w.orientation, k % 2 == 1 ? EisensteinOrientation::ExceptionAtConstant
                                        : EisensteinOrientation::ExceptionAtLeading);
  }
}

TEST(Eisenstein, Orientations) {
  auto a = eisenstein_check(IntPolynomial{3, 0, 1}, 3);
  EXPECT_TRUE(a.passed);
  EXPECT_EQ(a.orientation, EisensteinOrientation::ExceptionAtLeading);
  EXPECT_EQ(a.constant_mod_q2, 3);
  auto b = eisenstein_check(IntPolynomial{1, 3, 6}, 3);
  EXPECT_TRUE(b.passed);
  EXPECT_EQ(b.orientation, EisensteinOrientation::ExceptionAtConstant);
  EXPECT_STREQ(to_string(b.orientation), "constant");
}

TEST(Eisenstein, Failures) {
  auto w = eisenstein_check(IntPolynomial{-1, 0, 1}, 3);
  EXPECT_FALSE(w.passed);
  EXPECT_EQ(w.orientation, EisensteinOrientation::NotApplicable);
  EXPECT_STREQ(to_string(w.orientation), "not-applicable");
  EXPECT_FALSE(eisenstein_check(IntPolynomial{9, 0, 1}, 3).passed);
  EXPECT_THROW(eisenstein_check(IntPolynomial{3, 0, 1}, 4), InputError);
  EXPECT_THROW(eisenstein_check(IntPolynomial{3}, 3), InputError);
}

TEST(VerifyRoot, ExactResidualAtKnownPoint) {
  // p_2(1/sqrt 3) = 3 - 6 + 23/9 = -4/9
  BigFloat bound = verify_root(tower_polynomial(2), nested_radical(1, 256), 256);
  EXPECT_NEAR(bound.to_double(), 4.0 / 9.0, 1e-15);
  EXPECT_GE(bound.to_double(), 4.0 / 9.0 - 1e-70);
}

TEST(VerifyRoot, RootsGiveTinyBounds) {
  const auto seq = tower_sequence(8);
  for (int k = 1; k <= 8; ++k) {
    const auto& pk = seq[static_cast<std::size_t>(k - 1)];
    BigFloat b512 = verify_root(pk, nested_radical(k, 512), 512);
    BigFloat b1024 = verify_root(pk, nested_radical(k, 1024), 1024);
    EXPECT_LE(b512.log2_abs(), -128.0) << "k=" << k;
    EXPECT_GE(b512.log2_abs() - b1024.log2_abs(), 64.0) << "k=" << k;
  }
}

TEST(VerifyRoot, DomainChecked) {
  EXPECT_THROW(verify_root(tower_polynomial(1), BigFloat(1.5, 128), 128), InputError);
  EXPECT_THROW(verify_root(tower_polynomial(1), BigFloat(0L, 128), 128), InputError);
}

TEST(DegreeCertificate, ValidUpToEight) {
  for (int k = 1; k <= 8; ++k) {
    auto cert = degree_certificate(k, default_precision_bits(k));
    EXPECT_TRUE(cert.valid) << "k=" << k;
    EXPECT_TRUE(cert.failures.empty());
    EXPECT_EQ(cert.claimed_degree, 1u << k);
    EXPECT_TRUE(cert.residual_bound <= cert.tolerance);
  }
}

TEST(DegreeCertificate, InvalidWhenCriterionFails) {
  auto cert = degree_certificate(1, IntPolynomial{-1, 0, 1}, 256);
  EXPECT_FALSE(cert.valid);
  bool named = false;
  for (const auto& f : cert.failures) named = named || f.find("criterion not applicable") != std::string::npos;
  EXPECT_TRUE(named);
}

TEST(DegreeCertificate, ToleranceSchedule) {
  EXPECT_DOUBLE_EQ(default_residual_tolerance(256).log2_abs(), -128.0);
}
