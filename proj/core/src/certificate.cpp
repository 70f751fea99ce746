#include "hyperlag/certificate.hpp"

#include <bit>

#include "hyperlag/error.hpp"

namespace hyperlag {
namespace {

bool is_prime(unsigned long q) {
  if (q < 2) return false;
  for (unsigned long d = 2; d <= q / d; ++d)
    if (q % d == 0) return false;
  return true;
}

bool divisible(const mpz_class& a, unsigned long q) { return mpz_divisible_ui_p(a.get_mpz_t(), q) != 0; }

mpz_class mod(const mpz_class& a, const mpz_class& m) {
  mpz_class r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

}  // namespace

DivisibilityReport check_divisibility(int k, const IntPolynomial& pk) {
  DivisibilityReport report;
  report.k = k;
  const auto b = flip_coefficients(k, pk);
  const std::size_t top = b.size() - 1;
  for (std::size_t i = 0; i < b.size(); ++i) {
    const bool three_divides = divisible(b[i], 3);
    if (three_divides != (i != top)) report.failing_indices.push_back(i);
  }
  report.indices_examined = b.size();
  report.b_sequence_checked = true;
  report.cond_i_holds = report.failing_indices.empty();
  report.cond_ii_holds = !divisible(b[0], 9);
  return report;
}

DivisibilityReport check_divisibility(int k, int cap) { return check_divisibility(k, tower_polynomial(k, cap)); }

const char* to_string(EisensteinOrientation o) noexcept {
  switch (o) {
    case EisensteinOrientation::ExceptionAtLeading:
      return "leading";
    case EisensteinOrientation::ExceptionAtConstant:
      return "constant";
    case EisensteinOrientation::NotApplicable:
      break;
  }
  return "not-applicable";
}

EisensteinWitness eisenstein_check(const IntPolynomial& poly, unsigned long q) {
  if (!is_prime(q)) throw InputError(std::to_string(q) + " is not prime");
  if (poly.degree() < 1) throw InputError("Eisenstein's criterion needs a polynomial of degree at least 1");

  const auto c = poly.coefficients();
  const std::size_t n = c.size() - 1;
  const mpz_class q2 = mpz_class(q) * q;

  EisensteinWitness w;
  w.prime = q;
  w.leading_mod_q2 = mod(c[n], q2);
  w.constant_mod_q2 = mod(c[0], q2);

  bool middle = true;
  for (std::size_t i = 1; i < n && middle; ++i) middle = divisible(c[i], q);
  if (!middle) return w;

  const bool lead_div = divisible(c[n], q);
  const bool const_div = divisible(c[0], q);
  if (!lead_div && const_div && w.constant_mod_q2 != 0) {
    w.passed = true;
    w.orientation = EisensteinOrientation::ExceptionAtLeading;
  } else if (lead_div && !const_div && w.leading_mod_q2 != 0) {
    w.passed = true;
    w.orientation = EisensteinOrientation::ExceptionAtConstant;
  }
  return w;
}

BigFloat verify_root(const IntPolynomial& poly, const BigFloat& value, long precision_bits) {
  if (value.sign() <= 0 || !(value < BigFloat(1L, value.precision())))
    throw InputError("verify_root expects a value in (0, 1)");
  if (precision_bits < kMinPrecisionBits)
    throw InputError("precision must be at least " + std::to_string(kMinPrecisionBits) + " bits");
  if (poly.is_zero()) return BigFloat(precision_bits);

  // With 0 < x < 1 every Horner partial sum is bounded by sum |c_i|, so this
  // headroom keeps coefficients exact and confines rounding to ~2^-precision.
  const auto c = poly.coefficients();
  const long headroom =
      static_cast<long>(poly.max_coefficient_bits()) + static_cast<long>(std::bit_width(c.size())) + 32;
  const long wp = precision_bits + headroom;

  BigFloat lo(wp);
  BigFloat hi(wp);
  const std::size_t n = c.size() - 1;
  mpfr_set_z(lo.raw(), c[n].get_mpz_t(), MPFR_RNDD);
  mpfr_set_z(hi.raw(), c[n].get_mpz_t(), MPFR_RNDU);
  for (std::size_t i = n; i-- > 0;) {
    // x > 0, so [lo, hi] * x = [lo * x, hi * x].
    mpfr_mul(lo.raw(), lo.raw(), value.raw(), MPFR_RNDD);
    mpfr_mul(hi.raw(), hi.raw(), value.raw(), MPFR_RNDU);
    mpfr_add_z(lo.raw(), lo.raw(), c[i].get_mpz_t(), MPFR_RNDD);
    mpfr_add_z(hi.raw(), hi.raw(), c[i].get_mpz_t(), MPFR_RNDU);
  }
  mpfr_abs(lo.raw(), lo.raw(), MPFR_RNDU);
  mpfr_abs(hi.raw(), hi.raw(), MPFR_RNDU);
  BigFloat bound(precision_bits);
  mpfr_max(bound.raw(), lo.raw(), hi.raw(), MPFR_RNDU);
  return bound;
}

BigFloat default_residual_tolerance(long precision_bits) {
  return BigFloat::pow2(-(precision_bits / 2), kMinPrecisionBits);
}

DegreeCertificate degree_certificate(int k, const IntPolynomial& pk, long precision_bits) {
  DegreeCertificate cert;
  cert.k = k;
  cert.polynomial = pk;
  cert.claimed_degree = std::size_t{1} << k;
  cert.precision_bits = precision_bits;
  cert.root = nested_radical(k, precision_bits);
  cert.residual_bound = verify_root(pk, cert.root, precision_bits);
  cert.tolerance = default_residual_tolerance(precision_bits);
  cert.eisenstein_prime = 3;
  cert.eisenstein = eisenstein_check(pk, cert.eisenstein_prime);
  if (pk.degree() == static_cast<int>(cert.claimed_degree)) {
    cert.divisibility = check_divisibility(k, pk);
  } else {
    cert.divisibility.k = k;
    cert.failures.push_back("degree " + std::to_string(pk.degree()) + " differs from 2^k = " +
                            std::to_string(cert.claimed_degree));
  }
  if (!(cert.residual_bound <= cert.tolerance))
    cert.failures.push_back("residual bound " + cert.residual_bound.to_string(6) + " above tolerance " +
                            cert.tolerance.to_string(6));
  if (!cert.eisenstein.passed) cert.failures.push_back("criterion not applicable at q = 3");
  if (cert.divisibility.b_sequence_checked && !cert.divisibility.cond_i_holds)
    cert.failures.push_back("condition (i) fails at " + std::to_string(cert.divisibility.failing_indices.size()) +
                            " indices");
  if (cert.divisibility.b_sequence_checked && !cert.divisibility.cond_ii_holds)
    cert.failures.push_back("condition (ii) fails: 9 divides b_0");
  cert.valid = cert.failures.empty();
  return cert;
}

DegreeCertificate degree_certificate(int k, long precision_bits, int cap) {
  return degree_certificate(k, tower_polynomial(k, cap), precision_bits);
}

}  // namespace hyperlag
