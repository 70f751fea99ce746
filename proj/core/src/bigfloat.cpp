#include "hyperlag/bigfloat.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>

#include "hyperlag/error.hpp"

namespace hyperlag {
namespace {

long checked(long precision_bits) {
  if (precision_bits < kMinPrecisionBits)
    throw InputError("precision must be at least " + std::to_string(kMinPrecisionBits) + " bits, got " +
                     std::to_string(precision_bits));
  if (precision_bits > static_cast<long>(MPFR_PREC_MAX)) throw InputError("precision too large");
  return precision_bits;
}

long joint(const BigFloat& a, const BigFloat& b) { return std::max(a.precision(), b.precision()); }

}  // namespace

BigFloat::BigFloat(long precision_bits) {
  mpfr_init2(value_, checked(precision_bits));
  mpfr_set_zero(value_, 1);
}

BigFloat::BigFloat(double value, long precision_bits) : BigFloat(precision_bits) {
  mpfr_set_d(value_, value, MPFR_RNDN);
}

BigFloat::BigFloat(long value, long precision_bits) : BigFloat(precision_bits) {
  mpfr_set_si(value_, value, MPFR_RNDN);
}

BigFloat::BigFloat(const mpz_class& value, long precision_bits, mpfr_rnd_t rnd) : BigFloat(precision_bits) {
  mpfr_set_z(value_, value.get_mpz_t(), rnd);
}

BigFloat BigFloat::parse(const std::string& decimal, long precision_bits) {
  BigFloat out(precision_bits);
  if (mpfr_set_str(out.value_, decimal.c_str(), 10, MPFR_RNDN) != 0)
    throw InputError("not a decimal number: '" + decimal + "'");
  return out;
}

BigFloat::BigFloat(const BigFloat& other) {
  mpfr_init2(value_, mpfr_get_prec(other.value_));
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept {
  // Leave the moved-from object valid but minimal.
  mpfr_init2(value_, mpfr_get_prec(other.value_));
  mpfr_swap(value_, other.value_);
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
  if (this != &other) {
    mpfr_set_prec(value_, mpfr_get_prec(other.value_));
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(value_); }

std::string BigFloat::to_string(int digits) const {
  digits = std::max(digits, 2);
  const auto n = static_cast<std::size_t>(mpfr_snprintf(nullptr, 0, "%.*Re", digits - 1, value_));
  std::string buf(n + 1, '\0');
  mpfr_snprintf(buf.data(), buf.size(), "%.*Re", digits - 1, value_);
  buf.resize(n);
  return buf;
}

std::pair<mpz_class, long> BigFloat::mantissa_exponent() const {
  mpz_class m;
  if (mpfr_zero_p(value_)) return {m, 0};
  const mpfr_exp_t e = mpfr_get_z_2exp(m.get_mpz_t(), value_);
  // Strip trailing zero bits so the pair is canonical.
  const auto tz = static_cast<long>(mpz_scan1(m.get_mpz_t(), 0));
  mpz_tdiv_q_2exp(m.get_mpz_t(), m.get_mpz_t(), static_cast<mp_bitcnt_t>(tz));
  return {m, static_cast<long>(e) + tz};
}

double BigFloat::log2_abs() const {
  if (mpfr_zero_p(value_)) return -std::numeric_limits<double>::infinity();
  long e = 0;
  const double d = mpfr_get_d_2exp(&e, value_, MPFR_RNDN);
  return std::log2(std::fabs(d)) + static_cast<double>(e);
}

BigFloat operator+(const BigFloat& a, const BigFloat& b) {
  BigFloat out(joint(a, b));
  mpfr_add(out.value_, a.value_, b.value_, MPFR_RNDN);
  return out;
}

BigFloat operator-(const BigFloat& a, const BigFloat& b) {
  BigFloat out(joint(a, b));
  mpfr_sub(out.value_, a.value_, b.value_, MPFR_RNDN);
  return out;
}

BigFloat operator*(const BigFloat& a, const BigFloat& b) {
  BigFloat out(joint(a, b));
  mpfr_mul(out.value_, a.value_, b.value_, MPFR_RNDN);
  return out;
}

BigFloat operator/(const BigFloat& a, const BigFloat& b) {
  BigFloat out(joint(a, b));
  mpfr_div(out.value_, a.value_, b.value_, MPFR_RNDN);
  return out;
}

BigFloat operator-(const BigFloat& a) {
  BigFloat out(a.precision());
  mpfr_neg(out.value_, a.value_, MPFR_RNDN);
  return out;
}

BigFloat sqrt(const BigFloat& a) {
  BigFloat out(a.precision());
  mpfr_sqrt(out.value_, a.value_, MPFR_RNDN);
  return out;
}

BigFloat abs(const BigFloat& a) {
  BigFloat out(a.precision());
  mpfr_abs(out.value_, a.value_, MPFR_RNDN);
  return out;
}

BigFloat BigFloat::with_precision(long precision_bits, mpfr_rnd_t rnd) const {
  BigFloat out(precision_bits);
  mpfr_set(out.value_, value_, rnd);
  return out;
}

BigFloat BigFloat::pow2(long e, long precision_bits) {
  BigFloat out(precision_bits);
  mpfr_set_ui_2exp(out.value_, 1, e, MPFR_RNDN);
  return out;
}

}  // namespace hyperlag
