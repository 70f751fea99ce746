#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <string>
#include <utility>

namespace hyperlag {

inline constexpr long kMinPrecisionBits = 64;

// Owning wrapper around an MPFR number. Arithmetic is correctly rounded to
// nearest at the larger of the operand precisions.
class BigFloat {
 public:
  explicit BigFloat(long precision_bits = 256);
  BigFloat(double value, long precision_bits);
  BigFloat(long value, long precision_bits);
  // Exact when the integer fits in precision_bits, otherwise rounded by rnd.
  BigFloat(const mpz_class& value, long precision_bits, mpfr_rnd_t rnd = MPFR_RNDN);
  static BigFloat parse(const std::string& decimal, long precision_bits);

  BigFloat(const BigFloat& other);
  BigFloat(BigFloat&& other) noexcept;
  BigFloat& operator=(const BigFloat& other);
  BigFloat& operator=(BigFloat&& other) noexcept;
  ~BigFloat();

  long precision() const noexcept { return static_cast<long>(mpfr_get_prec(value_)); }
  mpfr_ptr raw() noexcept { return value_; }
  mpfr_srcptr raw() const noexcept { return value_; }

  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
  // Scientific notation with the given number of significant digits.
  std::string to_string(int digits = 20) const;
  // (mantissa, exponent) with value == mantissa * 2^exponent exactly.
  std::pair<mpz_class, long> mantissa_exponent() const;
  // log2|x|; -inf for zero.
  double log2_abs() const;
  bool is_zero() const noexcept { return mpfr_zero_p(value_) != 0; }
  int sign() const noexcept { return mpfr_sgn(value_); }

  friend BigFloat operator+(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator-(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator*(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator/(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator-(const BigFloat& a);
  friend BigFloat sqrt(const BigFloat& a);
  friend BigFloat abs(const BigFloat& a);

  friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_less_p(a.value_, b.value_) != 0; }
  friend bool operator>(const BigFloat& a, const BigFloat& b) { return b < a; }
  friend bool operator<=(const BigFloat& a, const BigFloat& b) { return mpfr_lessequal_p(a.value_, b.value_) != 0; }
  friend bool operator>=(const BigFloat& a, const BigFloat& b) { return b <= a; }
  friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_equal_p(a.value_, b.value_) != 0; }

  // Rounds to a new precision.
  BigFloat with_precision(long precision_bits, mpfr_rnd_t rnd = MPFR_RNDN) const;
  // 2^e at the given precision (exact).
  static BigFloat pow2(long e, long precision_bits);

 private:
  mpfr_t value_;
};

}  // namespace hyperlag
