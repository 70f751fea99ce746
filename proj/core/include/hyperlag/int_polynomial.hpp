#pragma once

#include <gmpxx.h>

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hyperlag {

// Dense univariate polynomial with arbitrary-precision integer coefficients.
// coefficients()[i] multiplies x^i; the top coefficient is nonzero unless the
// polynomial is zero.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<mpz_class> coefficients);
  IntPolynomial(std::initializer_list<long> coefficients);
  static IntPolynomial monomial(const mpz_class& c, std::size_t power);

  // -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  std::span<const mpz_class> coefficients() const noexcept { return coeffs_; }
  // Zero beyond the degree.
  mpz_class coefficient(std::size_t i) const;
  const mpz_class& leading() const;

  // True if every odd-power coefficient is zero.
  bool is_even() const noexcept;
  // Bit length of max_i |c_i|.
  std::size_t max_coefficient_bits() const noexcept;

  IntPolynomial& operator+=(const IntPolynomial& rhs);
  IntPolynomial& operator-=(const IntPolynomial& rhs);
  IntPolynomial& operator*=(const mpz_class& scalar);
  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator*(IntPolynomial a, const mpz_class& s) { return a *= s; }
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  bool operator==(const IntPolynomial& other) const { return coeffs_ == other.coeffs_; }

  mpq_class evaluate(const mpq_class& x) const;

  // Constant term first, space separated; "0" for the zero polynomial.
  std::string to_string() const;
  static IntPolynomial parse(std::string_view text);

 private:
  void trim();

  std::vector<mpz_class> coeffs_;
};

}  // namespace hyperlag
