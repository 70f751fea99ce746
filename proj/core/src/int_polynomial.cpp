#include "hyperlag/int_polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "hyperlag/error.hpp"

namespace hyperlag {

IntPolynomial::IntPolynomial(std::vector<mpz_class> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

IntPolynomial::IntPolynomial(std::initializer_list<long> coefficients) {
  coeffs_.reserve(coefficients.size());
  for (long c : coefficients) coeffs_.emplace_back(c);
  trim();
}

IntPolynomial IntPolynomial::monomial(const mpz_class& c, std::size_t power) {
  std::vector<mpz_class> v(power + 1);
  v[power] = c;
  return IntPolynomial(std::move(v));
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

mpz_class IntPolynomial::coefficient(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : mpz_class(0); }

const mpz_class& IntPolynomial::leading() const {
  if (coeffs_.empty()) throw InputError("zero polynomial has no leading coefficient");
  return coeffs_.back();
}

bool IntPolynomial::is_even() const noexcept {
  for (std::size_t i = 1; i < coeffs_.size(); i += 2)
    if (coeffs_[i] != 0) return false;
  return true;
}

std::size_t IntPolynomial::max_coefficient_bits() const noexcept {
  std::size_t bits = 0;
  for (const auto& c : coeffs_)
    if (c != 0) bits = std::max(bits, mpz_sizeinbase(c.get_mpz_t(), 2));
  return bits;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator*=(const mpz_class& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  trim();
  return *this;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<mpz_class> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      mpz_addmul(out[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
  }
  return IntPolynomial(std::move(out));
}

mpq_class IntPolynomial::evaluate(const mpq_class& x) const {
  mpq_class acc = 0;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    acc *= x;
    acc += coeffs_[i];
  }
  return acc;
}

std::string IntPolynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) out += ' ';
    out += coeffs_[i].get_str();
  }
  return out;
}

IntPolynomial IntPolynomial::parse(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<mpz_class> coeffs;
  std::string token;
  while (in >> token) {
    mpz_class c;
    if (c.set_str(token, 10) != 0) throw ParseError(1, "not an integer coefficient: '" + token + "'");
    coeffs.push_back(std::move(c));
  }
  if (coeffs.empty()) throw ParseError(1, "empty polynomial text");
  return IntPolynomial(std::move(coeffs));
}

}  // namespace hyperlag
