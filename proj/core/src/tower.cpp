#include "hyperlag/tower.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "hyperlag/error.hpp"

namespace hyperlag {
namespace {

void check_level(int k) {
  if (k < 1) throw InputError("tower level k must be at least 1, got " + std::to_string(k));
}

}  // namespace

BigFloat nested_radical(int k, long precision_bits) {
  check_level(k);
  if (precision_bits < kMinPrecisionBits)
    throw InputError("precision must be at least " + std::to_string(kMinPrecisionBits) + " bits");
  const long guard = 16 + std::bit_width(static_cast<unsigned>(k));
  const long wp = precision_bits + guard;
  BigFloat mu(wp);
  const BigFloat three(3L, wp);
  const BigFloat two(2L, wp);
  const BigFloat one(1L, wp);
  for (int j = 0; j < k; ++j) mu = one / sqrt(three - two * mu);
  return mu.with_precision(precision_bits);
}

BigFloat limit_gap(int k, long precision_bits) {
  const BigFloat mu = nested_radical(k, precision_bits + 8);
  return (BigFloat(1L, precision_bits + 8) - mu).with_precision(precision_bits);
}

long default_precision_bits(int k) {
  check_level(k);
  if (k <= 5) return 256;
  if (k <= 8) return 512;
  return 512L << std::min(k - 8, 20);
}

IntPolynomial tower_step(const IntPolynomial& pk, int k) {
  check_level(k);
  const std::size_t n = std::size_t{1} << k;
  if (pk.degree() > static_cast<int>(n))
    throw InputError("p_" + std::to_string(k) + " must have degree at most " + std::to_string(n));

  // Work in t = x^2. Homogeneous Horner on sum_i c_i A^i B^(n-i) with
  // A = 3t - 1 and B = 2t: S <- S*A + c_i * B^(n-i), from i = n down to 0.
  std::vector<mpz_class> s(n + 1);
  std::vector<mpz_class> next(n + 1);
  s[0] = pk.coefficient(n);
  std::size_t s_deg = 0;
  mpz_class pow2 = 1;
  for (std::size_t step = 1; step <= n; ++step) {
    const std::size_t i = n - step;
    // S * (3t - 1)
    next[0] = -s[0];
    for (std::size_t j = 1; j <= s_deg; ++j) {
      next[j] = 3 * s[j - 1];
      next[j] -= s[j];
    }
    next[s_deg + 1] = 3 * s[s_deg];
    ++s_deg;
    std::swap(s, next);
    pow2 <<= 1;
    const mpz_class ci = pk.coefficient(i);
    if (ci != 0) mpz_addmul(s[step].get_mpz_t(), ci.get_mpz_t(), pow2.get_mpz_t());
  }

  std::vector<mpz_class> x_coeffs(2 * n + 1);
  for (std::size_t j = 0; j <= n; ++j) x_coeffs[2 * j] = std::move(s[j]);
  return IntPolynomial(std::move(x_coeffs));
}

std::vector<IntPolynomial> tower_sequence(int k_max, int cap) {
  check_level(k_max);
  if (k_max > cap)
    throw ResourceError("tower level " + std::to_string(k_max) + " exceeds the cap of " + std::to_string(cap) +
                        " (degree 2^" + std::to_string(cap) + ")");
  std::vector<IntPolynomial> out;
  out.reserve(static_cast<std::size_t>(k_max));
  out.push_back(IntPolynomial{-1, 0, 3});
  for (int k = 1; k < k_max; ++k) out.push_back(tower_step(out.back(), k));
  return out;
}

IntPolynomial tower_polynomial(int k, int cap) { return std::move(tower_sequence(k, cap).back()); }

std::vector<mpz_class> flip_coefficients(int k, const IntPolynomial& poly) {
  check_level(k);
  if (k > 30) throw InputError("tower level too large to index");
  const std::size_t n = std::size_t{1} << k;
  if (poly.degree() != static_cast<int>(n))
    throw InputError("expected a polynomial of degree " + std::to_string(n) + ", got degree " +
                     std::to_string(poly.degree()));
  std::vector<mpz_class> b(n + 1);
  for (std::size_t i = 0; i <= n; ++i) b[i] = poly.coefficient(k % 2 == 0 ? i : n - i);
  return b;
}

}  // namespace hyperlag
