#pragma once

#include <gmpxx.h>

#include <vector>

#include "hyperlag/bigfloat.hpp"
#include "hyperlag/int_polynomial.hpp"

namespace hyperlag {

// Highest tower level computed unless the caller raises the cap (degree 4096).
inline constexpr int kDefaultTowerCap = 12;

// mu_k: iterate mu_0 = 0, mu_{j+1} = 1 / sqrt(3 - 2 mu_j) k times. Internally
// carries guard bits so the returned value is within 2^(8 - precision) of the
// true mu_k.
BigFloat nested_radical(int k, long precision_bits);

// 1 - mu_k.
BigFloat limit_gap(int k, long precision_bits);

// Default working precision: 256 bits up to k = 5, 512 up to k = 8, then
// doubling per level.
long default_precision_bits(int k);

// p_1 = 3x^2 - 1 and
//   p_{k+1}(x) = sum_i c_{k,i} (3x^2 - 1)^i (2x^2)^(2^k - i).
// Throws ResourceError for k > cap.
IntPolynomial tower_polynomial(int k, int cap = kDefaultTowerCap);

// p_1 .. p_{k_max}, computed once along the recursion.
std::vector<IntPolynomial> tower_sequence(int k_max, int cap = kDefaultTowerCap);

// One recursion step: p_{k+1} from p_k (p_k must have degree at most 2^k).
IntPolynomial tower_step(const IntPolynomial& pk, int k);

// b_{k,i} = c_{k,i} for even k and c_{k,2^k - i} for odd k.
// Throws InputError unless deg(poly) == 2^k.
std::vector<mpz_class> flip_coefficients(int k, const IntPolynomial& poly);

}  // namespace hyperlag
