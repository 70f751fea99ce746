#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <vector>

#include "hyperlag/bigfloat.hpp"
#include "hyperlag/blowup.hpp"
#include "hyperlag/lagrange_polynomial.hpp"
#include "hyperlag/pattern.hpp"

namespace hyperlag {

// lambda(P+s) / lambda(P) = r^r (r+s)! / ((r+s)^(r+s) r!), exactly.
mpq_class plus_s_factor(int r, int s);

// Closed-form optimal vector of P_k:
//   x_1 = x_2 = 1/2 - 1/(2 sqrt(3 - 2 lambda_prev)),
//   (x_3, ..., x_{2k+1}) = y / sqrt(3 - 2 lambda_prev)
// where lambda_prev = lambda(P_{k-1}) (0 for k = 1) and y is the optimal
// vector of P_{k-1}, built the same way. Coordinates are computed at the
// precision of lambda_prev.
std::vector<BigFloat> pk_optimal_vector_hp(int k, const BigFloat& lambda_prev);
SimplexVector pk_optimal_vector(int k, const BigFloat& lambda_prev);
// Uses lambda_prev = nested_radical(k - 1) at 256 bits.
SimplexVector pk_optimal_vector(int k);

// Integer part sizes summing to n by largest remainders; ties go to the lower
// index.
std::vector<int> round_part_sizes(const SimplexVector& weights, int n);

// |E(blowup)| / C(n, r) for part sizes round_part_sizes(weights, n).
double blowup_density(const Pattern& p, const SimplexVector& weights, int n,
                      std::uint64_t edge_cap = kDefaultEdgeCap);

}  // namespace hyperlag
