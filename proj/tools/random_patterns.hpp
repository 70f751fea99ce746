#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "hyperlag/lagrange_polynomial.hpp"
#include "hyperlag/pattern.hpp"

namespace hyperlag::tools {

// Every r-multiset over [m], in lexicographic order.
std::vector<Multiset> all_multisets(int r, int m);

// A random pattern with r in [r_min, r_max], m in [1, m_max] and each
// multiset kept with probability 1/2 (at least one edge).
Pattern random_pattern(std::mt19937_64& rng, int r_min = 2, int r_max = 4, int m_max = 5);

// Uniform point of the simplex of dimension m - 1.
SimplexVector random_simplex_point(std::mt19937_64& rng, int m);

}  // namespace hyperlag::tools
