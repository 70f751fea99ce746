#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <vector>

#include "hyperlag/pattern.hpp"

// Reference computations that share no code with the library.
namespace oracle {

inline mpz_class binomial(unsigned long n, unsigned long k) {
  mpz_class c = 1;
  for (unsigned long j = 1; j <= k; ++j) c = c * (n - k + j) / j;
  return c;
}

// p_1 = 3x^2 - 1, then every term c_i (3x^2 - 1)^i (2x^2)^(N - i) is expanded
// by the binomial theorem and added coefficient by coefficient.
// Returns coefficients constant term first.
inline std::vector<mpz_class> tower(int k) {
  std::vector<mpz_class> p{-1, 0, 3};
  for (int level = 1; level < k; ++level) {
    const unsigned long n = 1ul << level;
    std::vector<mpz_class> next(2 * n + 1, 0);
    for (unsigned long i = 0; i <= n && i < p.size(); ++i) {
      if (p[i] == 0) continue;
      mpz_class two_pow;
      mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, n - i);
      for (unsigned long j = 0; j <= i; ++j) {
        mpz_class three_pow;
        mpz_ui_pow_ui(three_pow.get_mpz_t(), 3, j);
        mpz_class term = p[i] * two_pow * three_pow * binomial(i, j);
        if ((i - j) % 2 == 1) term = -term;
        next[2 * j + 2 * (n - i)] += term;
      }
    }
    p = std::move(next);
  }
  return p;
}

inline mpq_class evaluate(const std::vector<mpz_class>& p, const mpq_class& x) {
  mpq_class acc = 0, power = 1;
  for (const auto& c : p) {
    acc += c * power;
    power *= x;
  }
  return acc;
}

// r! * sum_e prod x_i^{e(i)} / e(i)!, read straight off the edge list.
inline double lagrangian_at(const hyperlag::Pattern& p, const std::vector<double>& x) {
  double r_fact = 1;
  for (int j = 2; j <= p.r(); ++j) r_fact *= j;
  double total = 0;
  for (const auto& e : p.edges()) {
    double term = r_fact;
    for (int idx : e.elements()) term *= x[static_cast<std::size_t>(idx - 1)];
    for (int i = 1; i <= p.m(); ++i)
      for (int c = 2; c <= e.multiplicity(i); ++c) term /= c;
    total += term;
  }
  return total;
}

// Maximum over the grid {x : x_i = a_i / denominator}.
inline double grid_max(const hyperlag::Pattern& p, int denominator) {
  const auto m = static_cast<std::size_t>(p.m());
  std::vector<int> a(m, 0);
  std::vector<double> x(m);
  double best = 0;
  std::function<void(std::size_t, int)> rec = [&](std::size_t pos, int left) {
    if (pos + 1 == m) {
      a[pos] = left;
      for (std::size_t i = 0; i < m; ++i) x[i] = static_cast<double>(a[i]) / denominator;
      best = std::max(best, lagrangian_at(p, x));
      return;
    }
    for (int v = 0; v <= left; ++v) {
      a[pos] = v;
      rec(pos + 1, left - v);
    }
  };
  rec(0, denominator);
  return best;
}

// Every r-subset of [n] whose profile is an edge of p, as sorted label lists.
inline std::vector<std::vector<std::uint32_t>> blowup_edges(const hyperlag::Pattern& p,
                                                             const std::vector<int>& parts) {
  std::vector<int> part_of;
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (int j = 0; j < parts[i]; ++j) part_of.push_back(static_cast<int>(i) + 1);
  const int n = static_cast<int>(part_of.size());
  const int r = p.r();
  std::vector<std::vector<std::uint32_t>> out;
  if (n < r) return out;
  std::vector<int> mask(static_cast<std::size_t>(n), 0);
  std::fill(mask.begin(), mask.begin() + r, 1);
  do {
    std::vector<std::uint32_t> set;
    std::vector<int> profile;
    for (int v = 0; v < n; ++v)
      if (mask[static_cast<std::size_t>(v)]) {
        set.push_back(static_cast<std::uint32_t>(v + 1));
        profile.push_back(part_of[static_cast<std::size_t>(v)]);
      }
    if (p.has_edge(hyperlag::Multiset(profile))) out.push_back(set);
  } while (std::prev_permutation(mask.begin(), mask.end()));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace oracle
