#include "hyperlag/closed_form.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "hyperlag/error.hpp"
#include "hyperlag/tower.hpp"

namespace hyperlag {

mpq_class plus_s_factor(int r, int s) {
  if (r < 2) throw InputError("plus_s_factor needs r >= 2");
  if (s < 1) throw InputError("plus_s_factor needs s >= 1");
  const auto ur = static_cast<unsigned long>(r);
  const auto us = static_cast<unsigned long>(s);
  mpz_class num, den, f;
  mpz_ui_pow_ui(num.get_mpz_t(), ur, ur);
  mpz_fac_ui(f.get_mpz_t(), ur + us);
  num *= f;
  mpz_ui_pow_ui(den.get_mpz_t(), ur + us, ur + us);
  mpz_fac_ui(f.get_mpz_t(), ur);
  den *= f;
  mpq_class q(num, den);
  q.canonicalize();
  return q;
}

std::vector<BigFloat> pk_optimal_vector_hp(int k, const BigFloat& lambda_prev) {
  if (k < 1) throw InputError("pk_optimal_vector needs k >= 1, got " + std::to_string(k));
  const long prec = lambda_prev.precision();
  const BigFloat one(1L, prec);
  const BigFloat two(2L, prec);
  const BigFloat scale = sqrt(BigFloat(3L, prec) - two * lambda_prev);

  std::vector<BigFloat> tail;
  if (k == 1) {
    tail.push_back(one);  // the optimal vector of P_0 = (1, {{}})
  } else {
    const BigFloat before = k == 2 ? BigFloat(prec) : nested_radical(k - 2, prec);
    tail = pk_optimal_vector_hp(k - 1, before);
  }

  std::vector<BigFloat> x;
  x.reserve(tail.size() + 2);
  const BigFloat head = one / two - one / (two * scale);
  x.push_back(head);
  x.push_back(head);
  for (const auto& y : tail) x.push_back(y / scale);
  return x;
}

SimplexVector pk_optimal_vector(int k, const BigFloat& lambda_prev) {
  const auto hp = pk_optimal_vector_hp(k, lambda_prev);
  std::vector<double> x;
  x.reserve(hp.size());
  for (const auto& v : hp) x.push_back(v.to_double());
  return SimplexVector(std::move(x));
}

SimplexVector pk_optimal_vector(int k) {
  if (k < 1) throw InputError("pk_optimal_vector needs k >= 1, got " + std::to_string(k));
  return pk_optimal_vector(k, k == 1 ? BigFloat(256L) : nested_radical(k - 1, 256));
}

std::vector<int> round_part_sizes(const SimplexVector& weights, int n) {
  if (n < 0) throw InputError("n must be nonnegative");
  const std::size_t m = weights.size();
  std::vector<int> sizes(m);
  std::vector<double> frac(m);
  long assigned = 0;
  for (std::size_t i = 0; i < m; ++i) {
    const double exact = weights[i] * n;
    sizes[i] = static_cast<int>(std::floor(exact));
    frac[i] = exact - sizes[i];
    assigned += sizes[i];
  }
  std::vector<std::size_t> order(m);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return frac[a] > frac[b]; });
  // Rounding of the weights can leave the floors off by one either way.
  long remaining = n - assigned;
  for (std::size_t j = 0; remaining > 0; j = (j + 1) % m, --remaining) ++sizes[order[j]];
  while (remaining < 0) {
    for (std::size_t j = m; j-- > 0;) {
      if (sizes[order[j]] > 0) {
        --sizes[order[j]];
        ++remaining;
        break;
      }
    }
  }
  return sizes;
}

double blowup_density(const Pattern& p, const SimplexVector& weights, int n, std::uint64_t edge_cap) {
  if (weights.size() != static_cast<std::size_t>(p.m()))
    throw InputError("weights have " + std::to_string(weights.size()) + " entries, pattern has m = " +
                     std::to_string(p.m()));
  if (n < p.m()) throw InputError("n must be at least m");
  const auto sizes = round_part_sizes(weights, n);
  const Hypergraph h = blowup(p, sizes, edge_cap);
  mpz_class total;
  mpz_bin_uiui(total.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(p.r()));
  if (total == 0) return 0.0;
  return static_cast<double>(h.edge_count()) / total.get_d();
}

}  // namespace hyperlag
