#include "hyperlag/lagrange_polynomial.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "hyperlag/error.hpp"

namespace hyperlag {
namespace {

mpz_class factorial(int n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return f;
}

template <typename T>
T ipow(T base, int e) {
  T acc = 1;
  for (int j = 0; j < e; ++j) acc *= base;
  return acc;
}

}  // namespace

SimplexVector::SimplexVector(std::vector<double> coords) : coords_(std::move(coords)) {
  if (coords_.empty()) throw InputError("simplex vector must have at least one coordinate");
  double sum = 0.0;
  for (double v : coords_) {
    if (!std::isfinite(v) || v < 0.0) throw InputError("simplex coordinates must be finite and nonnegative");
    sum += v;
  }
  if (sum <= 0.0) throw InputError("simplex coordinates sum to zero");
  for (double& v : coords_) v /= sum;
}

SimplexVector SimplexVector::uniform(int m) {
  if (m < 1) throw InputError("simplex dimension must be positive");
  return SimplexVector(std::vector<double>(static_cast<std::size_t>(m), 1.0));
}

SimplexVector SimplexVector::vertex(int m, int i) {
  if (i < 1 || i > m) throw InputError("vertex index outside [1, m]");
  std::vector<double> v(static_cast<std::size_t>(m), 0.0);
  v[static_cast<std::size_t>(i - 1)] = 1.0;
  return SimplexVector(std::move(v));
}

LagrangePolynomial::LagrangePolynomial(const Pattern& pattern) : m_(pattern.m()), r_(pattern.r()) {
  const mpz_class r_fact = factorial(r_);
  terms_.reserve(pattern.edge_count());
  for (const auto& e : pattern.edges()) {
    Term t;
    t.exponents.assign(static_cast<std::size_t>(m_), 0);
    mpz_class denom = 1;
    for (auto [i, mult] : e.support()) {
      t.exponents[static_cast<std::size_t>(i - 1)] = mult;
      t.support.emplace_back(i - 1, mult);
      denom *= factorial(mult);
    }
    t.coefficient = mpq_class(r_fact, denom);
    t.coefficient.canonicalize();
    t.coefficient_d = t.coefficient.get_d();
    terms_.push_back(std::move(t));
  }
}

void LagrangePolynomial::check_dim(std::size_t n) const {
  if (n != static_cast<std::size_t>(m_))
    throw InputError("point has " + std::to_string(n) + " coordinates, polynomial has " + std::to_string(m_) +
                     " variables");
}

double LagrangePolynomial::evaluate(std::span<const double> x) const {
  check_dim(x.size());
  double total = 0.0;
  for (const auto& t : terms_) {
    double v = t.coefficient_d;
    for (auto [i, e] : t.support) v *= ipow(x[static_cast<std::size_t>(i)], e);
    total += v;
  }
  return total;
}

long double LagrangePolynomial::evaluate_extended(std::span<const long double> x) const {
  check_dim(x.size());
  long double total = 0.0L;
  for (const auto& t : terms_) {
    long double v = static_cast<long double>(t.coefficient.get_num().get_d()) /
                    static_cast<long double>(t.coefficient.get_den().get_d());
    for (auto [i, e] : t.support) v *= ipow(x[static_cast<std::size_t>(i)], e);
    total += v;
  }
  return total;
}

mpq_class LagrangePolynomial::evaluate_exact(std::span<const mpq_class> x) const {
  check_dim(x.size());
  mpq_class total = 0;
  for (const auto& t : terms_) {
    mpq_class v = t.coefficient;
    for (auto [i, e] : t.support) v *= ipow(x[static_cast<std::size_t>(i)], e);
    total += v;
  }
  return total;
}

double LagrangePolynomial::value_and_gradient(std::span<const double> x, std::span<double> out) const {
  check_dim(x.size());
  check_dim(out.size());
  std::fill(out.begin(), out.end(), 0.0);
  double total = 0.0;
  for (const auto& t : terms_) {
    double full = t.coefficient_d;
    for (auto [i, e] : t.support) full *= ipow(x[static_cast<std::size_t>(i)], e);
    total += full;
    for (std::size_t a = 0; a < t.support.size(); ++a) {
      const auto [i, e] = t.support[a];
      double d = t.coefficient_d * e * ipow(x[static_cast<std::size_t>(i)], e - 1);
      for (std::size_t b = 0; b < t.support.size(); ++b)
        if (b != a) d *= ipow(x[static_cast<std::size_t>(t.support[b].first)], t.support[b].second);
      out[static_cast<std::size_t>(i)] += d;
    }
  }
  return total;
}

std::vector<double> LagrangePolynomial::gradient(std::span<const double> x) const {
  std::vector<double> g(static_cast<std::size_t>(m_));
  value_and_gradient(x, g);
  return g;
}

}  // namespace hyperlag
