#pragma once

#include <gmpxx.h>

#include <span>
#include <utility>
#include <vector>

#include "hyperlag/pattern.hpp"

namespace hyperlag {

// A point of the standard simplex. The constructor rejects negative or
// non-finite entries and rescales the rest to sum to one.
class SimplexVector {
 public:
  explicit SimplexVector(std::vector<double> coords);

  static SimplexVector uniform(int m);
  static SimplexVector vertex(int m, int i);  // e_i, 1-based

  std::span<const double> coords() const noexcept { return coords_; }
  std::size_t size() const noexcept { return coords_.size(); }
  double operator[](std::size_t i) const { return coords_[i]; }

  bool operator==(const SimplexVector&) const = default;

 private:
  std::vector<double> coords_;
};

// lambda_E(x) = r! * sum over edges E of prod_i x_i^E(i) / E(i)!.
class LagrangePolynomial {
 public:
  struct Term {
    std::vector<int> exponents;                // length m, sums to r
    std::vector<std::pair<int, int>> support;  // (0-based variable, exponent > 0)
    mpq_class coefficient;                     // r! / prod E(i)!
    double coefficient_d = 0.0;
  };

  explicit LagrangePolynomial(const Pattern& pattern);

  int m() const noexcept { return m_; }
  int r() const noexcept { return r_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  // Plain evaluation; x need not lie on the simplex.
  double evaluate(std::span<const double> x) const;
  double evaluate(const SimplexVector& x) const { return evaluate(x.coords()); }
  long double evaluate_extended(std::span<const long double> x) const;
  mpq_class evaluate_exact(std::span<const mpq_class> x) const;

  std::vector<double> gradient(std::span<const double> x) const;
  std::vector<double> gradient(const SimplexVector& x) const { return gradient(x.coords()); }
  // Writes the gradient into out (size m) and returns lambda(x).
  double value_and_gradient(std::span<const double> x, std::span<double> out) const;

 private:
  void check_dim(std::size_t n) const;

  int m_;
  int r_;
  std::vector<Term> terms_;
};

inline LagrangePolynomial lagrange_polynomial(const Pattern& p) { return LagrangePolynomial(p); }

}  // namespace hyperlag
