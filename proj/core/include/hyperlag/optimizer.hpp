#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "hyperlag/lagrange_polynomial.hpp"
#include "hyperlag/pattern.hpp"

namespace hyperlag {

struct OptimizerConfig {
  int restarts = 64;
  long max_iterations = 100'000;
  double step_tolerance = 1e-13;
  std::uint64_t seed = 1;
  double minimality_threshold = 1e-7;
  int threads = 1;

  // Throws InputError unless every field is positive.
  void validate() const;
};

struct LagrangianResult {
  double value = 0.0;
  SimplexVector argmax = SimplexVector::uniform(1);
  int restarts_used = 0;
  bool converged = false;      // the winning restart met the step tolerance
  int converged_restarts = 0;  // restarts that met the step tolerance
  int best_restart = 0;
  long iterations = 0;  // iterations of the winning restart
  bool certified = false;
  std::optional<double> closed_form;  // set for recognized P_k patterns
  int recognized_pk = 0;

  bool operator==(const LagrangianResult&) const = default;
};

// Multiplicative ascent x_i <- x_i * d_i(lambda) / (r * lambda) from the
// barycenter plus restarts - 1 Dirichlet(1,...,1) starting points, followed by
// any warm starts, every vertex and every edge midpoint of the simplex. The
// best value wins; ties keep the lowest restart index.
// Results do not depend on config.threads.
LagrangianResult maximize(const LagrangePolynomial& poly, const OptimizerConfig& config,
                          std::span<const SimplexVector> warm_starts = {});

// maximize() on the Lagrange polynomial of p. For a pattern equal to some P_k
// the nested-radical value is attached and certified is set when the two
// agree within kCertifyTolerance.
LagrangianResult lagrangian(const Pattern& p, const OptimizerConfig& config,
                            std::span<const SimplexVector> warm_starts = {});

inline constexpr double kCertifyTolerance = 1e-6;

// Largest KKT violation at x: |g_i - r*lambda| on coordinates above
// support_threshold, max(0, g_i - r*lambda) elsewhere.
double kkt_residual(const LagrangePolynomial& poly, const SimplexVector& x, double support_threshold = 1e-9);

struct IndexMargin {
  int index = 0;  // 1-based part removed
  double lambda_without = 0.0;
  double margin = 0.0;  // lambda(P) - lambda(P - index)
  bool converged = true;
};

struct MinimalityReport {
  bool is_minimal = false;
  double lambda = 0.0;
  double threshold = 0.0;
  bool converged = true;  // every optimization converged
  LagrangianResult full;
  std::vector<IndexMargin> per_index;
};

// lambda(P) versus lambda(P - i) for every part; minimal iff every margin
// exceeds config.minimality_threshold.
MinimalityReport is_minimal(const Pattern& p, const OptimizerConfig& config);

}  // namespace hyperlag
