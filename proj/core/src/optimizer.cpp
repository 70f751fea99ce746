#include "hyperlag/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>
#include <thread>

#include "hyperlag/error.hpp"
#include "hyperlag/tower.hpp"

namespace hyperlag {
namespace {

struct Outcome {
  double value = 0.0;
  std::vector<double> x;
  bool converged = false;
  long iterations = 0;
};

std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// Uniform point of the simplex: normalized Exp(1) draws. Built from raw
// engine output so the sequence is identical across standard libraries.
std::vector<double> dirichlet_point(int m, std::uint64_t seed, std::uint64_t restart) {
  std::mt19937_64 rng(splitmix64(seed ^ splitmix64(restart)));
  std::vector<double> x(static_cast<std::size_t>(m));
  for (double& v : x) {
    const double u = (static_cast<double>(rng() >> 11) + 1.0) * 0x1.0p-53;
    v = -std::log(u);
  }
  return x;
}

void normalize(std::vector<double>& x) {
  double sum = 0.0;
  for (double v : x) sum += v;
  for (double& v : x) v /= sum;
}

Outcome ascend(const LagrangePolynomial& poly, std::vector<double> x, const OptimizerConfig& config) {
  normalize(x);
  const double r = poly.r();
  std::vector<double> g(x.size());
  std::vector<double> next(x.size());
  Outcome out;
  for (long it = 1; it <= config.max_iterations; ++it) {
    out.iterations = it;
    const double value = poly.value_and_gradient(x, g);
    if (!(value > 0.0)) {
      // Every term vanishes at this point and stays zero under the update.
      out.converged = true;
      break;
    }
    double sum = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      next[i] = x[i] * g[i] / (r * value);
      sum += next[i];
    }
    double step = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      next[i] /= sum;
      step = std::max(step, std::fabs(next[i] - x[i]));
    }
    std::swap(x, next);
    if (step < config.step_tolerance) {
      out.converged = true;
      break;
    }
  }
  out.value = poly.evaluate(x);
  out.x = std::move(x);
  return out;
}

constexpr long kChunk = 2'000;

// Candidate points on smaller faces: the coordinates below a fraction of the
// largest one dropped together, then each coordinate dropped alone.
std::vector<std::vector<double>> face_trials(const std::vector<double>& x) {
  std::vector<std::vector<double>> trials;
  const double top = *std::max_element(x.begin(), x.end());
  for (double frac : {1e-3, 1e-2, 1e-1, 0.5}) {
    std::vector<double> t = x;
    for (double& v : t)
      if (v < frac * top) v = 0.0;
    if (t != x && (trials.empty() || t != trials.back())) trials.push_back(std::move(t));
  }
  std::vector<std::size_t> order;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] > 0.0 && x[i] < top) order.push_back(i);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return x[a] < x[b]; });
  for (std::size_t i : order) {
    trials.push_back(x);
    trials.back()[i] = 0.0;
  }
  for (auto& t : trials) normalize(t);
  return trials;
}

// Ascent converges only sublinearly towards optima on a proper face. The
// iteration budget is therefore spent in chunks; between chunks, a point on a
// smaller face replaces the current one whenever ascending from it does not
// lower the value.
Outcome ascend_with_pruning(const LagrangePolynomial& poly, std::vector<double> x, const OptimizerConfig& config) {
  OptimizerConfig chunk = config;
  long budget = config.max_iterations;
  chunk.max_iterations = std::min(budget, kChunk);
  Outcome out = ascend(poly, std::move(x), chunk);
  budget -= out.iterations;
  while (!out.converged && budget > 0) {
    bool improved = false;
    for (auto& trial : face_trials(out.x)) {
      if (!(poly.evaluate(trial) >= out.value)) continue;
      chunk.max_iterations = std::min(budget, kChunk);
      Outcome next = ascend(poly, std::move(trial), chunk);
      budget -= next.iterations;
      if (next.value >= out.value) {
        next.iterations += out.iterations;
        out = std::move(next);
        improved = true;
        break;
      }
      if (budget <= 0) break;
    }
    if (improved || budget <= 0) continue;
    chunk.max_iterations = std::min(budget, kChunk);
    Outcome next = ascend(poly, out.x, chunk);
    budget -= next.iterations;
    next.iterations += out.iterations;
    out = std::move(next);
  }
  return out;
}

}  // namespace

void OptimizerConfig::validate() const {
  if (restarts < 1) throw InputError("restarts must be positive");
  if (max_iterations < 1) throw InputError("max_iterations must be positive");
  if (!(step_tolerance > 0.0)) throw InputError("step tolerance must be positive");
  if (seed < 1) throw InputError("seed must be positive");
  if (!(minimality_threshold > 0.0)) throw InputError("minimality threshold must be positive");
  if (threads < 1) throw InputError("threads must be positive");
}

LagrangianResult maximize(const LagrangePolynomial& poly, const OptimizerConfig& config,
                          std::span<const SimplexVector> warm_starts) {
  config.validate();
  const int m = poly.m();
  for (const auto& w : warm_starts)
    if (w.size() != static_cast<std::size_t>(m)) throw InputError("warm start has the wrong dimension");

  LagrangianResult result;
  result.argmax = SimplexVector::uniform(m);
  if (poly.is_zero()) {
    result.value = 0.0;
    result.converged = true;
    result.restarts_used = 0;
    return result;
  }

  // After the random and warm starts come the vertices and the midpoints of
  // the edges of the simplex. Ascent never leaves the face it starts on, so
  // these runs cover optima supported on one or two indices.
  const int random_runs = config.restarts;
  const int face_base = random_runs + static_cast<int>(warm_starts.size());
  std::vector<std::pair<int, int>> faces;
  for (int i = 0; i < m; ++i) faces.emplace_back(i, i);
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) faces.emplace_back(i, j);
  const int total = face_base + static_cast<int>(faces.size());
  std::vector<Outcome> outcomes(static_cast<std::size_t>(total));

  auto run = [&](int idx) {
    std::vector<double> start;
    if (idx == 0) {
      start.assign(static_cast<std::size_t>(m), 1.0);
    } else if (idx < random_runs) {
      start = dirichlet_point(m, config.seed, static_cast<std::uint64_t>(idx));
    } else if (idx < face_base) {
      const auto c = warm_starts[static_cast<std::size_t>(idx - random_runs)].coords();
      start.assign(c.begin(), c.end());
    } else {
      const auto [i, j] = faces[static_cast<std::size_t>(idx - face_base)];
      start.assign(static_cast<std::size_t>(m), 0.0);
      start[static_cast<std::size_t>(i)] += 1.0;
      start[static_cast<std::size_t>(j)] += 1.0;
    }
    outcomes[static_cast<std::size_t>(idx)] = ascend_with_pruning(poly, std::move(start), config);
  };

  const int workers = std::min(config.threads, total);
  if (workers <= 1) {
    for (int idx = 0; idx < total; ++idx) run(idx);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w)
      pool.emplace_back([&, w] {
        for (int idx = w; idx < total; idx += workers) run(idx);
      });
  }

  int best = 0;
  for (int idx = 0; idx < total; ++idx) {
    const auto& o = outcomes[static_cast<std::size_t>(idx)];
    if (o.converged) ++result.converged_restarts;
    if (o.value > outcomes[static_cast<std::size_t>(best)].value) best = idx;
  }
  const auto& win = outcomes[static_cast<std::size_t>(best)];
  result.value = win.value;
  result.argmax = SimplexVector(win.x);
  result.restarts_used = total;
  result.converged = win.converged;
  result.best_restart = best;
  result.iterations = win.iterations;
  return result;
}

LagrangianResult lagrangian(const Pattern& p, const OptimizerConfig& config,
                            std::span<const SimplexVector> warm_starts) {
  LagrangianResult result = maximize(LagrangePolynomial(p), config, warm_starts);
  if (const int k = recognize_pk(p); k > 0) {
    result.recognized_pk = k;
    result.closed_form = nested_radical(k, 256).to_double();
    result.certified = std::fabs(result.value - *result.closed_form) <= kCertifyTolerance;
  }
  return result;
}

double kkt_residual(const LagrangePolynomial& poly, const SimplexVector& x, double support_threshold) {
  const auto g = poly.gradient(x);
  const double target = poly.r() * poly.evaluate(x);
  double worst = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    const double d = g[i] - target;
    worst = std::max(worst, x[i] > support_threshold ? std::fabs(d) : std::max(0.0, d));
  }
  return worst;
}

MinimalityReport is_minimal(const Pattern& p, const OptimizerConfig& config) {
  config.validate();
  MinimalityReport report;
  report.threshold = config.minimality_threshold;

  std::vector<LagrangianResult> removed;
  std::vector<SimplexVector> embedded;
  removed.reserve(static_cast<std::size_t>(p.m()));
  for (int i = 1; i <= p.m(); ++i) {
    if (p.m() == 1) {
      // P - 1 has no parts left; its Lagrangian is 0.
      LagrangianResult empty;
      empty.converged = true;
      removed.push_back(empty);
      continue;
    }
    removed.push_back(lagrangian(remove_index(p, i), config));
    // Re-inserting a zero coordinate gives a point of the full simplex with
    // the same value, which seeds the optimization of P below.
    const auto c = removed.back().argmax.coords();
    std::vector<double> lifted(c.begin(), c.end());
    lifted.insert(lifted.begin() + (i - 1), 0.0);
    embedded.emplace_back(std::move(lifted));
  }

  report.full = lagrangian(p, config, embedded);
  report.lambda = report.full.value;
  report.converged = report.full.converged;
  report.is_minimal = true;
  for (int i = 1; i <= p.m(); ++i) {
    const auto& res = removed[static_cast<std::size_t>(i - 1)];
    IndexMargin im;
    im.index = i;
    im.lambda_without = res.value;
    im.margin = report.lambda - res.value;
    im.converged = res.converged;
    report.converged = report.converged && res.converged;
    if (!(im.margin > config.minimality_threshold)) report.is_minimal = false;
    report.per_index.push_back(im);
  }
  return report;
}

}  // namespace hyperlag
