#include "random_patterns.hpp"

#include <cmath>

namespace hyperlag::tools {
namespace {

void extend(std::vector<int>& prefix, int r, int m, std::vector<Multiset>& out) {
  if (static_cast<int>(prefix.size()) == r) {
    out.emplace_back(prefix);
    return;
  }
  const int lo = prefix.empty() ? 1 : prefix.back();
  for (int v = lo; v <= m; ++v) {
    prefix.push_back(v);
    extend(prefix, r, m, out);
    prefix.pop_back();
  }
}

double unit(std::mt19937_64& rng) { return (static_cast<double>(rng() >> 11) + 1.0) * 0x1.0p-53; }

}  // namespace

std::vector<Multiset> all_multisets(int r, int m) {
  std::vector<Multiset> out;
  std::vector<int> prefix;
  extend(prefix, r, m, out);
  return out;
}

Pattern random_pattern(std::mt19937_64& rng, int r_min, int r_max, int m_max) {
  const int r = r_min + static_cast<int>(rng() % static_cast<std::uint64_t>(r_max - r_min + 1));
  const int m = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(m_max));
  const auto universe = all_multisets(r, m);
  std::vector<Multiset> edges;
  for (const auto& e : universe)
    if (rng() & 1U) edges.push_back(e);
  if (edges.empty()) edges.push_back(universe[rng() % universe.size()]);
  return Pattern(r, m, std::move(edges));
}

SimplexVector random_simplex_point(std::mt19937_64& rng, int m) {
  std::vector<double> x(static_cast<std::size_t>(m));
  for (double& v : x) v = -std::log(unit(rng));
  return SimplexVector(std::move(x));
}

}  // namespace hyperlag::tools
