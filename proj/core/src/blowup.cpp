#include "hyperlag/blowup.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>

#include "hyperlag/error.hpp"

namespace hyperlag {
namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t saturating_binomial(std::uint64_t n, std::uint64_t t) {
  if (t > n) return 0;
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), n, t);
  return mpz_fits_ulong_p(b.get_mpz_t()) ? b.get_ui() : kSaturated;
}

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t p = 0;
  return __builtin_mul_overflow(a, b, &p) ? kSaturated : p;
}

void check_parts(const Pattern& p, std::span<const int> part_sizes) {
  if (part_sizes.size() != static_cast<std::size_t>(p.m()))
    throw InputError("expected " + std::to_string(p.m()) + " part sizes, got " +
                     std::to_string(part_sizes.size()));
  for (int s : part_sizes)
    if (s < 0) throw InputError("negative part size " + std::to_string(s));
}

// Advances a t-combination of [lo, lo+n) in place; false once exhausted.
bool next_combination(std::vector<std::uint32_t>& c, std::uint32_t lo, std::uint32_t n) {
  const std::size_t t = c.size();
  for (std::size_t j = t; j-- > 0;) {
    if (c[j] < lo + n - (t - j)) {
      ++c[j];
      for (std::size_t l = j + 1; l < t; ++l) c[l] = c[l - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

Hypergraph::Hypergraph(int r, std::vector<int> part_sizes, std::vector<std::uint32_t> flat_edges)
    : r_(r),
      n_(std::accumulate(part_sizes.begin(), part_sizes.end(), 0)),
      part_sizes_(std::move(part_sizes)),
      flat_(std::move(flat_edges)) {
  if (r_ < 1) throw InputError("hypergraph uniformity must be positive");
  if (flat_.size() % static_cast<std::size_t>(r_) != 0)
    throw InputError("flat edge list length is not a multiple of r");
}

Multiset profile(std::span<const int> r_set, std::span<const int> part_sizes) {
  std::vector<int> starts(part_sizes.size() + 1, 1);
  for (std::size_t i = 0; i < part_sizes.size(); ++i) starts[i + 1] = starts[i] + part_sizes[i];
  const int n = starts.back() - 1;
  std::vector<int> out;
  out.reserve(r_set.size());
  for (int v : r_set) {
    if (v < 1 || v > n)
      throw InputError("vertex " + std::to_string(v) + " outside [1, " + std::to_string(n) + "]");
    auto it = std::upper_bound(starts.begin(), starts.end(), v);
    out.push_back(static_cast<int>(it - starts.begin()));
  }
  return Multiset(std::move(out));
}

std::uint64_t blowup_edge_count(const Pattern& p, std::span<const int> part_sizes) {
  check_parts(p, part_sizes);
  std::uint64_t total = 0;
  for (const auto& e : p.edges()) {
    std::uint64_t prod = 1;
    for (auto [i, t] : e.support())
      prod = saturating_mul(prod, saturating_binomial(static_cast<std::uint64_t>(part_sizes[static_cast<std::size_t>(i - 1)]),
                                                      static_cast<std::uint64_t>(t)));
    total = (total > kSaturated - prod) ? kSaturated : total + prod;
  }
  return total;
}

Hypergraph blowup(const Pattern& p, std::span<const int> part_sizes, std::uint64_t edge_cap) {
  const std::uint64_t count = blowup_edge_count(p, part_sizes);
  if (count > edge_cap)
    throw ResourceError("blowup would have " + (count == kSaturated ? std::string("more than 2^64") : std::to_string(count)) +
                        " edges, above the cap of " + std::to_string(edge_cap));

  std::vector<std::uint32_t> starts(part_sizes.size() + 1, 1);
  for (std::size_t i = 0; i < part_sizes.size(); ++i)
    starts[i + 1] = starts[i] + static_cast<std::uint32_t>(part_sizes[i]);

  const auto r = static_cast<std::size_t>(p.r());
  std::vector<std::uint32_t> flat;
  flat.reserve(static_cast<std::size_t>(count) * r);

  for (const auto& e : p.edges()) {
    const auto sup = e.support();
    bool feasible = true;
    std::vector<std::vector<std::uint32_t>> combo(sup.size());
    for (std::size_t s = 0; s < sup.size(); ++s) {
      const auto [i, t] = sup[s];
      const auto lo = starts[static_cast<std::size_t>(i - 1)];
      if (t > part_sizes[static_cast<std::size_t>(i - 1)]) {
        feasible = false;
        break;
      }
      combo[s].resize(static_cast<std::size_t>(t));
      std::iota(combo[s].begin(), combo[s].end(), lo);
    }
    if (!feasible) continue;
    // Odometer over the per-part combinations; parts are emitted in index
    // order so every edge comes out ascending.
    bool advanced = true;
    while (advanced) {
      for (const auto& c : combo) flat.insert(flat.end(), c.begin(), c.end());
      advanced = false;
      for (std::size_t s = sup.size(); s-- > 0;) {
        const auto i = static_cast<std::size_t>(sup[s].first - 1);
        if (next_combination(combo[s], starts[i], static_cast<std::uint32_t>(part_sizes[i]))) {
          advanced = true;
          break;
        }
        std::iota(combo[s].begin(), combo[s].end(), starts[i]);
      }
    }
  }

  const std::size_t m = flat.size() / r;
  std::vector<std::size_t> order(m);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return std::lexicographical_compare(flat.begin() + a * r, flat.begin() + (a + 1) * r,
                                        flat.begin() + b * r, flat.begin() + (b + 1) * r);
  });
  std::vector<std::uint32_t> sorted;
  sorted.reserve(flat.size());
  for (std::size_t idx : order) sorted.insert(sorted.end(), flat.begin() + idx * r, flat.begin() + (idx + 1) * r);

  return Hypergraph(p.r(), std::vector<int>(part_sizes.begin(), part_sizes.end()), std::move(sorted));
}

std::string serialize_hypergraph(const Hypergraph& h) {
  std::ostringstream out;
  out << h.n() << ' ' << h.r() << '\n';
  for (std::size_t i = 0; i < h.edge_count(); ++i) {
    auto e = h.edge(i);
    for (std::size_t j = 0; j < e.size(); ++j) out << (j ? " " : "") << e[j];
    out << '\n';
  }
  return out.str();
}

}  // namespace hyperlag
