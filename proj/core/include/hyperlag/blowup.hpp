#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "hyperlag/pattern.hpp"

namespace hyperlag {

inline constexpr std::uint64_t kDefaultEdgeCap = 10'000'000;

// An r-graph on [n] together with the partition it was blown up from.
// Edges are stored flat (r labels per edge, 1-based, each edge ascending)
// and sorted lexicographically.
class Hypergraph {
 public:
  Hypergraph(int r, std::vector<int> part_sizes, std::vector<std::uint32_t> flat_edges);

  int r() const noexcept { return r_; }
  int n() const noexcept { return n_; }
  const std::vector<int>& part_sizes() const noexcept { return part_sizes_; }
  std::size_t edge_count() const noexcept {
    return r_ == 0 ? 0 : flat_.size() / static_cast<std::size_t>(r_);
  }
  std::span<const std::uint32_t> edge(std::size_t idx) const {
    return {flat_.data() + idx * static_cast<std::size_t>(r_), static_cast<std::size_t>(r_)};
  }

 private:
  int r_;
  int n_;
  std::vector<int> part_sizes_;
  std::vector<std::uint32_t> flat_;
};

// Profile of a vertex set with respect to consecutive blocks
// [1..n_1], [n_1+1..n_1+n_2], ... . Throws InputError on out-of-range vertices.
Multiset profile(std::span<const int> r_set, std::span<const int> part_sizes);

// Number of blowup edges, computed without materializing them.
std::uint64_t blowup_edge_count(const Pattern& p, std::span<const int> part_sizes);

// B(E; V_1..V_m). Throws InputError on a length mismatch or negative part size
// and ResourceError if the edge count would exceed edge_cap.
Hypergraph blowup(const Pattern& p, std::span<const int> part_sizes,
                  std::uint64_t edge_cap = kDefaultEdgeCap);

// Header "n r", then one edge per line.
std::string serialize_hypergraph(const Hypergraph& h);

}  // namespace hyperlag
