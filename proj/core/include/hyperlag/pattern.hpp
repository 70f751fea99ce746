#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hyperlag {

// An r-multiset over [m]: a sorted list of 1-based part indices, repeats allowed.
class Multiset {
 public:
  Multiset() = default;
  // Sorts the elements; rejects indices < 1.
  explicit Multiset(std::vector<int> elements);
  Multiset(std::initializer_list<int> elements)
      : Multiset(std::vector<int>(elements)) {}

  std::span<const int> elements() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.size(); }
  bool empty() const noexcept { return elements_.empty(); }
  int max_index() const noexcept { return elements_.empty() ? 0 : elements_.back(); }

  // E(i): how many times part i occurs.
  int multiplicity(int i) const noexcept;
  bool contains(int i) const noexcept { return multiplicity(i) > 0; }

  // (index, multiplicity) pairs in increasing index order.
  std::vector<std::pair<int, int>> support() const;

  auto operator<=>(const Multiset&) const = default;
  bool operator==(const Multiset&) const = default;

 private:
  std::vector<int> elements_;
};

// An r-uniform pattern (m, E). Edges are kept sorted lexicographically and
// duplicate-free, so two equal patterns compare and serialize identically.
class Pattern {
 public:
  // Throws InputError on r < 2, m < 1, wrong edge length, index > m or a
  // repeated edge.
  Pattern(int r, int m, std::vector<Multiset> edges);

  int r() const noexcept { return r_; }
  int m() const noexcept { return m_; }
  const std::vector<Multiset>& edges() const noexcept { return edges_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  bool has_edge(const Multiset& e) const;

  bool operator==(const Pattern&) const = default;

 private:
  int r_;
  int m_;
  std::vector<Multiset> edges_;
};

// P+s: appends the fresh indices m+1..m+s to every edge.
Pattern plus_s(const Pattern& p, int s);

// P-i: drops part i and every edge through it; surviving indices keep their
// relative order.
Pattern remove_index(const Pattern& p, int i);

// The 3-uniform pattern P_k on 2k+1 parts, unrolled to an explicit edge list.
Pattern build_pk(int k);

// |E_k| from the recurrence |E_1| = 3, |E_{k+1}| = |E_k| + (2k+1)(2k+3).
std::uint64_t pk_edge_count(int k);

// Returns k if p equals build_pk(k) for some k >= 1, otherwise 0.
int recognize_pk(const Pattern& p);

// "fano", "nonminimal-2graph", "single-edge-<r>" (r = 2..6).
Pattern named_pattern(std::string_view name);
std::vector<std::string> named_pattern_names();

}  // namespace hyperlag
