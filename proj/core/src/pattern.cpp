#include "hyperlag/pattern.hpp"

#include <algorithm>
#include <charconv>

#include "hyperlag/error.hpp"

namespace hyperlag {

Multiset::Multiset(std::vector<int> elements) : elements_(std::move(elements)) {
  std::sort(elements_.begin(), elements_.end());
  if (!elements_.empty() && elements_.front() < 1)
    throw InputError("multiset element " + std::to_string(elements_.front()) +
                     " is not a positive index");
}

int Multiset::multiplicity(int i) const noexcept {
  auto [lo, hi] = std::equal_range(elements_.begin(), elements_.end(), i);
  return static_cast<int>(hi - lo);
}

std::vector<std::pair<int, int>> Multiset::support() const {
  std::vector<std::pair<int, int>> out;
  for (int v : elements_) {
    if (!out.empty() && out.back().first == v)
      ++out.back().second;
    else
      out.emplace_back(v, 1);
  }
  return out;
}

Pattern::Pattern(int r, int m, std::vector<Multiset> edges)
    : r_(r), m_(m), edges_(std::move(edges)) {
  if (r_ < 2) throw InputError("pattern uniformity must be at least 2, got " + std::to_string(r_));
  if (m_ < 1) throw InputError("pattern needs at least one part, got " + std::to_string(m_));
  for (const auto& e : edges_) {
    if (e.size() != static_cast<std::size_t>(r_))
      throw InputError("edge of size " + std::to_string(e.size()) + " in a " +
                       std::to_string(r_) + "-uniform pattern");
    if (e.max_index() > m_)
      throw InputError("edge index " + std::to_string(e.max_index()) + " exceeds m = " +
                       std::to_string(m_));
  }
  std::sort(edges_.begin(), edges_.end());
  auto dup = std::adjacent_find(edges_.begin(), edges_.end());
  if (dup != edges_.end()) {
    std::string text;
    for (int v : dup->elements()) text += (text.empty() ? "" : " ") + std::to_string(v);
    throw InputError("duplicate edge {" + text + "}");
  }
}

bool Pattern::has_edge(const Multiset& e) const {
  return std::binary_search(edges_.begin(), edges_.end(), e);
}

Pattern plus_s(const Pattern& p, int s) {
  if (s < 1) throw InputError("plus_s needs s >= 1, got " + std::to_string(s));
  std::vector<Multiset> edges;
  edges.reserve(p.edge_count());
  for (const auto& e : p.edges()) {
    std::vector<int> v(e.elements().begin(), e.elements().end());
    for (int j = 1; j <= s; ++j) v.push_back(p.m() + j);
    edges.emplace_back(std::move(v));
  }
  return Pattern(p.r() + s, p.m() + s, std::move(edges));
}

Pattern remove_index(const Pattern& p, int i) {
  if (i < 1 || i > p.m())
    throw InputError("index " + std::to_string(i) + " outside [1, " + std::to_string(p.m()) + "]");
  if (p.m() == 1) throw InputError("cannot remove the only part of a pattern");
  std::vector<Multiset> edges;
  for (const auto& e : p.edges()) {
    if (e.contains(i)) continue;
    std::vector<int> v(e.elements().begin(), e.elements().end());
    for (int& x : v)
      if (x > i) --x;
    edges.emplace_back(std::move(v));
  }
  return Pattern(p.r(), p.m() - 1, std::move(edges));
}

Pattern build_pk(int k) {
  if (k < 1) throw InputError("build_pk needs k >= 1, got " + std::to_string(k));
  std::vector<Multiset> edges{{1, 2, 3}, {1, 3, 3}, {2, 3, 3}};
  for (int level = 1; level < k; ++level) {
    // P_{level+1} on [2*level+3]: the old pattern moves to parts 3.., and
    // parts 1, 2 join it through the profiles {1,2,3}, {1,3,3}, {2,3,3}.
    const int m_new = 2 * level + 3;
    std::vector<Multiset> next;
    next.reserve(edges.size() + static_cast<std::size_t>((2 * level + 1) * (2 * level + 3)));
    for (const auto& e : edges) {
      std::vector<int> v(e.elements().begin(), e.elements().end());
      for (int& x : v) x += 2;
      next.emplace_back(std::move(v));
    }
    for (int j = 3; j <= m_new; ++j) next.push_back(Multiset{1, 2, j});
    for (int a : {1, 2})
      for (int j = 3; j <= m_new; ++j)
        for (int jj = j; jj <= m_new; ++jj) next.push_back(Multiset{a, j, jj});
    edges = std::move(next);
  }
  return Pattern(3, 2 * k + 1, std::move(edges));
}

std::uint64_t pk_edge_count(int k) {
  if (k < 1) throw InputError("pk_edge_count needs k >= 1");
  std::uint64_t count = 3;
  for (std::uint64_t j = 1; j < static_cast<std::uint64_t>(k); ++j)
    count += (2 * j + 1) * (2 * j + 3);
  return count;
}

int recognize_pk(const Pattern& p) {
  if (p.r() != 3 || p.m() < 3 || p.m() % 2 == 0) return 0;
  const int k = (p.m() - 1) / 2;
  if (p.edge_count() != pk_edge_count(k)) return 0;
  return p == build_pk(k) ? k : 0;
}

Pattern named_pattern(std::string_view name) {
  if (name == "fano") return Pattern(3, 2, {{1, 2, 2}, {1, 1, 2}});
  if (name == "nonminimal-2graph") return Pattern(2, 3, {{1, 2}, {1, 3}});
  constexpr std::string_view prefix = "single-edge-";
  if (name.starts_with(prefix)) {
    auto digits = name.substr(prefix.size());
    int r = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), r);
    if (ec == std::errc() && ptr == digits.data() + digits.size() && r >= 2 && r <= 6) {
      std::vector<int> v(static_cast<std::size_t>(r));
      for (int i = 0; i < r; ++i) v[static_cast<std::size_t>(i)] = i + 1;
      return Pattern(r, r, {Multiset(std::move(v))});
    }
  }
  throw InputError("unknown pattern name '" + std::string(name) + "'");
}

std::vector<std::string> named_pattern_names() {
  std::vector<std::string> names{"fano", "nonminimal-2graph"};
  for (int r = 2; r <= 6; ++r) names.push_back("single-edge-" + std::to_string(r));
  return names;
}

}  // namespace hyperlag
