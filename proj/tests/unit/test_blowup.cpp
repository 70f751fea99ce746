#include <gtest/gtest.h>

#include <random>

#include "hyperlag/blowup.hpp"
#include "hyperlag/error.hpp"
#include "oracles.hpp"
#include "random_patterns.hpp"

using namespace hyperlag;

namespace {

std::vector<std::vector<std::uint32_t>> edges_of(const Hypergraph& h) {
  std::vector<std::vector<std::uint32_t>> out;
  for (std::size_t i = 0; i < h.edge_count(); ++i) out.emplace_back(h.edge(i).begin(), h.edge(i).end());
  return out;
}

}  // namespace

TEST(Profile, CountsPartMembership) {
  const int parts[] = {2, 2, 3};
  const int set[] = {1, 4, 6};
  EXPECT_EQ(profile(set, parts), Multiset({1, 2, 3}));
  const int set2[] = {5, 6, 7};
  EXPECT_EQ(profile(set2, parts), Multiset({3, 3, 3}));
  const int bad[] = {1, 8};
  EXPECT_THROW(profile(bad, parts), InputError);
}

TEST(Blowup, FanoOnTwoByTwo) {
  const std::vector<int> parts{2, 2};
  Hypergraph h = blowup(named_pattern("fano"), parts);
  EXPECT_EQ(h.n(), 4);
  EXPECT_EQ(h.edge_count(), 4u);
  EXPECT_EQ(blowup_edge_count(named_pattern("fano"), parts), 4u);
}

TEST(Blowup, P1OnOneEach) {
  const std::vector<int> parts{1, 1, 1};
  Hypergraph h = blowup(build_pk(1), parts);
  ASSERT_EQ(h.edge_count(), 1u);
  EXPECT_EQ(std::vector<std::uint32_t>(h.edge(0).begin(), h.edge(0).end()), (std::vector<std::uint32_t>{1, 2, 3}));
}

TEST(Blowup, EmptyPartsGiveNoEdges) {
  const std::vector<int> parts{0, 0, 0};
  EXPECT_EQ(blowup(build_pk(1), parts).edge_count(), 0u);
}

TEST(Blowup, Errors) {
  const std::vector<int> short_parts{1, 1};
  EXPECT_THROW(blowup(build_pk(1), short_parts), InputError);
  const std::vector<int> negative{1, -1, 1};
  EXPECT_THROW(blowup(build_pk(1), negative), InputError);
  const std::vector<int> big{40, 40, 40};
  EXPECT_THROW(blowup(build_pk(1), big, 1000), ResourceError);
}

TEST(Blowup, SerializeHeader) {
  const std::vector<int> parts{1, 1, 1};
  EXPECT_EQ(serialize_hypergraph(blowup(build_pk(1), parts)), "3 3\n1 2 3\n");
}

TEST(BlowupProperty, MatchesBruteForce) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> size(0, 3);
  for (int t = 0; t < 60; ++t) {
    Pattern p = tools::random_pattern(rng, 2, 3, 4);
    std::vector<int> parts(static_cast<std::size_t>(p.m()));
    for (int& s : parts) s = size(rng);
    const auto expected = oracle::blowup_edges(p, parts);
    Hypergraph h = blowup(p, parts);
    EXPECT_EQ(edges_of(h), expected);
    EXPECT_EQ(blowup_edge_count(p, parts), expected.size());
  }
}

TEST(BlowupProperty, P2MatchesBruteForce) {
  const std::vector<int> parts{2, 2, 3, 2, 3};
  EXPECT_EQ(edges_of(blowup(build_pk(2), parts)), oracle::blowup_edges(build_pk(2), parts));
}
