#include <gtest/gtest.h>

#include <map>
#include <random>
#include <set>

#include "oracles.hpp"
#include "subpack/canonical.hpp"
#include "subpack/enumerate.hpp"
#include "subpack/fixtures.hpp"

using namespace subpack;

namespace {

Graph shuffled(const Graph& g, std::mt19937& rng) {
  std::vector<int> perm(g.order());
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return relabel(g, perm);
}

}  // namespace

TEST(Canonical, InvariantUnderTwentyRelabellings) {
  std::mt19937 rng(7);
  std::vector<Graph> sample = enumerate_up_to(7);
  for (const auto& name : fixture_names()) sample.push_back(fixture(name).graph);
  for (const auto& g : sample) {
    const std::string code = canonical_code(g);
    for (int i = 0; i < 20; ++i) ASSERT_EQ(canonical_code(shuffled(g, rng)), code) << emit_graph6(g);
  }
}

TEST(Canonical, CodesAgreeWithBruteForceIsomorphism) {
  std::mt19937 rng(3);
  std::vector<Graph> pool;
  for (int i = 0; i < 240; ++i) pool.push_back(oracle::random_subcubic(6 + i % 2, 1 + i % 4, rng));
  for (std::size_t i = 0; i < pool.size(); ++i) {
    for (std::size_t j = i + 1; j < pool.size(); ++j) {
      if (pool[i].order() != pool[j].order() || pool[i].size() != pool[j].size()) continue;
      const bool same = canonical_code(pool[i]) == canonical_code(pool[j]);
      ASSERT_EQ(same, oracle::isomorphic(pool[i], pool[j])) << emit_graph6(pool[i]) << " " << emit_graph6(pool[j]);
    }
  }
}

TEST(Canonical, FindIsomorphismMapsEdges) {
  std::mt19937 rng(11);
  for (const auto& name : fixture_names()) {
    const Graph a = fixture(name).graph;
    const Graph b = shuffled(a, rng);
    const auto map = find_isomorphism(a, b);
    ASSERT_EQ(static_cast<int>(map.size()), a.order()) << name;
    for (const auto& [u, v] : a.edges()) EXPECT_TRUE(b.adjacent(map[u], map[v])) << name;
  }
  EXPECT_TRUE(find_isomorphism(fixture("petersen").graph, fixture("sk4").graph).empty());
}

TEST(Canonical, HandlesDisconnectedGraphs) {
  const Graph a = build_graph(7, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 6}});
  const Graph b = build_graph(7, {{0, 1}, {1, 2}, {2, 3}, {4, 5}, {5, 6}, {6, 4}});
  EXPECT_EQ(canonical_code(a), canonical_code(b));
  EXPECT_TRUE(is_isomorphic(a, b));
}

// Every labelled connected subcubic graph on n vertices is counted once per
// coset of its automorphism group, so n!/|Aut| summed over a complete,
// duplicate-free list of classes gives the labelled count.
TEST(Enumeration, OrbitCountMatchesLabelledCount) {
  for (int n = 1; n <= 7; ++n) {
    long long orbit_sum = 0;
    for (const auto& g : *enumerate_subcubic(n)) orbit_sum += oracle::factorial(n) / oracle::automorphisms(g);
    EXPECT_EQ(orbit_sum, oracle::labelled_connected_subcubic(n)) << "n=" << n;
  }
}

TEST(Enumeration, KnownCounts) {
  const std::map<int, std::size_t> counts{{1, 1},  {2, 1},   {3, 2},   {4, 6},   {5, 10},
                                          {6, 29}, {7, 64},  {8, 194}, {9, 531}, {10, 1733}};
  for (const auto& [n, c] : counts) EXPECT_EQ(enumerate_subcubic(n)->size(), c) << "n=" << n;
  EXPECT_THROW(enumerate_subcubic(kEnumerationLimit + 1), Error);
}

TEST(Enumeration, GraphsAreConnectedSubcubicAndDistinct) {
  std::set<std::string> seen;
  for (const auto& g : enumerate_up_to(8)) {
    EXPECT_LE(g.max_degree(), 3);
    EXPECT_TRUE(is_connected(g));
    EXPECT_TRUE(seen.insert(canonical_code(g)).second);
  }
}
