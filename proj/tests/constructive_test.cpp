#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "subpack/constructive.hpp"
#include "subpack/enumerate.hpp"
#include "subpack/fixtures.hpp"

using namespace subpack;

namespace {

long long violations_named(const ClaimReport& r, const std::string& name) {
  for (const auto& c : r.checks()) {
    if (c.name == name) return c.violated;
  }
  return -1;
}

}  // namespace

TEST(Paths, DecompositionOfTwelveCycleWithChords) {
  const Graph g = fixture("c12_three_chords").graph;
  const auto d = decompose_paths(g, {0, 2, 5, 8});
  EXPECT_EQ(d.count(PathType::p0), 1);
  EXPECT_EQ(d.count(PathType::p1), 0);
  EXPECT_EQ(d.count(PathType::p2), 2);
  EXPECT_EQ(d.count(PathType::p3), 1);
  EXPECT_EQ(d.role[10], BadRole::mid3);
  EXPECT_EQ(d.role[6], BadRole::weak3);
  EXPECT_EQ(d.role[7], BadRole::bad2);
  EXPECT_EQ(d.role[1], BadRole::none);
  EXPECT_EQ(fathers(g, d, 6), (std::vector<Vertex>{5, 8}));
  EXPECT_TRUE(are_siblings(g, d, 4, 6));
  EXPECT_EQ(bad_neighbor(d, 6), 7);
}

TEST(Paths, RejectsSetsThatDoNotDominate) {
  const Graph g = fixture("c12_three_chords").graph;
  EXPECT_THROW(decompose_paths(g, {0, 5}), Error);
}

TEST(Paths, BestBadSetMaximisesSibs) {
  const Graph g = fixture("c12_three_chords").graph;
  const auto d = decompose_paths(g, {0, 2, 5, 8});
  const auto choice = best_bad_set(g, d);
  EXPECT_EQ(choice.b.members, (std::vector<Vertex>{4, 6}));
  EXPECT_EQ(choice.b.gamma, 2);
  EXPECT_TRUE(choice.bprime.lonely().empty());
  EXPECT_THROW(make_bad_set(g, d, {10}), Error);
}

TEST(Partition1133, VerifiesOnSmallOneSaturatedGraphs) {
  int ran = 0;
  for (const auto& g : enumerate_up_to(9)) {
    if (!in_class(g, ClassTag::sat(1))) continue;
    const auto p = partition_1133(g);
    EXPECT_TRUE(is_valid_coloring(g, PackingSequence::parse("1,1,3,3"), p.coloring));
    EXPECT_TRUE(p.claims.ok()) << emit_graph6(g) << "\n" << p.trace();
    EXPECT_TRUE(p.fallback.empty());
    ++ran;
  }
  EXPECT_EQ(ran, 239);
}

TEST(Partition1133, FallsBackToAnotherOptimumOnTwelveCycleWithChords) {
  const Graph g = fixture("c12_three_chords").graph;
  const auto p = partition_1133(g);
  EXPECT_TRUE(is_valid_coloring(g, PackingSequence::parse("1,1,3,3"), p.coloring));
  EXPECT_FALSE(p.fallback.empty());
  EXPECT_NE(p.s.members, (std::vector<Vertex>{0, 2, 5, 8}));
  const auto first = detail::partition_from_set(peel_degree_one(g), evaluate_is(g, {0, 2, 5, 8}));
  EXPECT_FALSE(is_valid_coloring(g, PackingSequence::parse("1,1,3,3"), detail::partition_classes(first, 3, 4)));
  EXPECT_GT(first.claims.violations(), 0);
}

TEST(Partition1133, RejectsOutOfClass) {
  try {
    partition_1133(fixture("petersen").graph);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::not_in_class);
  }
}

TEST(Partition1133, TraceNamesEveryStage) {
  const auto p = partition_1133(fixture("c8_two_chords").graph);
  const std::string t = p.trace();
  for (const char* key : {"S ", "paths:", "B  ", "B' ", "C1 ", "C3_is_independent"}) {
    EXPECT_NE(t.find(key), std::string::npos) << key;
  }
}

TEST(Color12e4, VerifiesWithClaimsOnSmallGraphs) {
  for (const auto& g : enumerate_up_to(9)) {
    if (!in_class(g, ClassTag::sat(1))) continue;
    const auto c = color_1sat_12e4(g);
    EXPECT_TRUE(is_valid_coloring(g, PackingSequence::parse("1,2^4"), c.coloring));
    EXPECT_EQ(violations_named(c.claims, "reduced_2vertices_nonadjacent"), 0);
    EXPECT_EQ(violations_named(c.claims, "3vertex_sees_at_most_three_3vertices"), 0);
  }
}

TEST(Color12e5, VerifiesWithClaimsOnSmallGraphs) {
  for (const auto& g : enumerate_up_to(9)) {
    if (!in_class(g, ClassTag::heavy_sat(0))) continue;
    const auto c = color_30sat_12e5(g);
    EXPECT_TRUE(is_valid_coloring(g, PackingSequence::parse("1,2^5"), c.coloring));
    EXPECT_TRUE(c.claims.ok()) << emit_graph6(g) << "\n" << c.trace();
  }
}

TEST(Color12e5, UsesStoredColouringsWhenNeeded) {
  for (const char* name : {"hex_wheel_left", "thirteen_vertex_right"}) {
    const Graph g = fixture(name).graph;
    const auto c = color_30sat_12e5(g);
    EXPECT_TRUE(is_valid_coloring(g, PackingSequence::parse("1,2^5"), c.coloring)) << name;
  }
}

TEST(Constructions, RandomLargerGraphs) {
  std::mt19937 rng(2026);
  for (int trial = 0; trial < 40; ++trial) {
    const Graph base = oracle::random_subcubic(14 + trial % 16, 8, rng);
    const Graph g1 = oracle::desaturate(base, 1, false, rng);
    const Graph g0 = oracle::desaturate(base, 0, true, rng);
    EXPECT_TRUE(is_valid_coloring(g1, PackingSequence::parse("1,1,3,3"), partition_1133(g1).coloring))
        << emit_graph6(g1);
    EXPECT_TRUE(is_valid_coloring(g1, PackingSequence::parse("1,2^4"), color_1sat_12e4(g1).coloring))
        << emit_graph6(g1);
    EXPECT_TRUE(is_valid_coloring(g0, PackingSequence::parse("1,2^5"), color_30sat_12e5(g0).coloring))
        << emit_graph6(g0);
  }
}

TEST(PartitionColoring, DefaultWeightsReachTarget) {
  const auto a = partition_coloring(fixture("c8_two_chords").graph, {}, PackingSequence::parse("1,1,3,3"));
  EXPECT_TRUE(a.success) << a.failure;
}
