#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "subpack/classify.hpp"
#include "subpack/enumerate.hpp"
#include "subpack/fixtures.hpp"
#include "subpack/reduction.hpp"
#include "subpack/solver.hpp"

using namespace subpack;

TEST(Reduction, PeelLeavesMinimumDegreeTwo) {
  for (const auto& g : enumerate_up_to(8)) {
    const auto r = peel_degree_one(g);
    for (int v = 0; v < r.reduced.order(); ++v) EXPECT_NE(r.reduced.degree(v), 1);
    EXPECT_EQ(replay(r), g);
  }
}

TEST(Reduction, ReplayRestoresEveryRule) {
  for (const auto& g : enumerate_up_to(8)) {
    EXPECT_EQ(replay(reduce_adjacent_2vertices(g)), g) << emit_graph6(g);
    EXPECT_EQ(replay(reduce_heavy_free(g)), g) << emit_graph6(g);
  }
}

TEST(Reduction, NoAdjacentSmallVerticesAfterMerge) {
  for (const auto& g : enumerate_up_to(8)) {
    const Graph r = reduce_adjacent_2vertices(g).reduced;
    for (const auto& [u, v] : r.edges()) EXPECT_FALSE(r.degree(u) <= 2 && r.degree(v) <= 2) << emit_graph6(g);
  }
}

TEST(Reduction, SaturationNeverRises) {
  for (const auto& g : enumerate_up_to(8)) {
    const auto before = profile(g);
    const auto after = profile(reduce_heavy_free(g).reduced);
    EXPECT_LE(after.sat_level, before.sat_level);
    EXPECT_LE(after.heavy_sat_level, before.heavy_sat_level);
  }
}

TEST(Reduction, PrismSubdividedIsIrreducibleByMerging) {
  const Graph g = fixture("prism_subdivided").graph;
  const auto r = reduce_adjacent_2vertices(g);
  EXPECT_TRUE(r.log.empty());
  EXPECT_EQ(r.reduced, g);
}

TEST(Reduction, StepNames) {
  EXPECT_EQ(step_name(ReductionStep::Kind::peel), "peel");
  EXPECT_EQ(step_name(ReductionStep::Kind::merge2), "merge2");
  EXPECT_EQ(step_name(ReductionStep::Kind::drop), "drop");
}

// Colour the reduced graph exactly, lift, and check the lift on random
// graphs large enough to force swaps and repairs.
TEST(Lift, ExtendsExactColouringsOfReducedGraphs) {
  std::mt19937 rng(4242);
  const auto seq = PackingSequence::parse("1,2^5");
  ExtensionStats stats;
  int lifted = 0;
  for (int trial = 0; trial < 80; ++trial) {
    const Graph base = oracle::random_subcubic(10 + trial % 12, 4, rng);
    const Graph g = oracle::desaturate(base, 0, true, rng);
    const auto r = reduce_heavy_free(g);
    const auto rc = decide_colorable(r.reduced, seq);
    if (!rc.feasible()) continue;
    const auto c = lift_coloring(r, rc.coloring, seq, ExtensionPolicy::full, &stats);
    EXPECT_TRUE(is_valid_coloring(g, seq, c)) << emit_graph6(g);
    ++lifted;
  }
  EXPECT_GT(lifted, 40);
  EXPECT_GT(stats.direct, 0);
}
