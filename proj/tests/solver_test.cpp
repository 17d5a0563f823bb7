#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "subpack/enumerate.hpp"
#include "subpack/fixtures.hpp"
#include "subpack/solver.hpp"

using namespace subpack;

TEST(Sequence, ParseForms) {
  EXPECT_EQ(PackingSequence::parse("1,2^5").str(), "1,2,2,2,2,2");
  EXPECT_EQ(PackingSequence::parse("(1^2, 3^2)").compact(), "1^2,3^2");
  EXPECT_EQ(PackingSequence::parse("1,1,2,3").size(), 4);
  EXPECT_THROW(PackingSequence::parse(""), Error);
  EXPECT_THROW(PackingSequence::parse("2,1"), Error);
  EXPECT_THROW(PackingSequence::parse("0,1"), Error);
  EXPECT_THROW(PackingSequence::parse("1,x"), Error);
}

TEST(Coloring, CertificateRoundTrip) {
  const PackingColoring c(std::vector<int>{1, 2, 1, 3});
  EXPECT_EQ(c.certificate(), "0:1,1:2,2:1,3:3");
  EXPECT_EQ(PackingColoring::parse_certificate(c.certificate()), c);
  EXPECT_THROW(PackingColoring::parse_certificate("0:1,0:2"), Error);
  EXPECT_THROW(PackingColoring::parse_certificate("0-1"), Error);
}

TEST(Coloring, CorruptedFixtureColoringListsViolations) {
  const auto f = fixture("hex_wheel_left");
  ASSERT_TRUE(f.coloring);
  EXPECT_TRUE(verify_coloring(f.graph, *f.coloring_sequence, *f.coloring).empty());
  PackingColoring bad = *f.coloring;
  bad.assign(1, (*f.coloring)[0]);  // x2 is adjacent to x1
  const auto v = verify_coloring(f.graph, *f.coloring_sequence, bad);
  ASSERT_FALSE(v.empty());
  EXPECT_EQ(v[0].dist, 1);
}

TEST(Coloring, RejectsPartialAndOutOfRange) {
  const Graph p3 = build_graph(3, {{0, 1}, {1, 2}});
  const auto seq = PackingSequence::parse("1,1");
  EXPECT_THROW(verify_coloring(p3, seq, PackingColoring(std::vector<int>{1, 0, 1})), Error);
  EXPECT_THROW(verify_coloring(p3, seq, PackingColoring(std::vector<int>{1, 3, 1})), Error);
}

TEST(Solver, AgreesWithBruteForceOnRandomGraphs) {
  std::mt19937 rng(99);
  const char* seqs[] = {"1,1", "1,1,2", "1,2,2", "1,1,3", "1,2,3", "1,2,2,2", "2,2,2,2"};
  for (int trial = 0; trial < 60; ++trial) {
    const Graph g = oracle::random_subcubic(6 + trial % 4, trial % 5, rng);
    for (const char* s : seqs) {
      const auto seq = PackingSequence::parse(s);
      const auto r = decide_colorable(g, seq);
      ASSERT_NE(r.verdict, ColorResult::Verdict::budget_exhausted);
      ASSERT_EQ(r.feasible(), brute_force_colorable(g, seq)) << emit_graph6(g) << " " << s;
      if (r.feasible()) {
        const std::vector<int> cls(r.coloring.classes().begin(), r.coloring.classes().end());
        std::vector<int> vals(seq.values().begin(), seq.values().end());
        EXPECT_TRUE(oracle::valid_packing(g, vals, cls));
      }
    }
  }
}

// Lowering an entry or appending a class never turns feasible into infeasible.
TEST(Solver, Monotone) {
  for (const auto& g : enumerate_up_to(7)) {
    const bool strict = decide_colorable(g, PackingSequence::parse("1,2,3,3")).feasible();
    const bool lower = decide_colorable(g, PackingSequence::parse("1,2,2,3")).feasible();
    const bool longer = decide_colorable(g, PackingSequence::parse("1,2,3,3,4")).feasible();
    if (strict) {
      EXPECT_TRUE(lower) << emit_graph6(g);
      EXPECT_TRUE(longer) << emit_graph6(g);
    }
  }
}

TEST(Solver, KnownSmallAnswers) {
  const Graph k4 = build_graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  EXPECT_FALSE(decide_colorable(k4, PackingSequence::parse("1,1,1")).feasible());
  EXPECT_TRUE(decide_colorable(k4, PackingSequence::parse("1,1,1,1")).feasible());
  EXPECT_TRUE(decide_colorable(k4, PackingSequence::parse("1,2,3,4")).feasible());
  const Graph c5 = build_graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
  EXPECT_FALSE(decide_colorable(c5, PackingSequence::parse("1,1")).feasible());
  EXPECT_TRUE(decide_colorable(c5, PackingSequence::parse("1,1,1")).feasible());
  EXPECT_TRUE(decide_colorable(Graph{}, PackingSequence::parse("1")).feasible());
}

TEST(Solver, ComponentsAreIndependent) {
  const Graph two = build_graph(8, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 5}, {5, 6}, {6, 7}, {7, 4}});
  const auto r = decide_colorable(two, PackingSequence::parse("1,1"));
  ASSERT_TRUE(r.feasible());
  EXPECT_TRUE(is_valid_coloring(two, PackingSequence::parse("1,1"), r.coloring));
}

TEST(Solver, BudgetIsReported) {
  const auto r = decide_colorable(fixture("petersen").graph, PackingSequence::parse("1,2^5"), 5);
  EXPECT_EQ(r.verdict, ColorResult::Verdict::budget_exhausted);
  EXPECT_EQ(verdict_name(r.verdict), "budget");
}

TEST(BruteForce, RefusesLargeSpaces) {
  EXPECT_THROW(brute_force_colorable(fixture("thirteen_vertex_right").graph, PackingSequence::parse("1,2^5")),
               Error);
}

TEST(BruteForce, ConfirmsEveryNegativeFixture) {
  const std::pair<const char*, const char*> pairs[] = {
      {"petersen", "1,1,2,3"},       {"petersen", "1,2^5"},          {"two_k3_star", "1,1,4"},
      {"sk4", "1,2,2"},              {"c8_two_chords", "1,2^3"},     {"c12_three_chords", "1,1,4,4"},
      {"three_triangle_gadget", "1,1,3,3"}, {"thirteen_vertex_right", "1,2^3"}, {"hex_wheel_left", "1,2^3"}};
  for (const auto& [name, seq] : pairs) {
    const Graph g = fixture(name).graph;
    EXPECT_FALSE(brute_force_colorable(g, PackingSequence::parse(seq))) << name << " " << seq;
    EXPECT_EQ(decide_colorable(g, PackingSequence::parse(seq)).verdict, ColorResult::Verdict::infeasible);
  }
}
