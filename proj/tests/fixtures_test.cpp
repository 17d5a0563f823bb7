#include <gtest/gtest.h>

#include "subpack/canonical.hpp"
#include "subpack/classify.hpp"
#include "subpack/fixtures.hpp"
#include "subpack/solver.hpp"

using namespace subpack;

TEST(Fixtures, NamesResolve) {
  EXPECT_EQ(fixture_names().size(), 9u);
  for (const auto& name : fixture_names()) {
    EXPECT_TRUE(is_fixture_name(name));
    const auto f = fixture(name);
    EXPECT_EQ(f.name, name);
    EXPECT_EQ(static_cast<int>(f.vertex_names.size()), f.graph.order());
  }
  EXPECT_FALSE(is_fixture_name("heawood"));
  try {
    fixture("heawood");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::unknown_fixture);
  }
}

TEST(Fixtures, RecordedFactsMatchTheGraphs) {
  for (const auto& name : fixture_names()) {
    const auto f = fixture(name);
    const auto p = profile(f.graph);
    EXPECT_EQ(p.sat_level, f.sat_level) << name;
    EXPECT_EQ(p.heavy_sat_level, f.heavy_sat_level) << name;
    EXPECT_EQ(in_class(f.graph, ClassTag::cubic()), f.cubic) << name;
    EXPECT_TRUE(is_connected(f.graph)) << name;
  }
}

TEST(Fixtures, OrdersAndSizes) {
  const std::pair<const char*, std::pair<int, int>> expected[] = {
      {"petersen", {10, 15}},          {"two_k3_star", {7, 8}},         {"sk4", {10, 12}},
      {"c12_three_chords", {12, 15}},  {"three_triangle_gadget", {12, 17}}, {"c8_two_chords", {8, 10}},
      {"hex_wheel_left", {9, 12}},     {"thirteen_vertex_right", {13, 18}}, {"prism_subdivided", {8, 11}},
  };
  for (const auto& [name, nm] : expected) {
    const auto g = fixture(name).graph;
    EXPECT_EQ(g.order(), nm.first) << name;
    EXPECT_EQ(static_cast<int>(g.size()), nm.second) << name;
  }
}

TEST(Fixtures, PetersenIsTheStandardGraph) {
  EXPECT_EQ(emit_graph6(fixture("petersen").graph), "IheA@GUAo");
}

TEST(Fixtures, StoredColouringsVerify) {
  for (const char* name : {"hex_wheel_left", "thirteen_vertex_right"}) {
    const auto f = fixture(name);
    ASSERT_TRUE(f.coloring && f.coloring_sequence) << name;
    EXPECT_EQ(f.coloring_sequence->compact(), "1,2^4");
    EXPECT_TRUE(is_valid_coloring(f.graph, *f.coloring_sequence, *f.coloring)) << name;
  }
}

TEST(Fixtures, PairwiseNonIsomorphic) {
  const auto names = fixture_names();
  for (std::size_t i = 0; i < names.size(); ++i) {
    for (std::size_t j = i + 1; j < names.size(); ++j) {
      EXPECT_NE(canonical_code(fixture(names[i]).graph), canonical_code(fixture(names[j]).graph));
    }
  }
}
