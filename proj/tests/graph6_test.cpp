#include <gtest/gtest.h>

#include "subpack/enumerate.hpp"
#include "subpack/graph6.hpp"

using namespace subpack;

TEST(Graph6, FrozenReferenceStrings) {
  const Graph k4 = build_graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  EXPECT_EQ(emit_graph6(k4), "C~");
  EXPECT_EQ(emit_graph6(build_graph(4, {{0, 1}, {1, 2}, {2, 3}})), "Ch");
  EXPECT_EQ(emit_graph6(build_graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}})), "Dhc");
  EXPECT_EQ(emit_graph6(build_graph(5, {})), "D??");
  EXPECT_EQ(emit_graph6(build_graph(6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}})),
            "EFz_");
}

TEST(Graph6, ParsesReferenceStrings) {
  const Graph g = parse_graph6("E`ow");
  EXPECT_EQ(g.edges(), (std::vector<Edge>{{0, 1}, {0, 4}, {1, 4}, {2, 3}, {2, 5}, {3, 5}, {4, 5}}));
  EXPECT_EQ(parse_graph6("C~").size(), 6u);
  EXPECT_EQ(parse_graph6("D??").order(), 5);
}

TEST(Graph6, LongSizePrefix) {
  std::vector<Edge> es;
  for (int i = 0; i < 70; ++i) es.emplace_back(i, (i + 1) % 70);
  const Graph c70 = build_graph(70, es);
  const std::string code = emit_graph6(c70);
  EXPECT_EQ(code.substr(0, 8), "~?@EhCGG");
  EXPECT_EQ(code.back(), 'G');
  EXPECT_EQ(parse_graph6(code), c70);
}

TEST(Graph6, RejectsMalformed) {
  EXPECT_THROW(parse_graph6(""), Error);
  EXPECT_THROW(parse_graph6("C~~"), Error);
  EXPECT_THROW(parse_graph6("C\x01"), Error);
}

TEST(Graph6, RoundTripsSmallEnumeration) {
  for (const auto& g : enumerate_up_to(7)) EXPECT_EQ(parse_graph6(emit_graph6(g)), g);
}

TEST(EdgeList, RoundTrip) {
  const Graph g = build_graph(5, {{0, 1}, {1, 2}, {3, 4}});
  EXPECT_EQ(parse_edge_list(emit_edge_list(g)), g);
  EXPECT_EQ(parse_edge_list("3 2\n0 1\n1 2\n").size(), 2u);
  EXPECT_THROW(parse_edge_list("3 2\n0 1\n"), Error);
  EXPECT_THROW(parse_edge_list("2 1\n0 5\n"), Error);
}
