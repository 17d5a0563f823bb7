#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "subpack/coloring.hpp"
#include "subpack/graph.hpp"
#include "subpack/sequence.hpp"

namespace subpack {

/// A named graph with its expected class facts and, where one is drawn, a
/// stored colouring together with the sequence it is valid for.
struct FixtureEntry {
  std::string name;
  Graph graph;
  std::vector<std::string> vertex_names;  // index -> drawing label
  int sat_level = 0;
  int heavy_sat_level = 0;
  bool cubic = false;
  std::optional<PackingColoring> coloring;
  std::optional<PackingSequence> coloring_sequence;
  std::string note;
};

namespace detail {

inline std::vector<std::string> split_names(std::string_view names) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : names) {
    if (ch == ' ') {
      if (!cur.empty()) out.push_back(std::move(cur));
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

inline FixtureEntry make_fixture(std::string name, std::string_view names, std::initializer_list<Edge> edges,
                                 int sat, int hsat, bool cubic, std::string note) {
  FixtureEntry e;
  e.name = std::move(name);
  e.vertex_names = split_names(names);
  e.graph = build_graph(static_cast<int>(e.vertex_names.size()), edges);
  e.sat_level = sat;
  e.heavy_sat_level = hsat;
  e.cubic = cubic;
  e.note = std::move(note);
  return e;
}

// Outer 5-cycle 0..4, spokes i - i+5, inner pentagram.
inline FixtureEntry petersen_fixture() {
  return make_fixture("petersen", "o0 o1 o2 o3 o4 i0 i1 i2 i3 i4",
                      {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0},
                       {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9},
                       {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5}},
                      3, 3, true, "Petersen graph");
}

// Triangles a1 a2 a3 and b1 b2 b3 joined by a3 - m - b1.
inline FixtureEntry two_k3_star_fixture() {
  return make_fixture("two_k3_star", "a1 a2 a3 m b1 b2 b3",
                      {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 4}},
                      0, 0, false, "two triangles joined by a path of length two");
}

// Subdivision of K4: vertices 0..3 of K4, then one vertex per K4 edge in
// the order 01 02 03 12 13 23.
inline FixtureEntry sk4_fixture() {
  FixtureEntry e;
  e.name = "sk4";
  e.graph = subdivide(build_graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}));
  e.vertex_names = split_names("k0 k1 k2 k3 s01 s02 s03 s12 s13 s23");
  e.note = "subdivided K4";
  return e;
}

// 12-cycle a..l with chords c-e, g-i, a-k: three triangles at pairwise
// distance at most four.
inline FixtureEntry c12_three_chords_fixture() {
  return make_fixture("c12_three_chords", "a b c d e f g h i j k l",
                      {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6},
                       {6, 7}, {7, 8}, {8, 9}, {9, 10}, {10, 11}, {11, 0},
                       {2, 4}, {6, 8}, {0, 10}},
                      1, 0, false, "1-saturated, not (1,1,4,4)-packing colourable");
}

// Triangles s t r, v w u, x y z with connectors s-w, t-z, y-b'-v,
// r-h'-c'-u and x-c'.
inline FixtureEntry three_triangle_gadget_fixture() {
  return make_fixture("three_triangle_gadget", "s t r v w u x y z b' h' c'",
                      {{0, 1}, {1, 2}, {2, 0},
                       {3, 4}, {4, 5}, {5, 3},
                       {6, 7}, {7, 8}, {8, 6},
                       {0, 4}, {1, 8},
                       {7, 9}, {9, 3},
                       {2, 10}, {10, 11}, {11, 5},
                       {6, 11}},
                      3, 2, false, "(3,2)-saturated, not (1,1,3,3)-packing colourable");
}

// 8-cycle a..h with chords a-e and c-g.
inline FixtureEntry c8_two_chords_fixture() {
  return make_fixture("c8_two_chords", "a b c d e f g h",
                      {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 0}, {0, 4}, {2, 6}},
                      1, 0, false, "1-saturated, not (1,2,2,2)-packing colourable");
}

// Hexagon x1 x3 x6 x4 x5 x2 with x1-y1-x4, x3-y3-x5, x6-y2-x2.
inline FixtureEntry hex_wheel_left_fixture() {
  auto e = make_fixture("hex_wheel_left", "x1 x2 x3 x4 x5 x6 y1 y2 y3",
                        {{0, 2}, {2, 5}, {5, 3}, {3, 4}, {4, 1}, {1, 0},
                         {0, 6}, {6, 3}, {2, 8}, {8, 4}, {5, 7}, {7, 1}},
                        2, 0, false, "six non-heavy vertices, first configuration");
  e.coloring = PackingColoring(std::vector<int>{1, 4, 2, 3, 1, 1, 5, 5, 5});
  e.coloring_sequence = PackingSequence({1, 2, 2, 2, 2});
  return e;
}

// x1 joined to y1 y2 y3; y1-x2, y2-x3, y2-x4, y3-x5, y3-x6; j on x2 x3 x6,
// k on x2 x4 x5, l on x3 x5, m on x4 x6.
inline FixtureEntry thirteen_vertex_right_fixture() {
  auto e = make_fixture("thirteen_vertex_right", "x1 x2 x3 x4 x5 x6 y1 y2 y3 j k l m",
                        {{6, 0}, {0, 7}, {0, 8}, {6, 1}, {2, 7}, {7, 3}, {5, 8}, {8, 4},
                         {1, 9}, {9, 2}, {9, 5}, {1, 10}, {10, 3}, {10, 4},
                         {2, 11}, {11, 4}, {3, 12}, {12, 5}},
                        3, 0, false, "six non-heavy vertices, second configuration");
  e.coloring = PackingColoring(std::vector<int>{1, 3, 1, 4, 5, 1, 2, 3, 4, 5, 1, 2, 2});
  e.coloring_sequence = PackingSequence({1, 2, 2, 2, 2});
  return e;
}

// Prism a1 a2 a3 / b1 b2 b3 with rungs ai-bi; a1-a2 subdivided by p and
// b2-b3 by q.
inline FixtureEntry prism_subdivided_fixture() {
  return make_fixture("prism_subdivided", "a1 a2 a3 b1 b2 b3 p q",
                      {{0, 6}, {6, 1}, {1, 2}, {2, 0},
                       {3, 4}, {4, 7}, {7, 5}, {5, 3},
                       {0, 3}, {1, 4}, {2, 5}},
                      3, 0, false, "(3,0)-saturated with average degree 11/4");
}

}  // namespace detail

inline constexpr std::array<std::string_view, 9> kFixtureNames = {
    "petersen",      "two_k3_star",    "sk4",
    "c12_three_chords", "three_triangle_gadget", "c8_two_chords",
    "hex_wheel_left",   "thirteen_vertex_right", "prism_subdivided",
};

inline std::vector<std::string> fixture_names() { return {kFixtureNames.begin(), kFixtureNames.end()}; }

inline FixtureEntry fixture(std::string_view name) {
  if (name == "petersen") return detail::petersen_fixture();
  if (name == "two_k3_star") return detail::two_k3_star_fixture();
  if (name == "sk4") return detail::sk4_fixture();
  if (name == "c12_three_chords") return detail::c12_three_chords_fixture();
  if (name == "three_triangle_gadget") return detail::three_triangle_gadget_fixture();
  if (name == "c8_two_chords") return detail::c8_two_chords_fixture();
  if (name == "hex_wheel_left") return detail::hex_wheel_left_fixture();
  if (name == "thirteen_vertex_right") return detail::thirteen_vertex_right_fixture();
  if (name == "prism_subdivided") return detail::prism_subdivided_fixture();
  throw Error(Errc::unknown_fixture, std::string(name));
}

inline bool is_fixture_name(std::string_view name) {
  for (auto n : kFixtureNames) {
    if (n == name) return true;
  }
  return false;
}

}  // namespace subpack
