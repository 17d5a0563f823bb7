#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "subpack/graph.hpp"

namespace subpack {

/// Degree data and saturation levels of a subcubic graph.
///
/// `sat_level` is the least i such that every 3-vertex has at most i
/// neighbours of degree 3; `heavy_sat_level` the least i such that every
/// heavy vertex (a 3-vertex whose neighbours all have degree 3) has at most
/// i heavy neighbours. Both are 0 when no qualifying vertex exists.
struct SaturationProfile {
  std::vector<int> degree;
  std::vector<bool> heavy;
  int sat_level = 0;
  int heavy_sat_level = 0;

  int heavy_count() const {
    int c = 0;
    for (bool h : heavy) c += h ? 1 : 0;
    return c;
  }
};

inline bool is_heavy(const Graph& g, Vertex v) {
  if (g.degree(v) != 3) return false;
  for (Vertex u : g.neighbors(v)) {
    if (g.degree(u) != 3) return false;
  }
  return true;
}

inline SaturationProfile profile(const Graph& g) {
  if (g.max_degree() > 3) {
    throw Error(Errc::not_subcubic, "maximum degree " + std::to_string(g.max_degree()));
  }
  const int n = g.order();
  SaturationProfile p;
  p.degree.resize(n);
  p.heavy.resize(n);
  for (int v = 0; v < n; ++v) {
    p.degree[v] = g.degree(v);
    p.heavy[v] = is_heavy(g, v);
  }
  for (int v = 0; v < n; ++v) {
    if (p.degree[v] != 3) continue;
    int threes = 0;
    int heavies = 0;
    for (Vertex u : g.neighbors(v)) {
      threes += p.degree[u] == 3 ? 1 : 0;
      heavies += p.heavy[u] ? 1 : 0;
    }
    p.sat_level = std::max(p.sat_level, threes);
    if (p.heavy[v]) p.heavy_sat_level = std::max(p.heavy_sat_level, heavies);
  }
  return p;
}

/// Class tags: sat0..sat3 (i-saturated), hsat0..hsat3 ((3,i)-saturated),
/// cubic, and any (every subcubic graph).
struct ClassTag {
  enum class Kind { sat, heavy_sat, cubic, subcubic };
  Kind kind = Kind::subcubic;
  int level = 3;

  static ClassTag sat(int i) { return {Kind::sat, i}; }
  static ClassTag heavy_sat(int i) { return {Kind::heavy_sat, i}; }
  static ClassTag cubic() { return {Kind::cubic, 3}; }
  static ClassTag subcubic() { return {Kind::subcubic, 3}; }

  static ClassTag parse(std::string_view text) {
    auto level_of = [&](std::string_view digits) {
      if (digits.size() != 1 || digits[0] < '0' || digits[0] > '3') {
        throw Error(Errc::unknown_class_tag, std::string(text));
      }
      return digits[0] - '0';
    };
    if (text == "cubic") return cubic();
    if (text == "any" || text == "subcubic") return subcubic();
    if (text.starts_with("hsat")) return heavy_sat(level_of(text.substr(4)));
    if (text.starts_with("sat")) return sat(level_of(text.substr(3)));
    throw Error(Errc::unknown_class_tag, std::string(text));
  }

  std::string str() const {
    switch (kind) {
      case Kind::sat: return "sat" + std::to_string(level);
      case Kind::heavy_sat: return "hsat" + std::to_string(level);
      case Kind::cubic: return "cubic";
      case Kind::subcubic: return "any";
    }
    return "any";
  }

  friend bool operator==(const ClassTag&, const ClassTag&) = default;
};

/// Membership test. Graphs with a vertex of degree above 3 belong to no class.
inline bool in_class(const Graph& g, ClassTag tag) {
  if (g.max_degree() > 3) return false;
  switch (tag.kind) {
    case ClassTag::Kind::subcubic: return true;
    case ClassTag::Kind::cubic: return g.order() > 0 && g.min_degree() == 3;
    case ClassTag::Kind::sat: return profile(g).sat_level <= tag.level;
    case ClassTag::Kind::heavy_sat: return profile(g).heavy_sat_level <= tag.level;
  }
  return false;
}

}  // namespace subpack
