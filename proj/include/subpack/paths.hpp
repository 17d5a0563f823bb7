#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "subpack/graph.hpp"

namespace subpack {

/// Maximal paths of G - S for a maximal independent set S of a graph with
/// minimum degree two.
///   p0: one vertex
///   p1: two adjacent 2-vertices
///   p2: a 2-vertex adjacent to a 3-vertex
///   p3: 2-vertex, 3-vertex, 2-vertex
enum class PathType { p0, p1, p2, p3 };

/// bad2: a 2-vertex on a p1, p2 or p3 path. weak3: the 3-vertex of a p2
/// path. mid3: the middle of a p3 path.
enum class BadRole { none, bad2, weak3, mid3 };

constexpr std::string_view path_type_name(PathType t) noexcept {
  switch (t) {
    case PathType::p0: return "P0";
    case PathType::p1: return "P1";
    case PathType::p2: return "P2";
    case PathType::p3: return "P3";
  }
  return "?";
}

constexpr std::string_view bad_role_name(BadRole r) noexcept {
  switch (r) {
    case BadRole::none: return "none";
    case BadRole::bad2: return "bad2";
    case BadRole::weak3: return "weak3";
    case BadRole::mid3: return "mid3";
  }
  return "?";
}

struct MaximalPath {
  PathType type = PathType::p0;
  std::vector<Vertex> vertices;  // p1 ascending, p2 as (2-vertex, 3-vertex), p3 in path order
};

struct PathDecomposition {
  std::vector<MaximalPath> paths;
  std::vector<int> path_of;  // -1 for members of S
  std::vector<BadRole> role;
  std::vector<char> in_s;

  int count(PathType t) const {
    return static_cast<int>(std::count_if(paths.begin(), paths.end(), [&](const MaximalPath& p) { return p.type == t; }));
  }
  bool is_bad(Vertex v) const { return role[v] != BadRole::none; }
};

/// Splits G - S into maximal paths and tags every vertex. Throws
/// STRUCTURE_VIOLATION when a vertex of G - S has no neighbour in S, two
/// 3-vertices of G - S are adjacent, or a component of G - S is not one of
/// the four path types.
inline PathDecomposition decompose_paths(const Graph& g, const std::vector<Vertex>& s) {
  const int n = g.order();
  PathDecomposition out;
  out.in_s.assign(n, 0);
  out.path_of.assign(n, -1);
  out.role.assign(n, BadRole::none);
  for (Vertex v : s) out.in_s[v] = 1;

  auto violation = [](const std::string& what) { throw Error(Errc::structure_violation, what); };

  for (int v = 0; v < n; ++v) {
    if (out.in_s[v]) {
      for (Vertex u : g.neighbors(v)) {
        if (out.in_s[u]) violation("S is not independent at " + std::to_string(v) + "-" + std::to_string(u));
      }
      continue;
    }
    bool has_father = false;
    for (Vertex u : g.neighbors(v)) {
      if (out.in_s[u]) has_father = true;
      if (!out.in_s[u] && g.degree(u) == 3 && g.degree(v) == 3) {
        violation("adjacent 3-vertices " + std::to_string(v) + "," + std::to_string(u) + " outside S");
      }
    }
    if (!has_father) violation("vertex " + std::to_string(v) + " outside S has no neighbour in S");
  }

  for (int v = 0; v < n; ++v) {
    if (out.in_s[v] || out.path_of[v] >= 0) continue;
    std::vector<Vertex> comp{v};
    out.path_of[v] = static_cast<int>(out.paths.size());
    for (std::size_t h = 0; h < comp.size(); ++h) {
      for (Vertex u : g.neighbors(comp[h])) {
        if (!out.in_s[u] && out.path_of[u] < 0) {
          out.path_of[u] = out.path_of[v];
          comp.push_back(u);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    MaximalPath path;
    if (comp.size() == 1) {
      path = {PathType::p0, comp};
    } else if (comp.size() == 2) {
      const Vertex a = comp[0];
      const Vertex b = comp[1];
      if (g.degree(a) == 2 && g.degree(b) == 2) {
        path = {PathType::p1, comp};
        out.role[a] = out.role[b] = BadRole::bad2;
      } else {
        const Vertex two = g.degree(a) == 2 ? a : b;
        const Vertex three = two == a ? b : a;
        path = {PathType::p2, {two, three}};
        out.role[two] = BadRole::bad2;
        out.role[three] = BadRole::weak3;
      }
    } else if (comp.size() == 3) {
      Vertex mid = -1;
      for (Vertex x : comp) {
        int inside = 0;
        for (Vertex u : g.neighbors(x)) inside += out.in_s[u] ? 0 : 1;
        if (inside == 2) mid = x;
      }
      if (mid < 0 || g.degree(mid) != 3) violation("component of G - S at " + std::to_string(v) + " is not a 2-3-2 path");
      std::vector<Vertex> ends;
      for (Vertex x : comp) {
        if (x != mid) ends.push_back(x);
      }
      if (g.degree(ends[0]) != 2 || g.degree(ends[1]) != 2) {
        violation("path through " + std::to_string(mid) + " has an end of degree 3");
      }
      path = {PathType::p3, {ends[0], mid, ends[1]}};
      out.role[ends[0]] = out.role[ends[1]] = BadRole::bad2;
      out.role[mid] = BadRole::mid3;
    } else {
      violation("component of G - S at " + std::to_string(v) + " has " + std::to_string(comp.size()) + " vertices");
    }
    out.paths.push_back(std::move(path));
  }
  return out;
}

/// Neighbours of v in S.
inline std::vector<Vertex> fathers(const Graph& g, const PathDecomposition& d, Vertex v) {
  std::vector<Vertex> out;
  for (Vertex u : g.neighbors(v)) {
    if (d.in_s[u]) out.push_back(u);
  }
  return out;
}

/// Distinct non-adjacent vertices outside S with a common neighbour in S.
inline bool are_siblings(const Graph& g, const PathDecomposition& d, Vertex u, Vertex v) {
  if (u == v || d.in_s[u] || d.in_s[v] || g.adjacent(u, v)) return false;
  for (Vertex x : g.neighbors(u)) {
    if (d.in_s[x] && g.adjacent(x, v)) return true;
  }
  return false;
}

/// Siblings of v that are bad vertices, ascending.
inline std::vector<Vertex> bad_siblings(const Graph& g, const PathDecomposition& d, Vertex v) {
  std::vector<Vertex> out;
  for (Vertex x : fathers(g, d, v)) {
    for (Vertex u : g.neighbors(x)) {
      if (d.is_bad(u) && are_siblings(g, d, u, v)) out.push_back(u);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// The other vertex of the p1 or p2 path containing v.
inline Vertex bad_neighbor(const PathDecomposition& d, Vertex v) {
  const auto& p = d.paths[d.path_of[v]];
  if (p.type != PathType::p1 && p.type != PathType::p2) {
    throw Error(Errc::precondition, "vertex " + std::to_string(v) + " is not on a P1 or P2 path");
  }
  return p.vertices[0] == v ? p.vertices[1] : p.vertices[0];
}

/// One vertex from each p1 and p2 path. A member with a sibling among the
/// other members is a sib; the rest are lonely. gamma counts the sibs.
struct BadSet {
  std::vector<Vertex> members;  // ascending
  std::vector<Vertex> sibling;  // per member: smallest sibling inside the set, or -1 when lonely
  int gamma = 0;

  bool contains(Vertex v) const { return std::binary_search(members.begin(), members.end(), v); }

  std::vector<Vertex> lonely() const {
    std::vector<Vertex> out;
    for (std::size_t i = 0; i < members.size(); ++i) {
      if (sibling[i] < 0) out.push_back(members[i]);
    }
    return out;
  }

  std::vector<Vertex> sibs() const {
    std::vector<Vertex> out;
    for (std::size_t i = 0; i < members.size(); ++i) {
      if (sibling[i] >= 0) out.push_back(members[i]);
    }
    return out;
  }

  Vertex sibling_of(Vertex v) const {
    const auto it = std::lower_bound(members.begin(), members.end(), v);
    return it != members.end() && *it == v ? sibling[it - members.begin()] : -1;
  }
};

/// Validates `members` as a bad set and fills in sib/lonely status.
inline BadSet make_bad_set(const Graph& g, const PathDecomposition& d, std::vector<Vertex> members) {
  std::sort(members.begin(), members.end());
  std::vector<int> hits(d.paths.size(), 0);
  for (Vertex v : members) {
    if (d.in_s[v]) throw Error(Errc::precondition, "bad set member " + std::to_string(v) + " is in S");
    const auto t = d.paths[d.path_of[v]].type;
    if (t != PathType::p1 && t != PathType::p2) {
      throw Error(Errc::precondition, "bad set member " + std::to_string(v) + " is not on a P1 or P2 path");
    }
    ++hits[d.path_of[v]];
  }
  for (std::size_t p = 0; p < d.paths.size(); ++p) {
    const auto t = d.paths[p].type;
    const int want = (t == PathType::p1 || t == PathType::p2) ? 1 : 0;
    if (hits[p] != want) throw Error(Errc::precondition, "bad set must hold exactly one vertex of each P1/P2 path");
  }
  BadSet b;
  b.members = std::move(members);
  b.sibling.assign(b.members.size(), -1);
  for (std::size_t i = 0; i < b.members.size(); ++i) {
    for (Vertex u : bad_siblings(g, d, b.members[i])) {
      if (b.contains(u)) {
        b.sibling[i] = u;
        ++b.gamma;
        break;
      }
    }
  }
  return b;
}

struct BadSetChoice {
  BadSet b;       // gamma maximal
  BadSet bprime;  // lonely 3-vertices of b replaced by their bad neighbours
};

/// Paths are grouped by the sibling relation between their vertices; gamma
/// is a sum over groups. Groups of at most `exact_limit` paths are searched
/// over all 2^k choices, larger groups by single-flip ascent. Among optimal
/// choices the one preferring the first listed vertex of each path wins.
inline BadSetChoice best_bad_set(const Graph& g, const PathDecomposition& d, int exact_limit = 20) {
  std::vector<int> open;  // indices of p1 and p2 paths
  std::vector<int> slot(d.paths.size(), -1);
  for (std::size_t p = 0; p < d.paths.size(); ++p) {
    if (d.paths[p].type == PathType::p1 || d.paths[p].type == PathType::p2) {
      slot[p] = static_cast<int>(open.size());
      open.push_back(static_cast<int>(p));
    }
  }
  const int m = static_cast<int>(open.size());

  // Candidate vertex (slot, side) -> bad siblings that are also candidates.
  auto candidate = [&](int s, int side) { return d.paths[open[s]].vertices[side]; };
  std::vector<std::vector<std::vector<std::pair<int, int>>>> links(m, std::vector<std::vector<std::pair<int, int>>>(2));
  std::vector<std::vector<int>> touches(m);
  for (int s = 0; s < m; ++s) {
    for (int side = 0; side < 2; ++side) {
      for (Vertex u : bad_siblings(g, d, candidate(s, side))) {
        const int t = slot[d.path_of[u]];
        if (t < 0 || t == s) continue;
        const int uside = d.paths[open[t]].vertices[0] == u ? 0 : 1;
        links[s][side].emplace_back(t, uside);
        touches[s].push_back(t);
      }
    }
  }

  std::vector<int> choice(m, 0);
  std::vector<int> group(m, -1);
  for (int s0 = 0; s0 < m; ++s0) {
    if (group[s0] >= 0) continue;
    std::vector<int> members{s0};
    group[s0] = s0;
    for (std::size_t h = 0; h < members.size(); ++h) {
      for (int t : touches[members[h]]) {
        if (group[t] < 0) {
          group[t] = s0;
          members.push_back(t);
        }
      }
    }
    std::sort(members.begin(), members.end());

    auto local_gamma = [&]() {
      int gamma = 0;
      for (int s : members) {
        for (const auto& [t, side] : links[s][choice[s]]) {
          if (choice[t] == side) {
            ++gamma;
            break;
          }
        }
      }
      return gamma;
    };

    const int k = static_cast<int>(members.size());
    if (k <= exact_limit) {
      int best = -1;
      std::vector<int> best_choice;
      for (std::uint64_t mask = 0; mask < (1ULL << k); ++mask) {
        // Highest bit drives the first path so that masks run in lexicographic order.
        for (int i = 0; i < k; ++i) choice[members[i]] = static_cast<int>((mask >> (k - 1 - i)) & 1);
        const int gamma = local_gamma();
        if (gamma > best) {
          best = gamma;
          best_choice.clear();
          for (int s : members) best_choice.push_back(choice[s]);
        }
      }
      for (int i = 0; i < k; ++i) choice[members[i]] = best_choice[i];
    } else {
      int current = local_gamma();
      for (bool improved = true; improved;) {
        improved = false;
        for (int s : members) {
          choice[s] ^= 1;
          const int gamma = local_gamma();
          if (gamma > current) {
            current = gamma;
            improved = true;
          } else {
            choice[s] ^= 1;
          }
        }
      }
    }
  }

  std::vector<Vertex> chosen;
  for (int s = 0; s < m; ++s) chosen.push_back(candidate(s, choice[s]));
  BadSetChoice out;
  out.b = make_bad_set(g, d, chosen);
  std::vector<Vertex> replaced;
  for (std::size_t i = 0; i < out.b.members.size(); ++i) {
    const Vertex v = out.b.members[i];
    replaced.push_back(out.b.sibling[i] < 0 && g.degree(v) == 3 ? bad_neighbor(d, v) : v);
  }
  out.bprime = make_bad_set(g, d, replaced);
  return out;
}

}  // namespace subpack
