#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "subpack/coloring.hpp"
#include "subpack/graph.hpp"
#include "subpack/sequence.hpp"

namespace subpack {

/// Graph with stable vertex ids whose vertices and edges can be removed and
/// restored. Used to run reductions forward and replay them backward.
class MutableGraph {
 public:
  explicit MutableGraph(const Graph& g)
      : adj_(g.adjacency()), alive_(static_cast<std::size_t>(g.order()), 1) {}

  /// All `n` slots dead; vertices are brought in with add_vertex.
  static MutableGraph empty(int n) {
    MutableGraph m;
    m.adj_.resize(n);
    m.alive_.assign(n, 0);
    return m;
  }

  int capacity() const noexcept { return static_cast<int>(adj_.size()); }
  bool alive(Vertex v) const { return alive_[v] != 0; }
  int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
  const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[v]; }

  bool adjacent(Vertex u, Vertex v) const {
    return std::find(adj_[u].begin(), adj_[u].end(), v) != adj_[u].end();
  }

  std::vector<Vertex> remove_vertex(Vertex v) {
    std::vector<Vertex> nbrs = adj_[v];
    for (Vertex u : nbrs) erase(adj_[u], v);
    adj_[v].clear();
    alive_[v] = 0;
    return nbrs;
  }

  void add_vertex(Vertex v, const std::vector<Vertex>& nbrs) {
    alive_[v] = 1;
    for (Vertex u : nbrs) add_edge(u, v);
  }

  void add_edge(Vertex u, Vertex v) {
    adj_[u].push_back(v);
    adj_[v].push_back(u);
    std::sort(adj_[u].begin(), adj_[u].end());
    std::sort(adj_[v].begin(), adj_[v].end());
  }

  void remove_edge(Vertex u, Vertex v) {
    erase(adj_[u], v);
    erase(adj_[v], u);
  }

  /// Live vertices compacted to 0..m-1 in increasing id order.
  Subgraph compact() const {
    std::vector<Vertex> live;
    for (int v = 0; v < capacity(); ++v) {
      if (alive_[v]) live.push_back(v);
    }
    std::vector<int> local(capacity(), -1);
    for (std::size_t i = 0; i < live.size(); ++i) local[live[i]] = static_cast<int>(i);
    std::vector<std::vector<Vertex>> adj(live.size());
    for (std::size_t i = 0; i < live.size(); ++i) {
      for (Vertex u : adj_[live[i]]) adj[i].push_back(local[u]);
    }
    return {Graph(std::move(adj)), std::move(live)};
  }

  /// Vertices within `radius` of `source`, paired with their distance,
  /// source excluded, in BFS order.
  std::vector<std::pair<Vertex, int>> ball(Vertex source, int radius) const {
    std::vector<std::pair<Vertex, int>> out;
    std::vector<int> dist(capacity(), -1);
    std::vector<Vertex> queue{source};
    dist[source] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Vertex v = queue[head];
      if (dist[v] == radius) continue;
      for (Vertex u : adj_[v]) {
        if (dist[u] < 0) {
          dist[u] = dist[v] + 1;
          queue.push_back(u);
          out.emplace_back(u, dist[u]);
        }
      }
    }
    return out;
  }

 private:
  MutableGraph() = default;

  static void erase(std::vector<Vertex>& list, Vertex v) {
    list.erase(std::remove(list.begin(), list.end(), v), list.end());
  }

  std::vector<std::vector<Vertex>> adj_;
  std::vector<char> alive_;
};

/// One reversible rewrite. `vertex` was deleted while adjacent to
/// `neighbors`; a merge of adjacent 2-vertices may also have added an edge
/// between its two former neighbours.
struct ReductionStep {
  enum class Kind {
    peel,    // vertex of degree one
    merge2,  // 2-vertex adjacent to another 2-vertex, bypassed
    drop,    // 2-vertex next to a 3-vertex that has a second 2-neighbour
  };

  Kind kind;
  Vertex vertex;
  std::vector<Vertex> neighbors;
  std::optional<Edge> added_edge;
};

inline std::string_view step_name(ReductionStep::Kind k) {
  switch (k) {
    case ReductionStep::Kind::peel: return "peel";
    case ReductionStep::Kind::merge2: return "merge2";
    case ReductionStep::Kind::drop: return "drop";
  }
  return "?";
}

using ReductionLog = std::vector<ReductionStep>;

/// The reduced graph (compacted), the map from its vertices to the input's,
/// and the log needed to rebuild the input. Log entries use input ids.
struct Reduction {
  Graph reduced;
  std::vector<Vertex> origin;
  int original_order = 0;
  ReductionLog log;
};

struct ReductionRules {
  bool merge_adjacent_2vertices = false;
  bool drop_double_2neighbor = false;
};

/// Applies, smallest vertex id first and in this priority: deletion of a
/// degree-one vertex; for two adjacent 2-vertices u, v with w the other
/// neighbour of v, deletion of v plus the edge uw unless it already exists;
/// deletion of a 2-vertex x whose 3-neighbour has another 2-neighbour.
/// None of the rewrites raises a degree, so saturation classes and the
/// heavy-vertex constraints are preserved.
inline Reduction reduce(const Graph& g, ReductionRules rules = {}) {
  MutableGraph m(g);
  Reduction out;
  out.original_order = g.order();
  const int n = g.order();

  auto find_step = [&]() -> std::optional<ReductionStep> {
    for (int v = 0; v < n; ++v) {
      if (m.alive(v) && m.degree(v) == 1) {
        return ReductionStep{ReductionStep::Kind::peel, v, m.neighbors(v), std::nullopt};
      }
    }
    if (rules.merge_adjacent_2vertices) {
      for (int v = 0; v < n; ++v) {
        if (!m.alive(v) || m.degree(v) != 2) continue;
        for (Vertex u : m.neighbors(v)) {
          if (m.degree(u) != 2) continue;
          const Vertex w = m.neighbors(v)[0] == u ? m.neighbors(v)[1] : m.neighbors(v)[0];
          ReductionStep step{ReductionStep::Kind::merge2, v, m.neighbors(v), std::nullopt};
          if (!m.adjacent(u, w)) step.added_edge = Edge{std::min(u, w), std::max(u, w)};
          return step;
        }
      }
    }
    if (rules.drop_double_2neighbor) {
      for (int z = 0; z < n; ++z) {
        if (!m.alive(z) || m.degree(z) != 3) continue;
        std::vector<Vertex> twos;
        for (Vertex u : m.neighbors(z)) {
          if (m.degree(u) == 2) twos.push_back(u);
        }
        if (twos.size() >= 2) {
          const Vertex x = twos.front();
          return ReductionStep{ReductionStep::Kind::drop, x, m.neighbors(x), std::nullopt};
        }
      }
    }
    return std::nullopt;
  };

  while (auto step = find_step()) {
    m.remove_vertex(step->vertex);
    if (step->added_edge) m.add_edge(step->added_edge->first, step->added_edge->second);
    out.log.push_back(std::move(*step));
  }
  auto compacted = m.compact();
  out.reduced = std::move(compacted.graph);
  out.origin = std::move(compacted.origin);
  return out;
}

/// Deletes degree-one vertices until none is left; every component ends up
/// with minimum degree two or as a single vertex.
inline Reduction peel_degree_one(const Graph& g) { return reduce(g, {}); }

/// Peeling plus merging of adjacent 2-vertices.
inline Reduction reduce_adjacent_2vertices(const Graph& g) { return reduce(g, {true, false}); }

/// All three rewrites; the result has no adjacent vertices of degree at
/// most two and no 3-vertex with two 2-neighbours.
inline Reduction reduce_heavy_free(const Graph& g) { return reduce(g, {true, true}); }

/// Rebuilds the original graph by undoing the log in reverse order.
inline Graph replay(const Reduction& r) {
  MutableGraph m = MutableGraph::empty(r.original_order);
  for (Vertex v : r.origin) m.add_vertex(v, {});
  for (const auto& [a, b] : r.reduced.edges()) m.add_edge(r.origin[a], r.origin[b]);
  for (auto it = r.log.rbegin(); it != r.log.rend(); ++it) {
    if (it->added_edge) m.remove_edge(it->added_edge->first, it->added_edge->second);
    m.add_vertex(it->vertex, it->neighbors);
  }
  std::vector<std::vector<Vertex>> adj(r.original_order);
  for (int v = 0; v < r.original_order; ++v) adj[v] = m.neighbors(v);
  return Graph(std::move(adj));
}

/// How each restored vertex was coloured during a replay.
struct ExtensionStats {
  int direct = 0;    // a free class existed
  int swapped = 0;   // a neighbour moved to class 1, the vertex took its class
  int repaired = 0;  // joint recolouring within distance two
};

enum class ExtensionPolicy {
  direct_only,  // any need for recolouring is reported as stuck
  full,
};

namespace detail {

inline bool fits(const MutableGraph& m, const PackingColoring& c, const PackingSequence& seq, Vertex v,
                 int cls) {
  for (const auto& [u, d] : m.ball(v, seq.distance(cls))) {
    (void)d;
    if (c[u] == cls) return false;
  }
  return true;
}

// No two coloured vertices near v (v included) violate their class.
inline bool clean_near(const MutableGraph& m, const PackingColoring& c, const PackingSequence& seq,
                       Vertex v) {
  auto near = m.ball(v, seq.max_value());
  near.emplace_back(v, 0);
  for (const auto& [p, d] : near) {
    (void)d;
    const int cls = c[p];
    if (cls == PackingColoring::uncolored) continue;
    for (const auto& [q, dq] : m.ball(p, seq.distance(cls))) {
      (void)dq;
      if (c[q] == cls) return false;
    }
  }
  return true;
}

inline bool try_direct(const MutableGraph& m, PackingColoring& c, const PackingSequence& seq, Vertex v) {
  for (int cls = 1; cls <= seq.size(); ++cls) {
    if (fits(m, c, seq, v, cls)) {
      c.assign(v, cls);
      return true;
    }
  }
  return false;
}

// A neighbour y in some class i moves to a free 1-class and v takes i.
inline bool try_swap(const MutableGraph& m, PackingColoring& c, const PackingSequence& seq, Vertex v) {
  for (Vertex y : m.neighbors(v)) {
    const int old = c[y];
    if (old == PackingColoring::uncolored || seq.distance(old) == 1) continue;
    c.clear(y);
    for (int one = 1; one <= seq.size() && seq.distance(one) == 1; ++one) {
      if (!fits(m, c, seq, y, one)) continue;
      c.assign(y, one);
      if (fits(m, c, seq, v, old)) {
        c.assign(v, old);
        return true;
      }
      c.clear(y);
    }
    c.assign(y, old);
  }
  return false;
}

inline constexpr std::uint64_t kRepairBudget = 2'000'000;

// Recolours v and every vertex within distance two of it, all other
// colours fixed.
inline bool try_repair(const MutableGraph& m, PackingColoring& c, const PackingSequence& seq, Vertex v) {
  std::vector<Vertex> region{v};
  for (const auto& [u, d] : m.ball(v, 2)) {
    (void)d;
    region.push_back(u);
  }
  std::vector<int> saved;
  for (Vertex u : region) {
    saved.push_back(c[u]);
    c.clear(u);
  }
  std::uint64_t nodes = 0;
  auto search = [&](auto&& self, std::size_t pos) -> bool {
    if (pos == region.size()) return true;
    for (int cls = 1; cls <= seq.size(); ++cls) {
      if (++nodes > kRepairBudget) return false;
      if (!fits(m, c, seq, region[pos], cls)) continue;
      c.assign(region[pos], cls);
      if (self(self, pos + 1)) return true;
      c.clear(region[pos]);
    }
    return false;
  };
  if (search(search, 0) && clean_near(m, c, seq, v)) return true;
  for (std::size_t i = 0; i < region.size(); ++i) c.assign(region[i], saved[i]);
  c.clear(v);
  return false;
}

}  // namespace detail

/// Colours the just-restored vertex `v` of `m`: the first class that fits;
/// otherwise the swap with a neighbour; otherwise a bounded joint
/// recolouring of the distance-two ball. Restoring a dropped 2-vertex can
/// bring two coloured vertices closer; such conflicts go straight to the
/// joint recolouring. Throws EXTENSION_STUCK.
inline void extend_restored_vertex(const MutableGraph& m, PackingColoring& c, const PackingSequence& seq,
                                   Vertex v, ExtensionPolicy policy = ExtensionPolicy::full,
                                   ExtensionStats* stats = nullptr) {
  if (!detail::clean_near(m, c, seq, v)) {
    if (policy == ExtensionPolicy::full && detail::try_repair(m, c, seq, v)) {
      if (stats) ++stats->repaired;
      return;
    }
    throw Error(Errc::extension_stuck, "restoring vertex " + std::to_string(v) +
                                           " creates a conflict that local recolouring cannot fix");
  }
  if (detail::try_direct(m, c, seq, v)) {
    if (stats) ++stats->direct;
    return;
  }
  if (policy == ExtensionPolicy::full) {
    if (detail::try_swap(m, c, seq, v)) {
      if (stats) ++stats->swapped;
      return;
    }
    if (detail::try_repair(m, c, seq, v)) {
      if (stats) ++stats->repaired;
      return;
    }
  }
  throw Error(Errc::extension_stuck, "no class for restored vertex " + std::to_string(v) +
                                         " under (" + seq.str() + ")");
}

/// Lifts a colouring of `r.reduced` to the original graph by replaying the
/// log backward. Undoing a peel or a merge never shortens a distance between
/// coloured vertices; undoing a drop can, and is repaired locally.
inline PackingColoring lift_coloring(const Reduction& r, const PackingColoring& reduced_coloring,
                                     const PackingSequence& seq,
                                     ExtensionPolicy policy = ExtensionPolicy::full,
                                     ExtensionStats* stats = nullptr) {
  MutableGraph m = MutableGraph::empty(r.original_order);
  PackingColoring c(r.original_order);
  for (std::size_t i = 0; i < r.origin.size(); ++i) {
    m.add_vertex(r.origin[i], {});
    c.assign(r.origin[i], reduced_coloring[static_cast<Vertex>(i)]);
  }
  for (const auto& [a, b] : r.reduced.edges()) m.add_edge(r.origin[a], r.origin[b]);
  for (auto it = r.log.rbegin(); it != r.log.rend(); ++it) {
    if (it->added_edge) m.remove_edge(it->added_edge->first, it->added_edge->second);
    m.add_vertex(it->vertex, it->neighbors);
    extend_restored_vertex(m, c, seq, it->vertex, policy, stats);
  }
  return c;
}

/// Replays peel steps only. Each peeled vertex takes a 1-class its unique
/// neighbour does not use, which always exists when `seq` starts with two
/// 1-classes.
inline PackingColoring extend_peel(const Reduction& r, const PackingColoring& core_coloring,
                                   const PackingSequence& seq) {
  return lift_coloring(r, core_coloring, seq, ExtensionPolicy::direct_only);
}

}  // namespace subpack
