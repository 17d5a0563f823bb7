#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <queue>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "subpack/error.hpp"

namespace subpack {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph on vertices 0..n-1 with sorted adjacency lists.
///
/// Immutable once built; every constructor path validates symmetry, the
/// absence of loops and duplicate neighbours, and index ranges.
class Graph {
 public:
  Graph() = default;

  /// Takes ownership of `adj`, sorts each list and validates it.
  explicit Graph(std::vector<std::vector<Vertex>> adj) : adj_(std::move(adj)) {
    std::size_t half_edges = 0;
    const int n = order();
    for (int v = 0; v < n; ++v) {
      auto& list = adj_[v];
      std::sort(list.begin(), list.end());
      for (std::size_t i = 0; i < list.size(); ++i) {
        const Vertex u = list[i];
        if (u < 0 || u >= n) {
          throw Error(Errc::edge_out_of_range,
                      "neighbour " + std::to_string(u) + " of " + std::to_string(v));
        }
        if (u == v) throw Error(Errc::self_loop, "vertex " + std::to_string(v));
        if (i > 0 && list[i - 1] == u) {
          throw Error(Errc::duplicate_edge, std::to_string(v) + "-" + std::to_string(u));
        }
      }
      half_edges += list.size();
    }
    for (int v = 0; v < n; ++v) {
      for (Vertex u : adj_[v]) {
        if (!std::binary_search(adj_[u].begin(), adj_[u].end(), v)) {
          throw Error(Errc::edge_out_of_range, "asymmetric adjacency " + std::to_string(v) + "-" +
                                                   std::to_string(u));
        }
      }
    }
    edge_count_ = half_edges / 2;
  }

  int order() const noexcept { return static_cast<int>(adj_.size()); }
  std::size_t size() const noexcept { return edge_count_; }

  std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }

  bool adjacent(Vertex u, Vertex v) const {
    return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
  }

  int max_degree() const {
    int best = 0;
    for (const auto& list : adj_) best = std::max(best, static_cast<int>(list.size()));
    return best;
  }

  int min_degree() const {
    if (adj_.empty()) return 0;
    int best = static_cast<int>(adj_.front().size());
    for (const auto& list : adj_) best = std::min(best, static_cast<int>(list.size()));
    return best;
  }

  /// Edges as (u, v) with u < v, in lexicographic order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (int u = 0; u < order(); ++u) {
      for (Vertex v : adj_[u]) {
        if (u < v) out.emplace_back(u, v);
      }
    }
    return out;
  }

  const std::vector<std::vector<Vertex>>& adjacency() const noexcept { return adj_; }

  friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_; }

 private:
  std::vector<std::vector<Vertex>> adj_;
  std::size_t edge_count_ = 0;
};

inline Graph build_graph(int n, std::span<const Edge> edges) {
  if (n < 0) throw Error(Errc::edge_out_of_range, "negative vertex count");
  std::vector<std::vector<Vertex>> adj(static_cast<std::size_t>(n));
  for (const auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw Error(Errc::edge_out_of_range,
                  "edge " + std::to_string(u) + "-" + std::to_string(v) + " with n=" + std::to_string(n));
    }
    if (u == v) throw Error(Errc::self_loop, "vertex " + std::to_string(u));
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  return Graph(std::move(adj));
}

inline Graph build_graph(int n, std::initializer_list<Edge> edges) {
  return build_graph(n, std::span<const Edge>(edges.begin(), edges.size()));
}

/// Exact non-negative rational kept in lowest terms.
struct Rational {
  long long num = 0;
  long long den = 1;

  static Rational reduced(long long num, long long den) {
    if (den < 0) num = -num, den = -den;
    const long long g = std::gcd(num < 0 ? -num : num, den);
    return g == 0 ? Rational{0, 1} : Rational{num / g, den / g};
  }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num * b.den == b.num * a.den;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    return a.num * b.den <=> b.num * a.den;
  }

  std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }
};

/// 2|E|/n in lowest terms.
inline Rational average_degree(const Graph& g) {
  if (g.order() == 0) throw Error(Errc::empty_graph, "average degree of the empty graph");
  return Rational::reduced(2 * static_cast<long long>(g.size()), g.order());
}

/// Replaces every edge by a path of length two. The vertex subdividing the
/// i-th edge of `g.edges()` gets index n + i.
inline Graph subdivide(const Graph& g) {
  const auto es = g.edges();
  const int n = g.order();
  std::vector<Edge> out;
  out.reserve(es.size() * 2);
  for (std::size_t i = 0; i < es.size(); ++i) {
    const Vertex mid = n + static_cast<Vertex>(i);
    out.emplace_back(es[i].first, mid);
    out.emplace_back(mid, es[i].second);
  }
  return build_graph(n + static_cast<int>(es.size()), out);
}

/// Components as sorted vertex lists, ordered by smallest member.
inline std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
  const int n = g.order();
  std::vector<int> seen(n, 0);
  std::vector<std::vector<Vertex>> out;
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<Vertex> comp{s};
    seen[s] = 1;
    for (std::size_t head = 0; head < comp.size(); ++head) {
      for (Vertex u : g.neighbors(comp[head])) {
        if (!seen[u]) {
          seen[u] = 1;
          comp.push_back(u);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

inline bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

/// An induced subgraph together with the map back to the parent's indices.
struct Subgraph {
  Graph graph;
  std::vector<Vertex> origin;
};

inline Subgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  std::vector<int> local(g.order(), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) local[vertices[i]] = static_cast<int>(i);
  std::vector<std::vector<Vertex>> adj(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (Vertex u : g.neighbors(vertices[i])) {
      if (local[u] >= 0) adj[i].push_back(local[u]);
    }
  }
  return {Graph(std::move(adj)), std::vector<Vertex>(vertices.begin(), vertices.end())};
}

/// Returns the graph with vertex v renamed to perm[v].
inline Graph relabel(const Graph& g, std::span<const int> perm) {
  std::vector<std::vector<Vertex>> adj(g.order());
  for (int v = 0; v < g.order(); ++v) {
    for (Vertex u : g.neighbors(v)) adj[perm[v]].push_back(perm[u]);
  }
  return Graph(std::move(adj));
}

}  // namespace subpack
