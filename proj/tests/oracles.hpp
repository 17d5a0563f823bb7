#pragma once

// Slow reference implementations used only by the tests. None of them
// calls canonical_code(), the solver or the distance matrix.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <queue>
#include <random>
#include <vector>

#include "subpack/graph.hpp"

namespace oracle {

using subpack::Graph;
using subpack::Vertex;

/// Adjacency as bitmasks, n <= 16.
inline std::vector<std::uint32_t> masks(const Graph& g) {
  std::vector<std::uint32_t> out(g.order(), 0);
  for (const auto& [u, v] : g.edges()) {
    out[u] |= 1u << v;
    out[v] |= 1u << u;
  }
  return out;
}

inline bool connected_masks(const std::vector<std::uint32_t>& adj) {
  const int n = static_cast<int>(adj.size());
  if (n == 0) return true;
  std::uint32_t seen = 1, frontier = 1;
  while (frontier) {
    std::uint32_t next = 0;
    for (int v = 0; v < n; ++v) {
      if (frontier >> v & 1) next |= adj[v];
    }
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == (n == 32 ? ~0u : (1u << n) - 1);
}

/// Number of vertex permutations that preserve every edge.
inline long long automorphisms(const Graph& g) {
  const auto adj = masks(g);
  const int n = g.order();
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  long long count = 0;
  do {
    bool ok = true;
    for (int v = 0; v < n && ok; ++v) {
      std::uint32_t image = 0;
      for (int u = 0; u < n; ++u) {
        if (adj[v] >> u & 1) image |= 1u << p[u];
      }
      ok = image == adj[p[v]];
    }
    count += ok ? 1 : 0;
  } while (std::next_permutation(p.begin(), p.end()));
  return count;
}

/// Labelled connected graphs on n vertices with maximum degree at most 3,
/// by trying every edge subset.
inline long long labelled_connected_subcubic(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  }
  const int m = static_cast<int>(pairs.size());
  long long count = 0;
  std::vector<std::uint32_t> adj(n);
  std::vector<int> deg(n);
  for (std::uint64_t s = 0; s < (1ull << m); ++s) {
    std::fill(adj.begin(), adj.end(), 0);
    std::fill(deg.begin(), deg.end(), 0);
    bool ok = true;
    for (int e = 0; e < m && ok; ++e) {
      if (!(s >> e & 1)) continue;
      const auto [a, b] = pairs[e];
      adj[a] |= 1u << b;
      adj[b] |= 1u << a;
      ok = ++deg[a] <= 3 && ++deg[b] <= 3;
    }
    if (ok && connected_masks(adj)) ++count;
  }
  return count;
}

inline long long factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

/// Isomorphism by trying every bijection.
inline bool isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  const auto x = masks(a);
  const auto y = masks(b);
  const int n = a.order();
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    bool ok = true;
    for (int v = 0; v < n && ok; ++v) {
      std::uint32_t image = 0;
      for (int u = 0; u < n; ++u) {
        if (x[v] >> u & 1) image |= 1u << p[u];
      }
      ok = image == y[p[v]];
    }
    if (ok) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

/// Single-source hop distances with -1 for unreachable vertices.
inline std::vector<int> bfs(const Graph& g, Vertex s) {
  std::vector<int> d(g.order(), -1);
  std::queue<Vertex> q;
  d[s] = 0;
  q.push(s);
  while (!q.empty()) {
    const Vertex v = q.front();
    q.pop();
    for (Vertex u : g.neighbors(v)) {
      if (d[u] < 0) {
        d[u] = d[v] + 1;
        q.push(u);
      }
    }
  }
  return d;
}

/// Packing check straight from the definition.
inline bool valid_packing(const Graph& g, const std::vector<int>& seq, const std::vector<int>& cls) {
  const int n = g.order();
  for (int v = 0; v < n; ++v) {
    if (cls[v] < 1 || cls[v] > static_cast<int>(seq.size())) return false;
  }
  for (int v = 0; v < n; ++v) {
    const auto d = bfs(g, v);
    for (int u = v + 1; u < n; ++u) {
      if (cls[u] == cls[v] && d[u] >= 0 && d[u] <= seq[cls[v] - 1]) return false;
    }
  }
  return true;
}

/// Maximum of 20|X1| + 14|X0| + 7|Y| over all independent sets.
inline long long max_phi(const Graph& g) {
  const int n = g.order();
  const auto adj = masks(g);
  std::vector<long long> w(n);
  for (int v = 0; v < n; ++v) {
    if (g.degree(v) == 3) {
      bool heavy_nb = false;
      for (Vertex u : g.neighbors(v)) heavy_nb = heavy_nb || g.degree(u) == 3;
      w[v] = heavy_nb ? 20 : 14;
    } else {
      w[v] = 7;
    }
  }
  long long best = 0;
  for (std::uint32_t s = 0; s < (1u << n); ++s) {
    bool ok = true;
    long long phi = 0;
    for (int v = 0; v < n && ok; ++v) {
      if (!(s >> v & 1)) continue;
      ok = (adj[v] & s) == 0;
      phi += w[v];
    }
    if (ok) best = std::max(best, phi);
  }
  return best;
}

/// Random connected subcubic graph: a random spanning tree of bounded
/// degree plus random extra edges where degrees allow.
inline Graph random_subcubic(int n, int extra, std::mt19937& rng) {
  std::vector<std::vector<Vertex>> adj(n);
  auto can_add = [&](int a, int b) {
    return a != b && adj[a].size() < 3 && adj[b].size() < 3 &&
           std::find(adj[a].begin(), adj[a].end(), b) == adj[a].end();
  };
  for (int v = 1; v < n; ++v) {
    for (;;) {
      const int u = std::uniform_int_distribution<int>(0, v - 1)(rng);
      if (can_add(u, v)) {
        adj[u].push_back(v);
        adj[v].push_back(u);
        break;
      }
    }
  }
  for (int t = 0; t < extra * 10 && extra > 0; ++t) {
    const int a = std::uniform_int_distribution<int>(0, n - 1)(rng);
    const int b = std::uniform_int_distribution<int>(0, n - 1)(rng);
    if (!can_add(a, b)) continue;
    adj[a].push_back(b);
    adj[b].push_back(a);
    if (--extra == 0) break;
  }
  return Graph(std::move(adj));
}

/// Subdivides edges between two 3-vertices (between two heavy vertices when
/// `heavy` is set) until every such vertex has at most `level` neighbours of
/// its kind. Degrees never rise, so the result stays subcubic and connected.
inline Graph desaturate(Graph g, int level, bool heavy, std::mt19937& rng) {
  for (;;) {
    const int n = g.order();
    auto kind = [&](Vertex v) {
      if (g.degree(v) != 3) return false;
      if (!heavy) return true;
      for (Vertex u : g.neighbors(v)) {
        if (g.degree(u) != 3) return false;
      }
      return true;
    };
    std::vector<std::pair<Vertex, Vertex>> over;
    for (int v = 0; v < n; ++v) {
      if (!kind(v)) continue;
      std::vector<Vertex> same;
      for (Vertex u : g.neighbors(v)) {
        if (kind(u)) same.push_back(u);
      }
      if (static_cast<int>(same.size()) > level) {
        for (Vertex u : same) over.emplace_back(v, u);
      }
    }
    if (over.empty()) return g;
    const auto [a, b] = over[std::uniform_int_distribution<std::size_t>(0, over.size() - 1)(rng)];
    std::vector<std::vector<Vertex>> adj(n + 1);
    for (const auto& [u, v] : g.edges()) {
      if ((u == a && v == b) || (u == b && v == a)) continue;
      adj[u].push_back(v);
      adj[v].push_back(u);
    }
    adj[a].push_back(n);
    adj[b].push_back(n);
    adj[n] = {a, b};
    g = Graph(std::move(adj));
  }
}

}  // namespace oracle
