#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <string_view>
#include <vector>

#include "subpack/coloring.hpp"
#include "subpack/graph.hpp"
#include "subpack/sequence.hpp"

namespace subpack {

inline constexpr std::uint64_t kDefaultBudget = 100'000'000;

struct ColorResult {
  enum class Verdict { feasible, infeasible, budget_exhausted };

  Verdict verdict = Verdict::infeasible;
  PackingColoring coloring;  // total iff feasible
  std::uint64_t nodes = 0;

  bool feasible() const noexcept { return verdict == Verdict::feasible; }
};

constexpr std::string_view verdict_name(ColorResult::Verdict v) noexcept {
  switch (v) {
    case ColorResult::Verdict::feasible: return "feasible";
    case ColorResult::Verdict::infeasible: return "infeasible";
    case ColorResult::Verdict::budget_exhausted: return "budget";
  }
  return "unknown";
}

namespace detail {

// Backtracking over one connected component with forward checking on
// per-vertex class domains. Classes sharing the same a_i are
// interchangeable, so within such a group a vertex may only open the
// lowest-indexed class not yet used.
class PackingSearch {
 public:
  PackingSearch(const Graph& g, const PackingSequence& seq, std::uint64_t budget)
      : g_(g), seq_(seq), k_(seq.size()), budget_(budget) {
    if (k_ > 63) throw Error(Errc::too_large, "at most 63 classes supported");
    group_of_.resize(k_ + 1);
    for (int c = 1; c <= k_; ++c) {
      if (c == 1 || seq.distance(c) != seq.distance(c - 1)) group_start_.push_back(c);
      group_of_[c] = static_cast<int>(group_start_.size()) - 1;
    }
    balls_.resize(g.order());
    const int reach = seq.max_value();
    for (int v = 0; v < g.order(); ++v) balls_[v] = ball(v, reach);
  }

  std::uint64_t nodes() const noexcept { return nodes_; }
  bool exhausted() const noexcept { return exhausted_; }

  /// Colours `vertices` (one component) into `out`. False on infeasibility
  /// or budget exhaustion; check exhausted() to tell them apart.
  bool solve(const std::vector<Vertex>& vertices, PackingColoring& out) {
    order_ = search_order(vertices);
    const std::uint64_t full = (k_ == 64 ? ~0ULL : ((1ULL << k_) - 1)) << 1;
    domain_.assign(g_.order(), 0);
    for (Vertex v : vertices) domain_[v] = full;
    opened_.assign(group_start_.size(), 0);
    assignment_ = &out;
    return assign(0);
  }

 private:
  struct Near {
    Vertex u;
    int dist;
  };

  std::vector<Near> ball(Vertex source, int radius) const {
    std::vector<Near> out;
    std::vector<int> dist(g_.order(), -1);
    std::vector<Vertex> queue{source};
    dist[source] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Vertex v = queue[head];
      if (dist[v] == radius) continue;
      for (Vertex u : g_.neighbors(v)) {
        if (dist[u] < 0) {
          dist[u] = dist[v] + 1;
          queue.push_back(u);
          out.push_back({u, dist[u]});
        }
      }
    }
    return out;
  }

  // Descending degree; ties follow BFS discovery from the first vertex of
  // maximum degree so that consecutive choices constrain each other.
  std::vector<Vertex> search_order(const std::vector<Vertex>& vertices) const {
    Vertex root = vertices.front();
    for (Vertex v : vertices) {
      if (g_.degree(v) > g_.degree(root)) root = v;
    }
    std::vector<int> rank(g_.order(), std::numeric_limits<int>::max());
    std::vector<Vertex> queue{root};
    rank[root] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (Vertex u : g_.neighbors(queue[head])) {
        if (rank[u] == std::numeric_limits<int>::max()) {
          rank[u] = static_cast<int>(queue.size());
          queue.push_back(u);
        }
      }
    }
    std::vector<Vertex> order = vertices;
    std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
      if (g_.degree(a) != g_.degree(b)) return g_.degree(a) > g_.degree(b);
      return rank[a] < rank[b];
    });
    return order;
  }

  bool assign(std::size_t pos) {
    if (pos == order_.size()) return true;
    const Vertex v = order_[pos];
    PackingColoring& out = *assignment_;
    for (int c = 1; c <= k_; ++c) {
      const std::uint64_t bit = 1ULL << c;
      if (!(domain_[v] & bit)) continue;
      const int group = group_of_[c];
      const int slot = c - group_start_[group];
      if (slot > opened_[group]) continue;
      if (++nodes_ > budget_) {
        exhausted_ = true;
        return false;
      }

      const std::size_t mark = trail_.size();
      bool wipeout = false;
      const int radius = seq_.distance(c);
      for (const auto& [u, d] : balls_[v]) {
        if (d > radius) break;
        if (out[u] != PackingColoring::uncolored || !(domain_[u] & bit)) continue;
        domain_[u] &= ~bit;
        trail_.push_back({u, bit});
        if (domain_[u] == 0) {
          wipeout = true;
          break;
        }
      }
      const bool opens = slot == opened_[group];
      if (opens) ++opened_[group];
      out.assign(v, c);

      if (!wipeout && assign(pos + 1)) return true;

      out.clear(v);
      if (opens) --opened_[group];
      while (trail_.size() > mark) {
        domain_[trail_.back().first] |= trail_.back().second;
        trail_.pop_back();
      }
      if (exhausted_) return false;
    }
    return false;
  }

  const Graph& g_;
  const PackingSequence& seq_;
  int k_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;

  std::vector<int> group_of_;
  std::vector<int> group_start_;
  std::vector<std::vector<Near>> balls_;
  std::vector<Vertex> order_;
  std::vector<std::uint64_t> domain_;
  std::vector<int> opened_;
  std::vector<std::pair<Vertex, std::uint64_t>> trail_;
  PackingColoring* assignment_ = nullptr;
};

}  // namespace detail

/// Exact decision of S-packing colourability. Components are solved
/// independently (they never constrain each other) and share one node
/// budget; `infeasible` is only reported after a complete search.
inline ColorResult decide_colorable(const Graph& g, const PackingSequence& seq,
                                    std::uint64_t budget = kDefaultBudget) {
  ColorResult result;
  result.coloring = PackingColoring(g.order());
  detail::PackingSearch search(g, seq, budget);
  for (const auto& comp : connected_components(g)) {
    if (!search.solve(comp, result.coloring)) {
      result.nodes = search.nodes();
      result.verdict = search.exhausted() ? ColorResult::Verdict::budget_exhausted
                                          : ColorResult::Verdict::infeasible;
      result.coloring = PackingColoring(g.order());
      return result;
    }
  }
  result.nodes = search.nodes();
  result.verdict = ColorResult::Verdict::feasible;
  return result;
}

inline constexpr double kBruteForceLimit = 1e8;

/// Ground-truth oracle: tries every total assignment against Floyd-Warshall
/// distances. Refuses instances with k^n above 1e8.
inline bool brute_force_colorable(const Graph& g, const PackingSequence& seq) {
  const int n = g.order();
  const int k = seq.size();
  double space = 1;
  for (int i = 0; i < n; ++i) {
    space *= k;
    if (space > kBruteForceLimit) {
      throw Error(Errc::too_large, std::to_string(k) + "^" + std::to_string(n) + " assignments");
    }
  }
  constexpr int inf = std::numeric_limits<int>::max() / 4;
  std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
  for (int v = 0; v < n; ++v) {
    d[v][v] = 0;
    for (Vertex u : g.neighbors(v)) d[v][u] = 1;
  }
  for (int m = 0; m < n; ++m) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][m] + d[m][j]);
    }
  }

  std::vector<int> cls(n, 1);
  for (;;) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x) {
      for (int y = x + 1; y < n; ++y) {
        if (cls[x] == cls[y] && d[x][y] <= seq.distance(cls[x])) {
          ok = false;
          break;
        }
      }
    }
    if (ok) return true;
    int i = 0;
    while (i < n && cls[i] == k) cls[i++] = 1;
    if (i == n) return false;
    ++cls[i];
  }
}

}  // namespace subpack
