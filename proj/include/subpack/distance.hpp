#pragma once

#include <limits>
#include <vector>

#include "subpack/graph.hpp"

namespace subpack {

/// Hop distances from `source`; unreachable vertices get `unreachable`.
inline std::vector<int> bfs_distances(const Graph& g, Vertex source,
                                      int unreachable = std::numeric_limits<int>::max()) {
  std::vector<int> dist(g.order(), unreachable);
  std::vector<Vertex> queue{source};
  dist[source] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex v = queue[head];
    for (Vertex u : g.neighbors(v)) {
      if (dist[u] == unreachable) {
        dist[u] = dist[v] + 1;
        queue.push_back(u);
      }
    }
  }
  return dist;
}

/// All-pairs hop distances. Pairs in different components hold
/// `unreachable`, which exceeds every finite distance, so any packing
/// constraint between them is satisfied.
class DistanceMatrix {
 public:
  static constexpr int unreachable = std::numeric_limits<int>::max();

  DistanceMatrix() = default;

  explicit DistanceMatrix(const Graph& g) : n_(g.order()), d_(static_cast<std::size_t>(n_) * n_) {
    for (int s = 0; s < n_; ++s) {
      const auto row = bfs_distances(g, s, unreachable);
      std::copy(row.begin(), row.end(), d_.begin() + static_cast<std::ptrdiff_t>(s) * n_);
    }
  }

  int order() const noexcept { return n_; }
  int operator()(Vertex u, Vertex v) const { return d_[static_cast<std::size_t>(u) * n_ + v]; }

  int eccentricity(Vertex v) const {
    int best = 0;
    for (int u = 0; u < n_; ++u) best = std::max(best, (*this)(v, u));
    return best;
  }

 private:
  int n_ = 0;
  std::vector<int> d_;
};

inline DistanceMatrix all_pairs_distances(const Graph& g) { return DistanceMatrix(g); }

}  // namespace subpack
