#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "subpack/graph.hpp"

namespace subpack {

/// Integer weights of the independent-set objective
///   phi(T) = x1 |X1(T)| + x0 |X0(T)| + y |Y(T)|
/// where X1 holds the 3-vertices of T with a degree-3 neighbour, X0 the
/// other 3-vertices of T and Y its 2-vertices. The defaults are the ratios
/// 1 : 0.7 : 0.35 scaled by 20.
struct PhiWeights {
  long long x1 = 20;
  long long x0 = 14;
  long long y = 7;

  /// Weights proportional to 1 : alpha : beta, scaled to integers by the
  /// least common denominator.
  static PhiWeights from_alpha_beta(Rational alpha, Rational beta) {
    if (alpha.num <= 0 || beta.num <= 0) {
      throw Error(Errc::precondition, "phi weights must be positive");
    }
    const long long scale = std::lcm(alpha.den, beta.den);
    return {scale, alpha.num * (scale / alpha.den), beta.num * (scale / beta.den)};
  }

  std::string str() const {
    return std::to_string(x1) + ":" + std::to_string(x0) + ":" + std::to_string(y);
  }

  friend bool operator==(const PhiWeights&, const PhiWeights&) = default;
};

enum class IsMode { exact, exchange, automatic };

/// Node limit of one exact search. `IsMode::automatic` drops to exchange
/// mode when a component exceeds it.
inline constexpr std::uint64_t kExactIsBudget = 20'000'000;

struct WeightedIS {
  std::vector<Vertex> members;  // sorted
  std::vector<Vertex> x1;
  std::vector<Vertex> x0;
  std::vector<Vertex> y;
  long long phi_scaled = 0;
  int theta = 0;  // complement components that are a 2-vertex joined to a 3-vertex

  bool contains(Vertex v) const { return std::binary_search(members.begin(), members.end(), v); }
};

inline bool has_degree3_neighbor(const Graph& g, Vertex v) {
  for (Vertex u : g.neighbors(v)) {
    if (g.degree(u) == 3) return true;
  }
  return false;
}

inline long long vertex_weight(const Graph& g, Vertex v, const PhiWeights& w) {
  if (g.degree(v) == 3) return has_degree3_neighbor(g, v) ? w.x1 : w.x0;
  return w.y;
}

/// Components of G - T consisting of exactly two adjacent vertices of
/// degrees 2 and 3.
inline int count_p2_paths(const Graph& g, const std::vector<char>& in_set) {
  int count = 0;
  for (int v = 0; v < g.order(); ++v) {
    if (in_set[v] || g.degree(v) != 2) continue;
    std::vector<Vertex> out;
    for (Vertex u : g.neighbors(v)) {
      if (!in_set[u]) out.push_back(u);
    }
    if (out.size() != 1 || g.degree(out[0]) != 3) continue;
    int partner_out = 0;
    for (Vertex u : g.neighbors(out[0])) partner_out += in_set[u] ? 0 : 1;
    if (partner_out == 1) ++count;
  }
  return count;
}

/// Fills the X1/X0/Y split, phi and theta for an independent set.
inline WeightedIS evaluate_is(const Graph& g, std::vector<Vertex> members, const PhiWeights& w = {}) {
  std::sort(members.begin(), members.end());
  std::vector<char> in_set(g.order(), 0);
  for (Vertex v : members) in_set[v] = 1;
  WeightedIS out;
  for (Vertex v : members) {
    for (Vertex u : g.neighbors(v)) {
      if (in_set[u]) {
        throw Error(Errc::precondition,
                    "set is not independent: " + std::to_string(v) + "-" + std::to_string(u));
      }
    }
    if (g.degree(v) == 3) {
      (has_degree3_neighbor(g, v) ? out.x1 : out.x0).push_back(v);
    } else {
      out.y.push_back(v);
    }
    out.phi_scaled += vertex_weight(g, v, w);
  }
  out.theta = count_p2_paths(g, in_set);
  out.members = std::move(members);
  return out;
}

/// Strict preference: larger phi, then smaller theta, then the
/// lexicographically smaller sorted member list.
inline bool better_is(const WeightedIS& a, const WeightedIS& b) {
  if (a.phi_scaled != b.phi_scaled) return a.phi_scaled > b.phi_scaled;
  if (a.theta != b.theta) return a.theta < b.theta;
  return a.members < b.members;
}

/// Sets reachable from `members` by one exchange: add an independent set A
/// of outside vertices and remove the members adjacent to A. A ranges over
/// single vertices, pairs at distance at most three, and triples whose other
/// two vertices are within distance two of the first. These include the
/// swaps N(u) -> u, x -> {u, v} and N(v) u N(w) -> {u, v, w}.
inline std::vector<std::vector<Vertex>> exchange_candidates(const Graph& g,
                                                            const std::vector<Vertex>& members) {
  const int n = g.order();
  std::vector<char> in_set(n, 0);
  for (Vertex v : members) in_set[v] = 1;

  auto ball = [&](Vertex s, int radius) {
    std::vector<Vertex> out;
    std::vector<int> dist(n, -1);
    std::vector<Vertex> queue{s};
    dist[s] = 0;
    for (std::size_t h = 0; h < queue.size(); ++h) {
      const Vertex v = queue[h];
      if (dist[v] == radius) continue;
      for (Vertex u : g.neighbors(v)) {
        if (dist[u] < 0) {
          dist[u] = dist[v] + 1;
          queue.push_back(u);
          out.push_back(u);
        }
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  };

  auto apply = [&](const std::vector<Vertex>& add) {
    std::vector<char> next = in_set;
    for (Vertex a : add) {
      for (Vertex u : g.neighbors(a)) next[u] = 0;
    }
    for (Vertex a : add) next[a] = 1;
    std::vector<Vertex> out;
    for (int v = 0; v < n; ++v) {
      if (next[v]) out.push_back(v);
    }
    return out;
  };

  std::vector<std::vector<Vertex>> out;
  for (int u = 0; u < n; ++u) {
    if (in_set[u]) continue;
    out.push_back(apply({u}));
    const auto near3 = ball(u, 3);
    for (Vertex v : near3) {
      if (v <= u || in_set[v] || g.adjacent(u, v)) continue;
      out.push_back(apply({u, v}));
    }
    const auto near2 = ball(u, 2);
    for (std::size_t i = 0; i < near2.size(); ++i) {
      const Vertex v = near2[i];
      if (in_set[v] || g.adjacent(u, v)) continue;
      for (std::size_t j = i + 1; j < near2.size(); ++j) {
        const Vertex w = near2[j];
        if (in_set[w] || g.adjacent(u, w) || g.adjacent(v, w)) continue;
        out.push_back(apply({u, v, w}));
      }
    }
  }
  return out;
}

namespace detail {

inline void check_is_preconditions(const Graph& g) {
  if (g.max_degree() > 3) throw Error(Errc::precondition, "weighted independent set needs a subcubic graph");
  if (g.order() > 1 && g.min_degree() < 2) {
    throw Error(Errc::precondition, "weighted independent set needs minimum degree two");
  }
}

// Branch and bound over vertices in index order. With `all` set, every set
// reaching the best phi is kept; otherwise only the best under better_is().
inline std::vector<WeightedIS> exact_search(const Graph& g, const PhiWeights& w, std::uint64_t budget, bool all,
                                            std::size_t cap = 1) {
  const int n = g.order();
  std::vector<long long> weight(n);
  for (int v = 0; v < n; ++v) weight[v] = vertex_weight(g, v, w);
  std::vector<int> blocked(n, 0);
  std::vector<Vertex> chosen;
  long long phi = 0;
  long long best_phi = -1;
  std::uint64_t nodes = 0;
  std::vector<WeightedIS> found;

  auto dfs = [&](auto&& self, int i) -> void {
    if (++nodes > budget) {
      throw Error(Errc::budget, "exact weighted independent set exceeded " + std::to_string(budget) + " nodes");
    }
    if (i == n) {
      if (phi < best_phi) return;
      WeightedIS cand = evaluate_is(g, chosen, w);
      if (phi > best_phi) {
        found.clear();
        best_phi = phi;
      }
      if (all) {
        if (found.size() < cap) found.push_back(std::move(cand));
      } else if (found.empty() || better_is(cand, found[0])) {
        found.assign(1, std::move(cand));
      }
      return;
    }
    long long bound = phi;
    for (int j = i; j < n; ++j) {
      if (!blocked[j]) bound += weight[j];
    }
    if (bound < best_phi) return;
    if (!blocked[i]) {
      chosen.push_back(i);
      phi += weight[i];
      for (Vertex u : g.neighbors(i)) ++blocked[u];
      self(self, i + 1);
      for (Vertex u : g.neighbors(i)) --blocked[u];
      phi -= weight[i];
      chosen.pop_back();
    }
    self(self, i + 1);
  };
  dfs(dfs, 0);
  return found;
}

inline WeightedIS exact_weighted_is(const Graph& g, const PhiWeights& w, std::uint64_t budget) {
  return exact_search(g, w, budget, false).front();
}

inline WeightedIS exchange_weighted_is(const Graph& g, const PhiWeights& w) {
  const int n = g.order();
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
    return vertex_weight(g, a, w) > vertex_weight(g, b, w);
  });
  std::vector<char> blocked(n, 0);
  std::vector<Vertex> start;
  for (Vertex v : order) {
    if (blocked[v]) continue;
    start.push_back(v);
    blocked[v] = 1;
    for (Vertex u : g.neighbors(v)) blocked[u] = 1;
  }
  WeightedIS current = evaluate_is(g, start, w);
  for (bool improved = true; improved;) {
    improved = false;
    for (auto& cand : exchange_candidates(g, current.members)) {
      WeightedIS next = evaluate_is(g, std::move(cand), w);
      if (next.phi_scaled > current.phi_scaled ||
          (next.phi_scaled == current.phi_scaled && next.theta < current.theta)) {
        current = std::move(next);
        improved = true;
        break;
      }
    }
  }
  return current;
}

}  // namespace detail

/// Independent set maximising phi and, among maximisers, minimising theta;
/// remaining ties go to the lexicographically smallest member list. Exact
/// mode is branch and bound; exchange mode climbs with
/// exchange_candidates() from a greedy start and is only locally optimal.
inline WeightedIS max_weighted_is(const Graph& g, const PhiWeights& w = {}, IsMode mode = IsMode::automatic,
                                  std::uint64_t budget = kExactIsBudget) {
  detail::check_is_preconditions(g);
  if (mode == IsMode::automatic) {
    try {
      return detail::exact_weighted_is(g, w, budget);
    } catch (const Error& e) {
      if (e.code() != Errc::budget) throw;
      return detail::exchange_weighted_is(g, w);
    }
  }
  return mode == IsMode::exact ? detail::exact_weighted_is(g, w, budget) : detail::exchange_weighted_is(g, w);
}

/// Independent sets maximising phi and, among those, minimising theta,
/// sorted by member list. Exhaustive, but only the first `cap` maximisers of
/// phi met by the search are kept. Isolated vertices allowed.
inline std::vector<WeightedIS> all_optimal_is(const Graph& g, const PhiWeights& w = {},
                                              std::uint64_t budget = kExactIsBudget, std::size_t cap = 4096) {
  if (g.max_degree() > 3) throw Error(Errc::precondition, "weighted independent set needs a subcubic graph");
  auto found = detail::exact_search(g, w, budget, true, cap);
  int theta = found.front().theta;
  for (const auto& s : found) theta = std::min(theta, s.theta);
  std::erase_if(found, [&](const WeightedIS& s) { return s.theta != theta; });
  std::sort(found.begin(), found.end(), [](const WeightedIS& a, const WeightedIS& b) { return a.members < b.members; });
  return found;
}

}  // namespace subpack
