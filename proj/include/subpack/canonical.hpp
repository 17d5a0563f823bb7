#pragma once

#include <algorithm>
#include <string>
#include <tuple>
#include <vector>

#include "subpack/graph.hpp"
#include "subpack/graph6.hpp"

namespace subpack {

/// Canonical labelling: `code` is the graph6 string of the relabelled graph
/// and `labeling[v]` the canonical index of vertex v. Two graphs are
/// isomorphic iff their codes are equal.
struct CanonicalForm {
  std::string code;
  std::vector<int> labeling;
};

namespace detail {

using Partition = std::vector<std::vector<Vertex>>;

// Equitable refinement. Each cell is split by the sorted multiset of cell
// indices of its members' neighbours; sub-cells are ordered by that
// signature, so the result depends only on the isomorphism type of
// (graph, ordered partition).
inline Partition refine(const Graph& g, Partition p) {
  std::vector<int> cell_of(g.order());
  std::vector<std::pair<std::vector<int>, Vertex>> sig;
  for (;;) {
    for (std::size_t c = 0; c < p.size(); ++c) {
      for (Vertex v : p[c]) cell_of[v] = static_cast<int>(c);
    }
    Partition next;
    next.reserve(p.size());
    bool split = false;
    for (auto& cell : p) {
      if (cell.size() == 1) {
        next.push_back(std::move(cell));
        continue;
      }
      sig.clear();
      for (Vertex v : cell) {
        std::vector<int> s;
        s.reserve(g.degree(v));
        for (Vertex u : g.neighbors(v)) s.push_back(cell_of[u]);
        std::sort(s.begin(), s.end());
        sig.emplace_back(std::move(s), v);
      }
      std::sort(sig.begin(), sig.end());
      std::size_t start = 0;
      for (std::size_t i = 1; i <= sig.size(); ++i) {
        if (i == sig.size() || sig[i].first != sig[start].first) {
          std::vector<Vertex> sub;
          for (std::size_t k = start; k < i; ++k) sub.push_back(sig[k].second);
          next.push_back(std::move(sub));
          start = i;
        }
      }
      if (next.back().size() != cell.size()) split = true;
    }
    p = std::move(next);
    if (!split) return p;
  }
}

// Upper-triangle bits of the graph read in the order given by `inverse`
// (inverse[i] = vertex placed at canonical index i), graph6-encoded.
inline std::string code_for_order(const Graph& g, const std::vector<Vertex>& inverse) {
  const int n = g.order();
  std::string out = graph6_size_prefix(n);
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(inverse[i], inverse[j]) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kGraph6Offset));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kGraph6Offset));
  return out;
}

struct CanonSearch {
  const Graph& g;
  bool have = false;
  std::string best;
  std::vector<Vertex> best_inverse;

  void run(Partition p) {
    p = refine(g, std::move(p));
    if (static_cast<int>(p.size()) == g.order()) {
      std::vector<Vertex> inverse;
      inverse.reserve(p.size());
      for (const auto& cell : p) inverse.push_back(cell.front());
      std::string code = code_for_order(g, inverse);
      if (!have || code < best) {
        have = true;
        best = std::move(code);
        best_inverse = std::move(inverse);
      }
      return;
    }
    std::size_t target = p.size();
    for (std::size_t c = 0; c < p.size(); ++c) {
      if (p[c].size() > 1 && (target == p.size() || p[c].size() < p[target].size())) target = c;
    }
    for (Vertex v : p[target]) {
      Partition q;
      q.reserve(p.size() + 1);
      for (std::size_t c = 0; c < p.size(); ++c) {
        if (c != target) {
          q.push_back(p[c]);
          continue;
        }
        q.push_back({v});
        std::vector<Vertex> rest;
        for (Vertex u : p[c]) {
          if (u != v) rest.push_back(u);
        }
        q.push_back(std::move(rest));
      }
      run(std::move(q));
    }
  }
};

// Canonical order of a connected graph (inverse permutation).
inline std::vector<Vertex> canonical_order_connected(const Graph& g) {
  if (g.order() <= 1) return std::vector<Vertex>(g.order(), 0);
  CanonSearch search{g, false, {}, {}};
  Partition unit(1);
  for (int v = 0; v < g.order(); ++v) unit[0].push_back(v);
  search.run(std::move(unit));
  return search.best_inverse;
}

}  // namespace detail

/// Refinement plus individualisation over every branch, keeping the
/// lexicographically least leaf code. Components are canonicalised
/// separately and concatenated in (size, code) order.
inline CanonicalForm canonical_form(const Graph& g) {
  const auto comps = connected_components(g);
  struct Piece {
    int size;
    std::string code;
    std::vector<Vertex> inverse;  // parent indices in canonical order
  };
  std::vector<Piece> pieces;
  pieces.reserve(comps.size());
  for (const auto& comp : comps) {
    auto sub = induced_subgraph(g, comp);
    auto local = detail::canonical_order_connected(sub.graph);
    Piece piece{static_cast<int>(comp.size()), detail::code_for_order(sub.graph, local), {}};
    for (Vertex v : local) piece.inverse.push_back(sub.origin[v]);
    pieces.push_back(std::move(piece));
  }
  std::sort(pieces.begin(), pieces.end(), [](const Piece& a, const Piece& b) {
    return std::tie(a.size, a.code) < std::tie(b.size, b.code);
  });

  CanonicalForm out;
  out.labeling.assign(g.order(), 0);
  std::vector<Vertex> inverse;
  inverse.reserve(g.order());
  for (const auto& piece : pieces) {
    for (Vertex v : piece.inverse) {
      out.labeling[v] = static_cast<int>(inverse.size());
      inverse.push_back(v);
    }
  }
  out.code = emit_graph6(relabel(g, out.labeling));
  return out;
}

inline std::string canonical_code(const Graph& g) { return canonical_form(g).code; }

inline Graph canonical_graph(const Graph& g) { return parse_graph6(canonical_code(g)); }

inline bool is_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  return canonical_code(a) == canonical_code(b);
}

/// An isomorphism a -> b as a vertex map, or empty when none exists.
inline std::vector<Vertex> find_isomorphism(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return {};
  const auto ca = canonical_form(a);
  const auto cb = canonical_form(b);
  if (ca.code != cb.code) return {};
  std::vector<Vertex> b_at(b.order());
  for (int v = 0; v < b.order(); ++v) b_at[cb.labeling[v]] = v;
  std::vector<Vertex> map(a.order());
  for (int v = 0; v < a.order(); ++v) map[v] = b_at[ca.labeling[v]];
  return map;
}

}  // namespace subpack
