#pragma once

#include <fstream>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <string>
#include <vector>

#include "subpack/canonical.hpp"
#include "subpack/graph6.hpp"

namespace subpack {

inline constexpr int kEnumerationLimit = 12;

namespace detail {

struct EnumerationCache {
  std::mutex mutex;
  std::map<int, std::shared_ptr<const std::vector<Graph>>> levels;
};

inline EnumerationCache& enumeration_cache() {
  static EnumerationCache cache;
  return cache;
}

// Each connected graph on n vertices minus a non-cut vertex is connected on
// n-1 vertices, so joining a new vertex to every 1..3-subset of unsaturated
// vertices of each smaller representative reaches every class.
inline std::vector<Graph> grow(const std::vector<Graph>& previous, int n) {
  std::set<std::string> codes;
  for (const Graph& g : previous) {
    std::vector<Vertex> open;
    for (int v = 0; v < g.order(); ++v) {
      if (g.degree(v) < 3) open.push_back(v);
    }
    auto base = g.adjacency();
    base.emplace_back();
    const int k = static_cast<int>(open.size());
    for (int mask = 1; mask < (1 << k); ++mask) {
      if (__builtin_popcount(static_cast<unsigned>(mask)) > 3) continue;
      auto adj = base;
      for (int i = 0; i < k; ++i) {
        if (mask >> i & 1) {
          adj[open[i]].push_back(n - 1);
          adj[n - 1].push_back(open[i]);
        }
      }
      codes.insert(canonical_code(Graph(std::move(adj))));
    }
  }
  std::vector<Graph> out;
  out.reserve(codes.size());
  for (const auto& c : codes) out.push_back(parse_graph6(c));
  return out;
}

}  // namespace detail

/// One canonical representative of every connected graph on n vertices with
/// maximum degree at most 3, ordered by canonical code. Results are cached
/// and shared across threads. Throws TOO_LARGE above n = 12.
inline std::shared_ptr<const std::vector<Graph>> enumerate_subcubic(int n) {
  if (n < 1) throw Error(Errc::precondition, "enumeration needs n >= 1");
  if (n > kEnumerationLimit) {
    throw Error(Errc::too_large, "enumeration limited to n <= " + std::to_string(kEnumerationLimit));
  }
  auto& cache = detail::enumeration_cache();
  std::lock_guard lock(cache.mutex);
  for (int level = 1; level <= n; ++level) {
    if (cache.levels.count(level)) continue;
    std::vector<Graph> graphs;
    if (level == 1) {
      graphs.push_back(build_graph(1, {}));
    } else {
      graphs = detail::grow(*cache.levels.at(level - 1), level);
    }
    cache.levels[level] = std::make_shared<const std::vector<Graph>>(std::move(graphs));
  }
  return cache.levels.at(n);
}

/// All graphs of enumerate_subcubic(1..nmax), by order then code.
inline std::vector<Graph> enumerate_up_to(int nmax) {
  std::vector<Graph> out;
  for (int n = 1; n <= nmax; ++n) {
    const auto level = enumerate_subcubic(n);
    out.insert(out.end(), level->begin(), level->end());
  }
  return out;
}

/// Reads one graph6 line per graph; blank lines are skipped. Throws IO and
/// MALFORMED_GRAPH6 (with the line number).
inline std::vector<Graph> ingest_graph6(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::io, "cannot open '" + path + "'");
  std::vector<Graph> out;
  std::string line;
  for (int number = 1; std::getline(in, line); ++number) {
    if (detail::trim_line(line).empty()) continue;
    try {
      out.push_back(parse_graph6(line));
    } catch (const Error& e) {
      throw Error(e.code(), path + ":" + std::to_string(number) + ": " + e.what());
    }
  }
  if (in.bad()) throw Error(Errc::io, "read error on '" + path + "'");
  return out;
}

}  // namespace subpack
