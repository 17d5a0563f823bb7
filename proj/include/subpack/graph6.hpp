#pragma once

#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "subpack/graph.hpp"

namespace subpack {

// graph6: the vertex count in one byte (n <= 62) or '~' plus three bytes
// (n <= 258047), then the upper triangle of the adjacency matrix in column
// order, six bits per byte, each byte offset by 63.

namespace detail {

inline constexpr int kGraph6Offset = 63;
inline constexpr int kGraph6ShortMax = 62;
inline constexpr int kGraph6LongMax = 258047;

inline std::string_view trim_line(std::string_view s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ')) s.remove_suffix(1);
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  return s;
}

inline std::string graph6_size_prefix(int n) {
  std::string out;
  if (n <= kGraph6ShortMax) {
    out.push_back(static_cast<char>(n + kGraph6Offset));
  } else if (n <= kGraph6LongMax) {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(((n >> shift) & 0x3f) + kGraph6Offset));
    }
  } else {
    throw Error(Errc::too_large, "graph6 emission limited to n <= 258047");
  }
  return out;
}

}  // namespace detail

inline Graph parse_graph6(std::string_view line) {
  using detail::kGraph6Offset;
  line = detail::trim_line(line);
  constexpr std::string_view header = ">>graph6<<";
  if (line.substr(0, header.size()) == header) line.remove_prefix(header.size());
  if (line.empty()) throw Error(Errc::malformed_graph6, "empty line");
  for (char ch : line) {
    if (ch < kGraph6Offset || ch > 126) {
      throw Error(Errc::malformed_graph6, "byte outside 63..126 in '" + std::string(line) + "'");
    }
  }

  std::size_t pos = 0;
  int n = 0;
  if (line[0] != '~') {
    n = line[0] - kGraph6Offset;
    pos = 1;
  } else {
    if (line.size() < 4 || line[1] == '~') {
      throw Error(Errc::malformed_graph6, "unsupported or truncated long form");
    }
    for (int i = 1; i <= 3; ++i) n = (n << 6) | (line[i] - kGraph6Offset);
    pos = 4;
  }

  const std::size_t bits = static_cast<std::size_t>(n) * (n > 0 ? n - 1 : 0) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  if (line.size() - pos != bytes) {
    throw Error(Errc::malformed_graph6, "expected " + std::to_string(bytes) + " data bytes for n=" +
                                            std::to_string(n) + ", got " +
                                            std::to_string(line.size() - pos));
  }

  std::vector<Edge> edges;
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int byte = line[pos + k / 6] - kGraph6Offset;
      if (byte & (1 << (5 - static_cast<int>(k % 6)))) edges.emplace_back(i, j);
    }
  }
  for (; k < bytes * 6; ++k) {
    const int byte = line[pos + k / 6] - kGraph6Offset;
    if (byte & (1 << (5 - static_cast<int>(k % 6)))) {
      throw Error(Errc::malformed_graph6, "non-zero padding bits");
    }
  }
  return build_graph(n, edges);
}

inline std::string emit_graph6(const Graph& g) {
  using detail::kGraph6Offset;
  const int n = g.order();
  std::string out = detail::graph6_size_prefix(n);
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
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

/// Plain-text edge list: "n m" on the first line, then m lines "u v".
inline Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  long long n = -1, m = -1;
  if (!(in >> n >> m) || n < 0 || m < 0) {
    throw Error(Errc::malformed_edge_list, "missing or invalid 'n m' header");
  }
  std::vector<Edge> edges;
  for (long long i = 0; i < m; ++i) {
    long long u = 0, v = 0;
    if (!(in >> u >> v)) {
      throw Error(Errc::malformed_edge_list, "expected " + std::to_string(m) + " edges, got " +
                                                 std::to_string(i));
    }
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  std::string rest;
  if (in >> rest) throw Error(Errc::malformed_edge_list, "trailing content '" + rest + "'");
  return build_graph(static_cast<int>(n), edges);
}

inline std::string emit_edge_list(const Graph& g) {
  std::string out = std::to_string(g.order()) + " " + std::to_string(g.size()) + "\n";
  for (const auto& [u, v] : g.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

}  // namespace subpack
