#pragma once

#include <charconv>
#include <string>
#include <string_view>
#include <vector>

#include "subpack/distance.hpp"
#include "subpack/graph.hpp"
#include "subpack/sequence.hpp"

namespace subpack {

/// Vertex -> class map with classes 1..k; 0 marks an uncoloured vertex.
class PackingColoring {
 public:
  static constexpr int uncolored = 0;

  PackingColoring() = default;
  explicit PackingColoring(int n) : classes_(static_cast<std::size_t>(n), uncolored) {}
  explicit PackingColoring(std::vector<int> classes) : classes_(std::move(classes)) {}

  int size() const noexcept { return static_cast<int>(classes_.size()); }
  int operator[](Vertex v) const { return classes_[v]; }
  void assign(Vertex v, int cls) { classes_[v] = cls; }
  void clear(Vertex v) { classes_[v] = uncolored; }
  const std::vector<int>& classes() const noexcept { return classes_; }

  bool is_total() const {
    for (int c : classes_) {
      if (c == uncolored) return false;
    }
    return true;
  }

  /// "v:class" pairs, comma separated, uncoloured vertices omitted.
  std::string certificate() const {
    std::string out;
    for (int v = 0; v < size(); ++v) {
      if (classes_[v] == uncolored) continue;
      if (!out.empty()) out += ",";
      out += std::to_string(v) + ":" + std::to_string(classes_[v]);
    }
    return out;
  }

  /// Inverse of certificate(). With n < 0 the size is one past the largest
  /// vertex mentioned.
  static PackingColoring parse_certificate(std::string_view text, int n = -1) {
    std::vector<std::pair<int, int>> pairs;
    std::string token;
    auto flush = [&] {
      if (token.empty()) return;
      const auto colon = token.find(':');
      int v = -1, c = -1;
      if (colon == std::string::npos ||
          std::from_chars(token.data(), token.data() + colon, v).ec != std::errc() ||
          std::from_chars(token.data() + colon + 1, token.data() + token.size(), c).ec != std::errc() ||
          v < 0) {
        throw Error(Errc::precondition, "bad certificate entry '" + token + "'");
      }
      pairs.emplace_back(v, c);
      token.clear();
    };
    for (char ch : text) {
      if (ch == ',' || ch == '\n' || ch == ' ' || ch == '\r' || ch == '\t') {
        flush();
      } else {
        token.push_back(ch);
      }
    }
    flush();
    int size = n;
    if (size < 0) {
      size = 0;
      for (const auto& [v, c] : pairs) size = std::max(size, v + 1);
    }
    PackingColoring out(size);
    for (const auto& [v, c] : pairs) {
      if (v >= size) throw Error(Errc::precondition, "certificate vertex " + std::to_string(v) + " >= n");
      if (out[v] != uncolored) {
        throw Error(Errc::precondition, "vertex " + std::to_string(v) + " listed twice");
      }
      out.assign(v, c);
    }
    return out;
  }

  friend bool operator==(const PackingColoring&, const PackingColoring&) = default;

 private:
  std::vector<int> classes_;
};

/// Two same-class vertices closer than the class allows.
struct Violation {
  Vertex x;
  Vertex y;
  int cls;
  int dist;

  friend bool operator==(const Violation&, const Violation&) = default;
};

namespace detail {

inline void check_classes(const PackingSequence& seq, const PackingColoring& c, int n, bool total) {
  if (c.size() != n) {
    throw Error(Errc::partial_coloring,
                "coloring covers " + std::to_string(c.size()) + " of " + std::to_string(n) + " vertices");
  }
  for (int v = 0; v < n; ++v) {
    if (c[v] == PackingColoring::uncolored) {
      if (total) throw Error(Errc::partial_coloring, "vertex " + std::to_string(v) + " uncoloured");
      continue;
    }
    if (c[v] < 1 || c[v] > seq.size()) {
      throw Error(Errc::class_out_of_range,
                  "vertex " + std::to_string(v) + " has class " + std::to_string(c[v]));
    }
  }
}

inline std::vector<Violation> collect_violations(const DistanceMatrix& d, const PackingSequence& seq,
                                                 const PackingColoring& c) {
  std::vector<Violation> out;
  const int n = d.order();
  for (int x = 0; x < n; ++x) {
    if (c[x] == PackingColoring::uncolored) continue;
    for (int y = x + 1; y < n; ++y) {
      if (c[y] != c[x]) continue;
      const int need = seq.distance(c[x]) + 1;
      if (d(x, y) < need) out.push_back({x, y, c[x], d(x, y)});
    }
  }
  return out;
}

}  // namespace detail

/// Empty result iff `c` is a valid S-packing colouring. The colouring must
/// be total with classes in 1..k.
inline std::vector<Violation> verify_coloring(const DistanceMatrix& d, const PackingSequence& seq,
                                              const PackingColoring& c) {
  detail::check_classes(seq, c, d.order(), true);
  return detail::collect_violations(d, seq, c);
}

inline std::vector<Violation> verify_coloring(const Graph& g, const PackingSequence& seq,
                                              const PackingColoring& c) {
  detail::check_classes(seq, c, g.order(), true);
  return detail::collect_violations(DistanceMatrix(g), seq, c);
}

/// Same check over the coloured vertices only.
inline std::vector<Violation> verify_partial(const DistanceMatrix& d, const PackingSequence& seq,
                                             const PackingColoring& c) {
  detail::check_classes(seq, c, d.order(), false);
  return detail::collect_violations(d, seq, c);
}

inline bool is_valid_coloring(const Graph& g, const PackingSequence& seq, const PackingColoring& c) {
  return verify_coloring(g, seq, c).empty();
}

}  // namespace subpack
