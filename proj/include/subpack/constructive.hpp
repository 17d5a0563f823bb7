#pragma once

#include <algorithm>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "subpack/canonical.hpp"
#include "subpack/classify.hpp"
#include "subpack/coloring.hpp"
#include "subpack/distance.hpp"
#include "subpack/fixtures.hpp"
#include "subpack/paths.hpp"
#include "subpack/reduction.hpp"
#include "subpack/solver.hpp"
#include "subpack/weighted_is.hpp"

namespace subpack {

/// Tally of structural facts checked while a construction runs.
struct ClaimCheck {
  std::string name;
  long long checked = 0;
  long long violated = 0;
  long long skipped = 0;
  std::string first_violation;
};

class ClaimReport {
 public:
  void record(std::string_view name, bool holds, std::string_view detail = {}) {
    auto& c = entry(name);
    ++c.checked;
    if (!holds) {
      if (c.violated++ == 0) c.first_violation = std::string(detail);
    }
  }

  void skip(std::string_view name) { ++entry(name).skipped; }

  /// Registers a check with no instances so it still shows up in reports.
  void declare(std::string_view name) { entry(name); }

  void merge(const ClaimReport& other) {
    for (const auto& c : other.checks_) {
      auto& mine = entry(c.name);
      mine.checked += c.checked;
      mine.skipped += c.skipped;
      if (mine.violated == 0 && c.violated > 0) mine.first_violation = c.first_violation;
      mine.violated += c.violated;
    }
  }

  const std::vector<ClaimCheck>& checks() const noexcept { return checks_; }

  long long violations() const {
    long long total = 0;
    for (const auto& c : checks_) total += c.violated;
    return total;
  }

  bool ok() const { return violations() == 0; }

  std::string str() const {
    std::ostringstream out;
    for (const auto& c : checks_) {
      out << c.name << ": " << c.checked << " checked, " << c.violated << " violated";
      if (c.skipped) out << ", " << c.skipped << " skipped";
      if (c.violated) out << " (first: " << c.first_violation << ")";
      out << "\n";
    }
    return out.str();
  }

 private:
  ClaimCheck& entry(std::string_view name) {
    for (auto& c : checks_) {
      if (c.name == name) return c;
    }
    checks_.push_back(ClaimCheck{std::string(name), 0, 0, 0, {}});
    return checks_.back();
  }

  std::vector<ClaimCheck> checks_;
};

namespace detail {

inline std::string list(const std::vector<Vertex>& vs) {
  std::string out = "[";
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(vs[i]);
  }
  return out + "]";
}

inline std::string pair_text(Vertex u, Vertex v) { return std::to_string(u) + "," + std::to_string(v); }

// Every pair of `set` at distance at least `least` in `d`.
inline void record_spread(ClaimReport& claims, std::string_view name, const DistanceMatrix& d,
                          const std::vector<Vertex>& set, int least) {
  for (std::size_t i = 0; i < set.size(); ++i) {
    for (std::size_t j = i + 1; j < set.size(); ++j) {
      claims.record(name, d(set[i], set[j]) >= least,
                    pair_text(set[i], set[j]) + " at distance " + std::to_string(d(set[i], set[j])));
    }
  }
}

[[noreturn]] inline void construction_failed(const std::string& why, const std::string& trace) {
  throw Error(Errc::construction_failed, why + "\n" + trace);
}

}  // namespace detail

/// Every stage of the (1,1,3,3) partition. Vertex ids in `s`, `paths`,
/// `bad` and `c1`..`c4` refer to `peel.reduced`; `coloring` is over the
/// input graph with C4 -> 1, C3 -> 2, C1 -> 3, C2 -> 4.
struct Partition1133 {
  Reduction peel;
  WeightedIS s;
  PathDecomposition paths;
  BadSetChoice bad;
  std::vector<std::pair<Vertex, Vertex>> sib_pairs;  // (member placed in C1, member placed in C2)
  std::vector<Vertex> c1, c2, c3, c4;
  PackingColoring core_coloring;
  PackingColoring coloring;
  ClaimReport claims;
  std::string fallback;  // set when S is not the first optimum

  std::string trace() const {
    std::ostringstream out;
    if (!fallback.empty()) out << "fallback: " << fallback << "\n";
    out << "core: " << peel.reduced.order() << " vertices, origin " << detail::list(peel.origin) << "\n";
    out << "S " << detail::list(s.members) << " X1 " << detail::list(s.x1) << " X0 " << detail::list(s.x0)
        << " Y " << detail::list(s.y) << " phi " << s.phi_scaled << " theta " << s.theta << "\n";
    out << "paths:";
    for (const auto& p : paths.paths) out << " " << path_type_name(p.type) << detail::list(p.vertices);
    out << "\n";
    auto bad_text = [](const BadSet& b) {
      std::string t = detail::list(b.members) + " gamma " + std::to_string(b.gamma) + " lonely " +
                      detail::list(b.lonely());
      return t;
    };
    out << "B  " << bad_text(bad.b) << "\n";
    out << "B' " << bad_text(bad.bprime) << "\n";
    out << "sib pairs:";
    for (const auto& [a, b] : sib_pairs) out << " (" << a << "," << b << ")";
    out << "\n";
    out << "C1 " << detail::list(c1) << " C2 " << detail::list(c2) << " C3 " << detail::list(c3) << " C4 "
        << detail::list(c4) << "\n";
    out << claims.str();
    return out.str();
  }
};

namespace detail {

// Maximum weighted independent set of every component of `core`.
inline WeightedIS core_independent_set(const Graph& core, const PhiWeights& w, IsMode mode) {
  std::vector<Vertex> members;
  for (const auto& comp : connected_components(core)) {
    if (comp.size() == 1) {
      members.push_back(comp[0]);
      continue;
    }
    const auto sub = induced_subgraph(core, comp);
    for (Vertex v : max_weighted_is(sub.graph, w, mode).members) members.push_back(sub.origin[v]);
  }
  return evaluate_is(core, members, w);
}

inline void check_bad_structure(const Graph& core, const DistanceMatrix& d, Partition1133& p) {
  auto& claims = p.claims;
  const auto& dec = p.paths;
  for (int v = 0; v < core.order(); ++v) {
    if (dec.role[v] == BadRole::mid3) {
      const auto sibs = bad_siblings(core, dec, v);
      claims.record("mid_bad_has_no_bad_sibling", sibs.empty(), std::to_string(v) + " has " + list(sibs));
    } else if (dec.role[v] != BadRole::none) {
      // Two bad siblings on one path are adjacent and never both in a bad set.
      const auto sibs = bad_siblings(core, dec, v);
      const bool one_path = std::all_of(sibs.begin(), sibs.end(),
                                        [&](Vertex u) { return dec.path_of[u] == dec.path_of[sibs[0]]; });
      claims.record("bad_siblings_on_at_most_one_path", one_path, std::to_string(v) + " has " + list(sibs));
    }
  }
  const auto lonely_b = p.bad.b.lonely();
  record_spread(claims, "lonely_vertices_of_B_far_apart", d, lonely_b, 4);
  claims.record("gamma_preserved_by_B_prime", p.bad.b.gamma == p.bad.bprime.gamma,
                std::to_string(p.bad.b.gamma) + " vs " + std::to_string(p.bad.bprime.gamma));
  for (Vertex v : p.bad.bprime.lonely()) {
    claims.record("lonely_vertices_of_B_prime_are_2vertices", core.degree(v) == 2, std::to_string(v));
  }

  const auto sibs = p.bad.bprime.sibs();
  std::vector<Vertex> mids;
  for (int v = 0; v < core.order(); ++v) {
    if (dec.role[v] == BadRole::mid3) mids.push_back(v);
  }
  for (std::size_t i = 0; i < sibs.size(); ++i) {
    for (std::size_t j = i + 1; j < sibs.size(); ++j) {
      if (are_siblings(core, dec, sibs[i], sibs[j])) continue;
      claims.record("non_sibling_sibs_far_apart", d(sibs[i], sibs[j]) > 3, pair_text(sibs[i], sibs[j]));
    }
  }
  record_spread(claims, "mid_bad_vertices_far_apart", d, mids, 4);
  for (Vertex m : mids) {
    for (Vertex s : sibs) claims.record("mid_bad_far_from_sibs", d(m, s) > 3, pair_text(m, s));
  }
}

// Paths, bad sets and C1..C4 on the core for a given S; no colouring.
inline Partition1133 partition_from_set(Reduction peel, WeightedIS s) {
  Partition1133 p;
  p.peel = std::move(peel);
  const Graph& core = p.peel.reduced;
  p.s = std::move(s);

  for (const char* name :
       {"complement_3vertices_nonadjacent", "mid_bad_has_no_bad_sibling", "bad_siblings_on_at_most_one_path",
        "lonely_vertices_of_B_far_apart", "gamma_preserved_by_B_prime", "lonely_vertices_of_B_prime_are_2vertices",
        "non_sibling_sibs_far_apart", "mid_bad_vertices_far_apart", "mid_bad_far_from_sibs", "sibs_pair_up",
        "sib_pair_has_member_far_from_lonely", "C1_is_3_packing", "C2_is_3_packing", "C3_is_independent"}) {
    p.claims.declare(name);
  }
  std::vector<char> in_s(core.order(), 0);
  for (Vertex v : p.s.members) in_s[v] = 1;
  for (const auto& [u, v] : core.edges()) {
    if (in_s[u] || in_s[v] || core.degree(u) != 3 || core.degree(v) != 3) continue;
    p.claims.record("complement_3vertices_nonadjacent", false, pair_text(u, v));
  }
  for (int v = 0; v < core.order(); ++v) {
    if (!in_s[v] && core.degree(v) == 3) p.claims.record("complement_3vertices_nonadjacent", true);
  }

  try {
    p.paths = decompose_paths(core, p.s.members);
  } catch (const Error& e) {
    construction_failed(e.what(), p.trace());
  }
  p.bad = best_bad_set(core, p.paths);

  const DistanceMatrix d(core);
  check_bad_structure(core, d, p);

  const auto lonely = p.bad.bprime.lonely();
  std::vector<char> placed(core.order(), 0);
  for (Vertex v : lonely) {
    p.c1.push_back(v);
    placed[v] = 1;
  }
  for (Vertex u : p.bad.bprime.sibs()) {
    if (placed[u]) continue;
    const Vertex v = p.bad.bprime.sibling_of(u);
    if (placed[v]) {
      p.claims.record("sibs_pair_up", false, std::to_string(u) + " shares sibling " + std::to_string(v));
      p.c2.push_back(u);
      placed[u] = 1;
      continue;
    }
    p.claims.record("sibs_pair_up", true);
    auto far = [&](Vertex x) {
      return std::all_of(lonely.begin(), lonely.end(), [&](Vertex l) { return d(x, l) >= 4; });
    };
    const Vertex lo = std::min(u, v);
    const Vertex hi = std::max(u, v);
    const bool lo_far = far(lo);
    const bool hi_far = far(hi);
    p.claims.record("sib_pair_has_member_far_from_lonely", lo_far || hi_far, pair_text(lo, hi));
    const Vertex in_c1 = lo_far || !hi_far ? lo : hi;
    const Vertex in_c2 = in_c1 == lo ? hi : lo;
    p.sib_pairs.emplace_back(in_c1, in_c2);
    p.c1.push_back(in_c1);
    p.c2.push_back(in_c2);
    placed[in_c1] = placed[in_c2] = 1;
  }
  for (int v = 0; v < core.order(); ++v) {
    if (p.paths.role[v] == BadRole::mid3 && !placed[v]) {
      p.c2.push_back(v);
      placed[v] = 1;
    }
  }
  for (int v = 0; v < core.order(); ++v) {
    if (in_s[v]) {
      p.c4.push_back(v);
    } else if (!placed[v]) {
      p.c3.push_back(v);
    }
  }
  std::sort(p.c1.begin(), p.c1.end());
  std::sort(p.c2.begin(), p.c2.end());

  record_spread(p.claims, "C1_is_3_packing", d, p.c1, 4);
  record_spread(p.claims, "C2_is_3_packing", d, p.c2, 4);
  record_spread(p.claims, "C3_is_independent", d, p.c3, 2);
  return p;
}

// S, paths, bad sets and C1..C4 on the core; no colouring.
inline Partition1133 build_partition(const Graph& g, const PhiWeights& w, IsMode mode) {
  Reduction peel = peel_degree_one(g);
  WeightedIS s = core_independent_set(peel.reduced, w, mode);
  return partition_from_set(std::move(peel), std::move(s));
}

inline PackingColoring partition_classes(const Partition1133& p, int c1_class, int c2_class) {
  PackingColoring c(p.peel.reduced.order());
  for (Vertex v : p.c4) c.assign(v, 1);
  for (Vertex v : p.c3) c.assign(v, 2);
  for (Vertex v : p.c1) c.assign(v, c1_class);
  for (Vertex v : p.c2) c.assign(v, c2_class);
  return c;
}

}  // namespace detail

/// (1,1,3,3)-packing colouring of a 1-saturated subcubic graph by the
/// independent-set partition. Throws NOT_IN_CLASS, or CONSTRUCTION_FAILED
/// with the full trace when a stage or the final verification fails.
inline Partition1133 partition_1133(const Graph& g, const PhiWeights& w = {}, IsMode mode = IsMode::automatic) {
  if (!in_class(g, ClassTag::sat(1))) throw Error(Errc::not_in_class, "graph is not 1-saturated subcubic");
  Partition1133 p = detail::build_partition(g, w, mode);
  const PackingSequence seq({1, 1, 3, 3});
  p.core_coloring = detail::partition_classes(p, 3, 4);
  const Graph& core = p.peel.reduced;
  const auto first_bad = verify_coloring(core, seq, p.core_coloring);
  if (!first_bad.empty() && mode != IsMode::exchange) {
    // The smallest optimum can break the sibling claims; the others are tried in order.
    std::vector<WeightedIS> optima;
    try {
      optima = all_optimal_is(core, w);
    } catch (const Error& e) {
      if (e.code() != Errc::budget) throw;
    }
    const std::string reason = "class " + std::to_string(first_bad[0].cls) + " vertices " +
                               detail::pair_text(first_bad[0].x, first_bad[0].y) + " at distance " +
                               std::to_string(first_bad[0].dist);
    p.fallback = "none of " + std::to_string(optima.size()) + " optima verifies; S " + detail::list(p.s.members) +
                 " gave " + reason;
    for (std::size_t i = 0; i < optima.size(); ++i) {
      if (optima[i].members == p.s.members) continue;
      Partition1133 q = detail::partition_from_set(p.peel, optima[i]);
      q.core_coloring = detail::partition_classes(q, 3, 4);
      if (!is_valid_coloring(q.peel.reduced, seq, q.core_coloring)) continue;
      q.fallback = "optimum " + std::to_string(i + 1) + " of " + std::to_string(optima.size()) + "; S " +
                   detail::list(p.s.members) + " gave " + reason;
      p = std::move(q);
      break;
    }
  }
  try {
    p.coloring = extend_peel(p.peel, p.core_coloring, seq);
  } catch (const Error& e) {
    detail::construction_failed(e.what(), p.trace());
  }
  const auto bad = verify_coloring(g, seq, p.coloring);
  if (!bad.empty()) {
    detail::construction_failed("class " + std::to_string(bad[0].cls) + " vertices " +
                                    detail::pair_text(bad[0].x, bad[0].y) + " at distance " +
                                    std::to_string(bad[0].dist),
                                p.trace());
  }
  return p;
}

/// Outcome of the partition scheme under other weights and a four-class
/// target sequence with two 1-classes.
struct PartitionAttempt {
  bool success = false;
  PackingColoring coloring;
  std::string failure;
};

/// Runs the partition with weights `w`, then tries C1 -> class 3, C2 ->
/// class 4 and the swapped assignment against `seq`.
inline PartitionAttempt partition_coloring(const Graph& g, const PhiWeights& w, const PackingSequence& seq) {
  if (seq.size() != 4 || seq.distance(1) != 1 || seq.distance(2) != 1) {
    throw Error(Errc::precondition, "partition target must be (1,1,a,b)");
  }
  PartitionAttempt out;
  try {
    const auto p = detail::build_partition(g, w, IsMode::automatic);
    for (const auto& [a, b] : {std::pair{3, 4}, std::pair{4, 3}}) {
      const auto core = detail::partition_classes(p, a, b);
      try {
        auto full = extend_peel(p.peel, core, seq);
        if (is_valid_coloring(g, seq, full)) {
          out.success = true;
          out.coloring = std::move(full);
          return out;
        }
      } catch (const Error&) {
      }
    }
    out.failure = "no class assignment verifies\n" + p.trace();
  } catch (const Error& e) {
    out.failure = e.what();
  }
  return out;
}

/// Result of the (1,2^4) and (1,2^5) procedures.
struct Construction {
  std::string method;
  Reduction reduction;
  PackingColoring reduced_coloring;
  PackingColoring coloring;
  ExtensionStats extension;
  ClaimReport claims;
  std::vector<std::string> notes;

  std::string trace() const {
    std::ostringstream out;
    out << method << ": reduced to " << reduction.reduced.order() << " vertices by " << reduction.log.size()
        << " steps\n";
    for (const auto& s : reduction.log) {
      out << "  " << step_name(s.kind) << " " << s.vertex << " nbrs " << detail::list(s.neighbors);
      if (s.added_edge) out << " +edge " << detail::pair_text(s.added_edge->first, s.added_edge->second);
      out << "\n";
    }
    out << "reduced colouring " << reduced_coloring.certificate() << "\n";
    out << "extension: " << extension.direct << " direct, " << extension.swapped << " swapped, "
        << extension.repaired << " repaired\n";
    for (const auto& n : notes) out << n << "\n";
    out << claims.str();
    return out.str();
  }
};

namespace detail {

inline void finish_construction(const Graph& g, const PackingSequence& seq, Construction& c) {
  try {
    c.coloring = lift_coloring(c.reduction, c.reduced_coloring, seq, ExtensionPolicy::full, &c.extension);
  } catch (const Error& e) {
    construction_failed(e.what(), c.trace());
  }
  const auto bad = verify_coloring(g, seq, c.coloring);
  if (!bad.empty()) {
    construction_failed("class " + std::to_string(bad[0].cls) + " vertices " + pair_text(bad[0].x, bad[0].y) +
                            " at distance " + std::to_string(bad[0].dist),
                        c.trace());
  }
}

inline void record_small_degree_independent(const Graph& r, ClaimReport& claims) {
  claims.declare("reduced_2vertices_nonadjacent");
  for (const auto& [u, v] : r.edges()) {
    if (r.degree(u) <= 2 && r.degree(v) <= 2) claims.record("reduced_2vertices_nonadjacent", false, pair_text(u, v));
  }
  for (int v = 0; v < r.order(); ++v) {
    if (r.degree(v) <= 2) claims.record("reduced_2vertices_nonadjacent", true);
  }
}

}  // namespace detail

/// (1,2^4)-packing colouring of a 1-saturated subcubic graph: merge
/// adjacent 2-vertices away, put every vertex of degree at most two in
/// class 1, colour the 3-vertices greedily in index order with classes
/// 2..5, then replay the merges.
inline Construction color_1sat_12e4(const Graph& g) {
  if (!in_class(g, ClassTag::sat(1))) throw Error(Errc::not_in_class, "graph is not 1-saturated subcubic");
  const PackingSequence seq({1, 2, 2, 2, 2});
  Construction c;
  c.method = "1sat-12e4";
  c.reduction = reduce_adjacent_2vertices(g);
  const Graph& r = c.reduction.reduced;
  detail::record_small_degree_independent(r, c.claims);
  c.claims.declare("3vertex_sees_at_most_three_3vertices");

  const MutableGraph m(r);
  c.reduced_coloring = PackingColoring(r.order());
  for (int v = 0; v < r.order(); ++v) {
    if (r.degree(v) <= 2) c.reduced_coloring.assign(v, 1);
  }
  for (int v = 0; v < r.order(); ++v) {
    if (r.degree(v) != 3) continue;
    std::vector<char> used(seq.size() + 1, 0);
    int near3 = 0;
    for (const auto& [u, d] : m.ball(v, 2)) {
      (void)d;
      if (r.degree(u) != 3) continue;
      ++near3;
      used[c.reduced_coloring[u]] = 1;
    }
    c.claims.record("3vertex_sees_at_most_three_3vertices", near3 <= 3,
                    std::to_string(v) + " sees " + std::to_string(near3));
    int cls = 2;
    while (cls <= seq.size() && used[cls]) ++cls;
    if (cls > seq.size()) {
      detail::construction_failed("no free 2-class for 3-vertex " + std::to_string(v), c.trace());
    }
    c.reduced_coloring.assign(v, cls);
  }
  detail::finish_construction(g, seq, c);
  return c;
}

/// (1,2^5)-packing colouring of a (3,0)-saturated subcubic graph. After
/// peeling, merging and dropping, heavy vertices and vertices of degree at
/// most two form an independent set in class 1; the rest is coloured by an
/// exact 5-colouring of the distance-two conflict graph, with the two
/// six-vertex configurations as fallback.
inline Construction color_30sat_12e5(const Graph& g) {
  if (!in_class(g, ClassTag::heavy_sat(0))) throw Error(Errc::not_in_class, "graph is not (3,0)-saturated subcubic");
  const PackingSequence seq({1, 2, 2, 2, 2, 2});
  Construction c;
  c.method = "30sat-12e5";
  c.reduction = reduce_heavy_free(g);
  const Graph& r = c.reduction.reduced;
  detail::record_small_degree_independent(r, c.claims);
  c.claims.declare("class1_set_independent");
  c.claims.declare("3vertex_has_at_most_one_2neighbor");
  c.claims.declare("conflict_graph_degree_at_most_5");

  std::vector<char> in_x(r.order(), 0);
  for (int v = 0; v < r.order(); ++v) in_x[v] = r.degree(v) <= 2 || is_heavy(r, v);
  for (const auto& [u, v] : r.edges()) {
    if (in_x[u] || in_x[v]) c.claims.record("class1_set_independent", !(in_x[u] && in_x[v]), detail::pair_text(u, v));
  }

  bool premise = true;
  for (int v = 0; v < r.order(); ++v) {
    if (r.degree(v) != 3) continue;
    int twos = 0;
    for (Vertex u : r.neighbors(v)) twos += r.degree(u) == 2 ? 1 : 0;
    premise = premise && twos <= 1;
    c.claims.record("3vertex_has_at_most_one_2neighbor", twos <= 1, std::to_string(v));
  }

  std::vector<Vertex> rest;
  std::vector<int> local(r.order(), -1);
  for (int v = 0; v < r.order(); ++v) {
    if (!in_x[v]) {
      local[v] = static_cast<int>(rest.size());
      rest.push_back(v);
    }
  }
  const MutableGraph m(r);
  std::vector<Edge> conflict;
  for (Vertex v : rest) {
    for (const auto& [u, d] : m.ball(v, 2)) {
      (void)d;
      if (local[u] > local[v]) conflict.emplace_back(local[v], local[u]);
    }
  }
  const Graph h = build_graph(static_cast<int>(rest.size()), conflict);
  for (int v = 0; v < h.order(); ++v) {
    if (premise) {
      c.claims.record("conflict_graph_degree_at_most_5", h.degree(v) <= 5,
                      std::to_string(rest[v]) + " has " + std::to_string(h.degree(v)));
    } else {
      c.claims.skip("conflict_graph_degree_at_most_5");
    }
  }

  c.reduced_coloring = PackingColoring(r.order());
  for (int v = 0; v < r.order(); ++v) {
    if (in_x[v]) c.reduced_coloring.assign(v, 1);
  }
  const PackingSequence five({1, 1, 1, 1, 1});
  std::vector<char> stored(r.order(), 0);
  for (const auto& comp : connected_components(h)) {
    if (stored[rest[comp[0]]]) continue;
    const auto sub = induced_subgraph(h, comp);
    const auto res = decide_colorable(sub.graph, five);
    if (res.feasible()) {
      for (int i = 0; i < sub.graph.order(); ++i) {
        c.reduced_coloring.assign(rest[sub.origin[i]], res.coloring[i] + 1);
      }
      continue;
    }
    // The component of r holding this conflict component.
    const auto all = connected_components(r);
    const auto host = *std::find_if(all.begin(), all.end(), [&](const std::vector<Vertex>& cc) {
      return std::binary_search(cc.begin(), cc.end(), rest[comp[0]]);
    });
    const auto piece = induced_subgraph(r, host);
    bool applied = false;
    for (const char* name : {"hex_wheel_left", "thirteen_vertex_right"}) {
      const auto fx = fixture(name);
      const auto iso = find_isomorphism(fx.graph, piece.graph);
      if (iso.empty()) continue;
      for (int v = 0; v < fx.graph.order(); ++v) {
        c.reduced_coloring.assign(piece.origin[iso[v]], (*fx.coloring)[v]);
        stored[piece.origin[iso[v]]] = 1;
      }
      c.notes.push_back(std::string("component ") + detail::list(host) + " coloured as " + name);
      applied = true;
      break;
    }
    if (!applied) {
      detail::construction_failed("conflict component " + detail::list(comp) + " is not 5-colourable (" +
                                      std::string(verdict_name(res.verdict)) + ")",
                                  c.trace());
    }
  }
  detail::finish_construction(g, seq, c);
  return c;
}

}  // namespace subpack
