#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <functional>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "json.hpp"
#include "subpack/canonical.hpp"
#include "subpack/classify.hpp"
#include "subpack/constructive.hpp"
#include "subpack/enumerate.hpp"
#include "subpack/fixtures.hpp"
#include "subpack/graph6.hpp"
#include "subpack/ledger.hpp"
#include "subpack/solver.hpp"

namespace subpack {

/// Runs fn(0..count-1) on `workers` threads (0 = hardware concurrency).
/// Exceptions escaping fn are rethrown after all workers stop.
inline void parallel_for(std::size_t count, int workers, const std::function<void(std::size_t)>& fn) {
  if (workers <= 0) workers = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  workers = static_cast<int>(std::min<std::size_t>(static_cast<std::size_t>(workers), std::max<std::size_t>(count, 1)));
  if (workers == 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i; (i = next.fetch_add(1)) < count;) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
          next = count;
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

// ---------------------------------------------------------------------------
// Constructive pipelines by name

enum class Pipeline { none, p1133, p12e4, p12e5 };

constexpr std::string_view pipeline_name(Pipeline p) noexcept {
  switch (p) {
    case Pipeline::none: return "";
    case Pipeline::p1133: return "1133";
    case Pipeline::p12e4: return "1sat-12e4";
    case Pipeline::p12e5: return "30sat-12e5";
  }
  return "";
}

inline Pipeline parse_pipeline(std::string_view name) {
  if (name == "1133") return Pipeline::p1133;
  if (name == "1sat-12e4") return Pipeline::p12e4;
  if (name == "30sat-12e5") return Pipeline::p12e5;
  throw Error(Errc::precondition, "unknown method '" + std::string(name) + "'");
}

inline PackingSequence pipeline_sequence(Pipeline p) {
  switch (p) {
    case Pipeline::p1133: return PackingSequence({1, 1, 3, 3});
    case Pipeline::p12e4: return PackingSequence({1, 2, 2, 2, 2});
    case Pipeline::p12e5: return PackingSequence({1, 2, 2, 2, 2, 2});
    case Pipeline::none: break;
  }
  throw Error(Errc::precondition, "no pipeline");
}

/// The construction that proves `seq` for graphs with this profile, if any.
inline Pipeline pipeline_for(const PackingSequence& seq, const SaturationProfile& p) {
  for (Pipeline c : {Pipeline::p1133, Pipeline::p12e4, Pipeline::p12e5}) {
    if (!(pipeline_sequence(c) == seq)) continue;
    if (c == Pipeline::p12e5 ? p.heavy_sat_level == 0 : p.sat_level <= 1) return c;
  }
  return Pipeline::none;
}

struct PipelineOutcome {
  PackingColoring coloring;
  ClaimReport claims;
  std::string trace;
};

/// Throws NOT_IN_CLASS or CONSTRUCTION_FAILED.
inline PipelineOutcome run_pipeline(Pipeline p, const Graph& g) {
  switch (p) {
    case Pipeline::p1133: {
      auto r = partition_1133(g);
      return {std::move(r.coloring), std::move(r.claims), r.trace()};
    }
    case Pipeline::p12e4: {
      auto r = color_1sat_12e4(g);
      return {std::move(r.coloring), std::move(r.claims), r.trace()};
    }
    case Pipeline::p12e5: {
      auto r = color_30sat_12e5(g);
      return {std::move(r.coloring), std::move(r.claims), r.trace()};
    }
    case Pipeline::none: break;
  }
  throw Error(Errc::precondition, "no pipeline");
}

// ---------------------------------------------------------------------------
// Sweeps

struct SweepOptions {
  ClassTag tag = ClassTag::subcubic();
  PackingSequence seq{{1}};
  std::uint64_t budget = kDefaultBudget;
  int workers = 0;
  bool run_pipeline = true;
  std::set<std::string> exclude;  // canonical codes

  nlohmann::json to_json() const {
    return {{"class", tag.str()},
            {"sequence", seq.compact()},
            {"budget", budget},
            {"pipeline", run_pipeline},
            {"exclude", std::vector<std::string>(exclude.begin(), exclude.end())}};
  }
};

struct SweepSummary {
  long long total = 0;
  long long feasible = 0;
  long long infeasible = 0;
  long long budget = 0;
  long long skipped = 0;
  long long errors = 0;
  long long pipeline_ok = 0;
  long long pipeline_failed = 0;
  std::vector<SweepRecord> infeasible_records;  // by (n, graph6)
  std::vector<SweepRecord> problem_records;     // errors, budget hits and pipeline failures
  ClaimReport claims;

  long long decided() const { return feasible + infeasible + budget; }

  nlohmann::json to_json() const {
    nlohmann::json bad = nlohmann::json::array();
    for (const auto& r : infeasible_records) bad.push_back(r.graph6);
    nlohmann::json claim_list = nlohmann::json::array();
    for (const auto& c : claims.checks()) {
      claim_list.push_back({{"name", c.name}, {"checked", c.checked}, {"violated", c.violated}, {"skipped", c.skipped}});
    }
    return {{"total", total},     {"feasible", feasible},       {"infeasible", infeasible},
            {"budget", budget},   {"skipped", skipped},         {"errors", errors},
            {"pipeline_ok", pipeline_ok}, {"pipeline_failed", pipeline_failed},
            {"infeasible_graph6", bad}, {"claims", claim_list}};
  }
};

/// Decides one graph. Never throws for per-graph failures; they become
/// "error" records.
inline SweepRecord decide_record(const Graph& g, const SweepOptions& opt, ClaimReport* claims = nullptr) {
  const auto start = std::chrono::steady_clock::now();
  SweepRecord r;
  r.graph6 = emit_graph6(g);
  r.n = g.order();
  r.class_tag = opt.tag.str();
  r.sequence = opt.seq.compact();
  auto stop = [&] {
    r.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return r;
  };
  try {
    if (g.max_degree() > 3) {
      r.verdict = "skip";
      r.error = "not subcubic";
      return stop();
    }
    const auto p = profile(g);
    r.sat_level = p.sat_level;
    r.heavy_sat_level = p.heavy_sat_level;
    if (!in_class(g, opt.tag)) {
      r.verdict = "skip";
      return stop();
    }
    if (!opt.exclude.empty() && opt.exclude.count(canonical_code(g))) {
      r.verdict = "skip";
      r.error = "excluded";
      return stop();
    }
    const auto res = decide_colorable(g, opt.seq, opt.budget);
    r.verdict = std::string(verdict_name(res.verdict));
    r.nodes = res.nodes;
    if (res.feasible()) {
      if (!is_valid_coloring(g, opt.seq, res.coloring)) {
        throw Error(Errc::construction_failed, "solver certificate does not verify");
      }
      r.certificate = res.coloring.certificate();
    }
    const Pipeline pipe = opt.run_pipeline ? pipeline_for(opt.seq, p) : Pipeline::none;
    if (pipe != Pipeline::none) {
      r.pipeline = std::string(pipeline_name(pipe));
      try {
        auto out = run_pipeline(pipe, g);
        r.pipeline_verdict = "ok";
        if (claims) claims->merge(out.claims);
      } catch (const Error& e) {
        r.pipeline_verdict = "failed";
        r.error = e.what();
      }
    }
  } catch (const std::exception& e) {
    r.verdict = "error";
    r.error = e.what();
  }
  return stop();
}

inline void tally(SweepSummary& s, const SweepRecord& r) {
  ++s.total;
  if (r.verdict == "feasible") ++s.feasible;
  if (r.verdict == "infeasible") {
    ++s.infeasible;
    s.infeasible_records.push_back(r);
  }
  if (r.verdict == "budget") ++s.budget;
  if (r.verdict == "skip") ++s.skipped;
  if (r.verdict == "error") ++s.errors;
  if (r.pipeline_verdict == "ok") ++s.pipeline_ok;
  if (r.pipeline_verdict == "failed") ++s.pipeline_failed;
  if (r.verdict == "error" || r.verdict == "budget" || r.pipeline_verdict == "failed") s.problem_records.push_back(r);
}

inline void sort_records(std::vector<SweepRecord>& rs) {
  std::sort(rs.begin(), rs.end(), [](const SweepRecord& a, const SweepRecord& b) {
    return std::tie(a.n, a.graph6) < std::tie(b.n, b.graph6);
  });
}

/// Decides every graph concurrently; records reach the ledger in
/// completion order, the summary does not depend on that order.
inline SweepSummary sweep(const std::vector<Graph>& graphs, const SweepOptions& opt, Ledger* ledger = nullptr) {
  std::vector<SweepRecord> records(graphs.size());
  std::vector<ClaimReport> claims(graphs.size());
  parallel_for(graphs.size(), opt.workers, [&](std::size_t i) {
    records[i] = decide_record(graphs[i], opt, &claims[i]);
    if (ledger) ledger->append(records[i]);
  });
  SweepSummary s;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    tally(s, records[i]);
    s.claims.merge(claims[i]);
  }
  sort_records(s.infeasible_records);
  sort_records(s.problem_records);
  return s;
}

// ---------------------------------------------------------------------------
// Counterexample search

struct HuntResult {
  std::string status;  // found | exhausted | incomplete
  std::string graph6;
  int n = 0;
  int nmax = 0;
  long long decided = 0;
  long long budget_hits = 0;
  long long skipped = 0;

  nlohmann::json to_json() const {
    return {{"status", status}, {"graph6", graph6}, {"n", n}, {"nmax", nmax},
            {"decided", decided}, {"budget_hits", budget_hits}, {"skipped", skipped}};
  }
};

/// Sweeps n = 1, 2, ..., nmax and stops after the first order holding an
/// infeasible in-class graph; the first such graph in enumeration order is
/// reported. "incomplete" means no counterexample but some budget hits.
inline HuntResult search_counterexample(const SweepOptions& opt, int nmax, Ledger* ledger = nullptr) {
  HuntResult h;
  h.nmax = nmax;
  SweepOptions local = opt;
  local.run_pipeline = false;
  for (int n = 1; n <= nmax; ++n) {
    const auto s = sweep(*enumerate_subcubic(n), local, ledger);
    h.decided += s.decided();
    h.budget_hits += s.budget;
    h.skipped += s.skipped;
    if (!s.infeasible_records.empty()) {
      h.status = "found";
      h.graph6 = s.infeasible_records.front().graph6;
      h.n = n;
      return h;
    }
  }
  h.status = h.budget_hits ? "incomplete" : "exhausted";
  return h;
}

// ---------------------------------------------------------------------------
// Packing chromatic number and the subdivision link

struct ChromaticResult {
  std::optional<int> value;  // empty: above cap or budget hit
  bool budget_hit = false;
};

/// Least k <= cap such that g is (1,2,...,k)-packing colourable.
inline ChromaticResult packing_chromatic(const Graph& g, int cap, std::uint64_t budget = kDefaultBudget) {
  std::vector<int> seq;
  for (int k = 1; k <= cap; ++k) {
    seq.push_back(k);
    const auto r = decide_colorable(g, PackingSequence(seq), budget);
    if (r.feasible()) return {k, false};
    if (r.verdict == ColorResult::Verdict::budget_exhausted) return {std::nullopt, true};
  }
  return {};
}

struct SubdivisionReport {
  long long graphs = 0;
  long long premise = 0;  // feasible for (1,1,2,2)
  long long budget_hits = 0;
  std::vector<std::string> failures;  // graph6 of G whose subdivision is not (1,2,3,4,5)-colourable

  bool ok() const { return failures.empty() && budget_hits == 0; }

  nlohmann::json to_json() const {
    return {{"graphs", graphs}, {"premise", premise}, {"budget_hits", budget_hits}, {"failures", failures}};
  }
};

inline SubdivisionReport subdivision_check(int nmax, int workers = 0, std::uint64_t budget = kDefaultBudget) {
  const auto graphs = enumerate_up_to(nmax);
  const PackingSequence premise({1, 1, 2, 2});
  const PackingSequence target({1, 2, 3, 4, 5});
  std::vector<int> state(graphs.size(), 0);  // 0 premise fails, 1 ok, 2 failure, 3 budget
  parallel_for(graphs.size(), workers, [&](std::size_t i) {
    const auto a = decide_colorable(graphs[i], premise, budget);
    if (a.verdict == ColorResult::Verdict::budget_exhausted) {
      state[i] = 3;
      return;
    }
    if (!a.feasible()) return;
    const auto b = decide_colorable(subdivide(graphs[i]), target, budget);
    state[i] = b.feasible() ? 1 : b.verdict == ColorResult::Verdict::budget_exhausted ? 3 : 2;
  });
  SubdivisionReport rep;
  rep.graphs = static_cast<long long>(graphs.size());
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    if (state[i] == 1 || state[i] == 2) ++rep.premise;
    if (state[i] == 2) rep.failures.push_back(emit_graph6(graphs[i]));
    if (state[i] == 3) ++rep.budget_hits;
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Weight experiment

/// "7/10", "0.35" or "2".
inline Rational parse_rational(std::string_view text) {
  auto digits = [&](std::string_view s) {
    if (s.empty() || s.size() > 12) throw Error(Errc::precondition, "bad rational '" + std::string(text) + "'");
    long long v = 0;
    for (char ch : s) {
      if (ch < '0' || ch > '9') throw Error(Errc::precondition, "bad rational '" + std::string(text) + "'");
      v = v * 10 + (ch - '0');
    }
    return v;
  };
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    const long long den = digits(text.substr(slash + 1));
    if (den == 0) throw Error(Errc::precondition, "zero denominator in '" + std::string(text) + "'");
    return Rational::reduced(digits(text.substr(0, slash)), den);
  }
  if (const auto dot = text.find('.'); dot != std::string_view::npos) {
    const auto frac = text.substr(dot + 1);
    long long den = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
    const long long whole = dot == 0 ? 0 : digits(text.substr(0, dot));
    return Rational::reduced(whole * den + (frac.empty() ? 0 : digits(frac)), den);
  }
  return Rational{digits(text), 1};
}

inline std::vector<Rational> parse_grid(std::string_view text) {
  std::vector<Rational> out;
  while (!text.empty()) {
    const auto comma = text.find(',');
    out.push_back(parse_rational(text.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  if (out.empty()) throw Error(Errc::precondition, "empty grid");
  return out;
}

struct WeightCell {
  Rational alpha;
  Rational beta;
  PhiWeights weights;
  long long graphs = 0;
  long long successes = 0;
  std::vector<std::string> failing;  // graph6, enumeration order
  std::string first_failure;

  nlohmann::json to_json() const {
    return {{"alpha", alpha.str()}, {"beta", beta.str()},   {"weights", weights.str()},
            {"graphs", graphs},     {"successes", successes}, {"failing", failing}};
  }
};

/// For each (alpha, beta) runs the partition scheme with weights
/// 1 : alpha : beta against `seq` on every 1-saturated graph up to nmax and
/// records how often the result verifies.
inline std::vector<WeightCell> phi_weight_experiment(const std::vector<Rational>& alphas,
                                                     const std::vector<Rational>& betas,
                                                     const PackingSequence& seq, int nmax, int workers = 0) {
  std::vector<Graph> graphs;
  for (const auto& g : enumerate_up_to(nmax)) {
    if (in_class(g, ClassTag::sat(1))) graphs.push_back(g);
  }
  std::vector<WeightCell> cells;
  for (const auto& a : alphas) {
    for (const auto& b : betas) {
      WeightCell cell;
      cell.alpha = a;
      cell.beta = b;
      cell.weights = PhiWeights::from_alpha_beta(a, b);
      std::vector<PartitionAttempt> attempts(graphs.size());
      parallel_for(graphs.size(), workers,
                   [&](std::size_t i) { attempts[i] = partition_coloring(graphs[i], cell.weights, seq); });
      cell.graphs = static_cast<long long>(graphs.size());
      for (std::size_t i = 0; i < graphs.size(); ++i) {
        if (attempts[i].success) {
          ++cell.successes;
        } else {
          if (cell.failing.empty()) cell.first_failure = attempts[i].failure;
          cell.failing.push_back(emit_graph6(graphs[i]));
        }
      }
      cells.push_back(std::move(cell));
    }
  }
  return cells;
}

// ---------------------------------------------------------------------------
// Claim runner

struct ClaimResult {
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

struct ClaimsReport {
  std::vector<ClaimResult> results;
  ClaimReport structure;

  bool ok() const {
    return std::all_of(results.begin(), results.end(), [](const ClaimResult& r) { return r.pass; });
  }

  nlohmann::json to_json() const {
    nlohmann::json list = nlohmann::json::array();
    for (const auto& r : results) {
      list.push_back({{"name", r.name}, {"pass", r.pass}, {"detail", r.detail}, {"seconds", r.seconds}});
    }
    return {{"pass", ok()}, {"results", list}};
  }
};

/// A fixture that must be infeasible for a sequence.
struct NegativeFixture {
  std::string_view fixture;
  std::string_view sequence;
};

inline constexpr NegativeFixture kNegativeFixtures[] = {
    {"petersen", "1,1,2,3"},
    {"petersen", "1,2^5"},
    {"two_k3_star", "1,1,4"},
    {"sk4", "1,2,2"},
    {"c8_two_chords", "1,2^3"},
    {"c12_three_chords", "1,1,4,4"},
    {"three_triangle_gadget", "1,1,3,3"},
    {"thirteen_vertex_right", "1,2^3"},
    {"hex_wheel_left", "1,2^3"},
};

/// A class on which a sequence is claimed to always work.
struct PositiveRow {
  std::string_view tag;
  std::string_view sequence;
};

inline constexpr PositiveRow kPositiveRows[] = {
    {"sat1", "1,1,2"},     {"sat1", "1,1,3,3"},  {"sat1", "1,2^4"},
    {"sat0", "1,1,3"},     {"sat0", "1,2^3"},    {"sat2", "1,1,2,3"},
    {"sat2", "1,2^4"},     {"hsat0", "1,1,2,2"}, {"hsat0", "1,2^5"},
    {"any", "1,1,2,2,3"},  {"any", "1,2^6"},
};

template <class F>
ClaimResult timed_claim(std::string name, F&& body) {
  const auto start = std::chrono::steady_clock::now();
  ClaimResult r;
  r.name = std::move(name);
  try {
    body(r);
  } catch (const std::exception& e) {
    r.pass = false;
    r.detail = e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

inline ClaimResult check_negative_fixture(const NegativeFixture& nf, std::uint64_t budget) {
  return timed_claim(std::string(nf.fixture) + " not (" + std::string(nf.sequence) + ")", [&](ClaimResult& r) {
    const auto res = decide_colorable(fixture(nf.fixture).graph, PackingSequence::parse(nf.sequence), budget);
    r.pass = res.verdict == ColorResult::Verdict::infeasible;
    r.detail = std::string(verdict_name(res.verdict)) + " after " + std::to_string(res.nodes) + " nodes";
  });
}

inline ClaimResult check_positive_row(const PositiveRow& row, const std::vector<Graph>& graphs, int workers,
                                      std::uint64_t budget, Ledger* ledger) {
  return timed_claim(std::string(row.tag) + " (" + std::string(row.sequence) + ")", [&](ClaimResult& r) {
    SweepOptions opt;
    opt.tag = ClassTag::parse(row.tag);
    opt.seq = PackingSequence::parse(row.sequence);
    opt.budget = budget;
    opt.workers = workers;
    opt.run_pipeline = false;
    const auto s = sweep(graphs, opt, ledger);
    r.pass = s.infeasible == 0 && s.budget == 0 && s.errors == 0;
    r.detail = std::to_string(s.decided()) + " decided, " + std::to_string(s.infeasible) + " infeasible, " +
               std::to_string(s.budget) + " budget, " + std::to_string(s.errors) + " errors";
    if (!s.infeasible_records.empty()) r.detail += ", first " + s.infeasible_records.front().graph6;
  });
}

/// Pipeline against solver over every in-class graph; structural checks are
/// merged into `structure`.
inline ClaimResult check_pipeline(Pipeline p, const std::vector<Graph>& graphs, int workers, std::uint64_t budget,
                                  ClaimReport& structure, Ledger* ledger) {
  return timed_claim("construct " + std::string(pipeline_name(p)), [&](ClaimResult& r) {
    SweepOptions opt;
    opt.tag = p == Pipeline::p12e5 ? ClassTag::heavy_sat(0) : ClassTag::sat(1);
    opt.seq = pipeline_sequence(p);
    opt.budget = budget;
    opt.workers = workers;
    const auto s = sweep(graphs, opt, ledger);
    structure.merge(s.claims);
    const long long in_class = s.total - s.skipped;
    r.pass = s.pipeline_failed == 0 && s.pipeline_ok == in_class && s.infeasible == 0 && s.errors == 0;
    r.detail = std::to_string(s.pipeline_ok) + "/" + std::to_string(in_class) + " verified, " +
               std::to_string(s.pipeline_failed) + " CONSTRUCTION_FAILED";
    if (!s.problem_records.empty()) r.detail += ", first " + s.problem_records.front().graph6;
  });
}

/// Re-runs every checkable statement up to order nmax: fixture
/// facts, negative fixtures, drawn colourings, positive rows, the three
/// constructions with their structural checks, and the subdivision link
/// (capped at n = 8).
inline ClaimsReport check_claims(int nmax, int workers = 0, std::uint64_t budget = kDefaultBudget,
                                       Ledger* ledger = nullptr) {
  ClaimsReport rep;
  rep.results.push_back(timed_claim("fixture facts", [&](ClaimResult& r) {
    r.pass = true;
    for (const auto& name : fixture_names()) {
      const auto f = fixture(name);
      const auto p = profile(f.graph);
      if (p.sat_level != f.sat_level || p.heavy_sat_level != f.heavy_sat_level) {
        r.pass = false;
        r.detail += name + " ";
      }
    }
    if (r.pass) r.detail = std::to_string(fixture_names().size()) + " fixtures";
  }));
  for (const auto& nf : kNegativeFixtures) rep.results.push_back(check_negative_fixture(nf, budget));
  for (const char* name : {"hex_wheel_left", "thirteen_vertex_right"}) {
    rep.results.push_back(timed_claim(std::string(name) + " drawn colouring", [&](ClaimResult& r) {
      const auto f = fixture(name);
      const auto v = verify_coloring(f.graph, *f.coloring_sequence, *f.coloring);
      const auto res = decide_colorable(f.graph, *f.coloring_sequence, budget);
      r.pass = v.empty() && res.feasible();
      r.detail = std::to_string(v.size()) + " violations, solver " + std::string(verdict_name(res.verdict));
    }));
  }
  const auto graphs = enumerate_up_to(nmax);
  for (const auto& row : kPositiveRows) rep.results.push_back(check_positive_row(row, graphs, workers, budget, ledger));
  for (Pipeline p : {Pipeline::p1133, Pipeline::p12e4, Pipeline::p12e5}) {
    rep.results.push_back(check_pipeline(p, graphs, workers, budget, rep.structure, ledger));
  }
  rep.results.push_back(timed_claim("structural checks", [&](ClaimResult& r) {
    r.pass = rep.structure.ok();
    r.detail = std::to_string(rep.structure.violations()) + " violations over " +
               std::to_string(rep.structure.checks().size()) + " checks";
  }));
  rep.results.push_back(timed_claim("subdivision link", [&](ClaimResult& r) {
    const auto s = subdivision_check(std::min(nmax, 8), workers, budget);
    r.pass = s.ok();
    r.detail = std::to_string(s.premise) + " graphs with (1,1,2,2), " + std::to_string(s.failures.size()) + " failures";
  }));
  return rep;
}

}  // namespace subpack
