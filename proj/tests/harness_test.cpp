#include <gtest/gtest.h>

#include <atomic>
#include <filesystem>
#include <fstream>

#include "subpack/harness.hpp"

using namespace subpack;

namespace {

std::string temp_path(const std::string& name) {
  const auto p = std::filesystem::temp_directory_path() / ("subpack_" + name);
  std::filesystem::remove(p);
  return p.string();
}

std::vector<nlohmann::json> read_lines(const std::string& path) {
  std::ifstream in(path);
  std::vector<nlohmann::json> out;
  for (std::string line; std::getline(in, line);) out.push_back(nlohmann::json::parse(line));
  return out;
}

}  // namespace

TEST(ParallelFor, VisitsEveryIndexOnce) {
  std::vector<std::atomic<int>> hits(1000);
  parallel_for(hits.size(), 4, [&](std::size_t i) { ++hits[i]; });
  for (const auto& h : hits) EXPECT_EQ(h.load(), 1);
  EXPECT_THROW(parallel_for(10, 2, [](std::size_t i) {
                 if (i == 7) throw Error(Errc::io, "boom");
               }),
               Error);
}

TEST(Pipelines, NamesAndSequences) {
  for (const char* name : {"1133", "1sat-12e4", "30sat-12e5"}) EXPECT_EQ(pipeline_name(parse_pipeline(name)), name);
  EXPECT_THROW(parse_pipeline("greedy"), Error);
  EXPECT_EQ(pipeline_sequence(Pipeline::p1133).str(), "1,1,3,3");
  EXPECT_EQ(pipeline_sequence(Pipeline::p12e4).str(), "1,2,2,2,2");
  EXPECT_EQ(pipeline_sequence(Pipeline::p12e5).str(), "1,2,2,2,2,2");
  const auto p = profile(fixture("c8_two_chords").graph);
  EXPECT_EQ(pipeline_for(PackingSequence::parse("1,1,3,3"), p), Pipeline::p1133);
  EXPECT_EQ(pipeline_for(PackingSequence::parse("1,1,2"), p), Pipeline::none);
}

TEST(Rational, ParsesFractionsAndDecimals) {
  EXPECT_EQ(parse_rational("7/10"), (Rational{7, 10}));
  EXPECT_EQ(parse_rational("0.35"), (Rational{7, 20}));
  EXPECT_EQ(parse_rational("2"), (Rational{2, 1}));
  EXPECT_EQ(parse_rational("4/8"), (Rational{1, 2}));
  EXPECT_THROW(parse_rational("1/0"), Error);
  EXPECT_THROW(parse_rational("x"), Error);
  EXPECT_EQ(parse_grid("0.6,7/10,0.8").size(), 3u);
}

TEST(PackingChromatic, PathsAndCycles) {
  EXPECT_EQ(packing_chromatic(build_graph(3, {{0, 1}, {1, 2}}), 6).value, 2);
  EXPECT_EQ(packing_chromatic(build_graph(4, {{0, 1}, {1, 2}, {2, 3}}), 6).value, 3);
  EXPECT_EQ(packing_chromatic(build_graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}), 6).value, 3);
  EXPECT_EQ(packing_chromatic(build_graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}}), 6).value, 4);
  EXPECT_FALSE(packing_chromatic(fixture("petersen").graph, 3).value);
}

TEST(Sweep, CountsAndLedger) {
  const std::string path = temp_path("sweep.jsonl");
  SweepOptions opt;
  opt.tag = ClassTag::sat(0);
  opt.seq = PackingSequence::parse("1,1,2");
  opt.workers = 2;
  SweepSummary s;
  {
    Ledger ledger(path, opt.to_json());
    s = sweep(enumerate_up_to(6), opt, &ledger);
  }
  EXPECT_EQ(s.total, 49);
  EXPECT_EQ(s.decided() + s.skipped, s.total);
  const auto lines = read_lines(path);
  ASSERT_EQ(static_cast<long long>(lines.size()), s.total + 1);
  EXPECT_EQ(lines[0]["type"], "header");
  EXPECT_EQ(lines[0]["engine"], std::string(kEngineVersion));
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto r = SweepRecord::from_json(lines[i]);
    EXPECT_EQ(r.to_json(), lines[i]);
    if (r.verdict == "feasible") {
      const auto g = parse_graph6(r.graph6);
      EXPECT_TRUE(is_valid_coloring(g, opt.seq, PackingColoring::parse_certificate(r.certificate, g.order())));
    }
  }
}

TEST(Sweep, RunsMatchingPipeline) {
  SweepOptions opt;
  opt.tag = ClassTag::sat(1);
  opt.seq = PackingSequence::parse("1,1,3,3");
  const auto s = sweep(enumerate_up_to(7), opt);
  EXPECT_EQ(s.infeasible, 0);
  EXPECT_EQ(s.pipeline_failed, 0);
  EXPECT_EQ(s.pipeline_ok, s.total - s.skipped);
}

TEST(Hunt, FindsSmallestCounterexample) {
  SweepOptions opt;
  opt.seq = PackingSequence::parse("1,1");
  const auto h = search_counterexample(opt, 6);
  EXPECT_EQ(h.status, "found");
  EXPECT_EQ(h.n, 3);
}

TEST(Hunt, ExclusionsSkipGraphs) {
  SweepOptions opt;
  opt.seq = PackingSequence::parse("1,1,2,2");
  opt.exclude.insert(canonical_code(fixture("petersen").graph));
  const auto h = search_counterexample(opt, 7);
  EXPECT_EQ(h.status, "exhausted");
}

TEST(Weights, DefaultCellSucceedsOnSmallGraphs) {
  const auto cells = phi_weight_experiment({Rational{7, 10}}, {Rational{7, 20}}, PackingSequence::parse("1,1,3,3"), 8, 1);
  ASSERT_EQ(cells.size(), 1u);
  EXPECT_EQ(cells[0].weights, PhiWeights{});
  EXPECT_GT(cells[0].graphs, 0);
  EXPECT_EQ(cells[0].successes, cells[0].graphs);
}

TEST(Claims, SmallRunPasses) {
  const auto rep = check_claims(6, 1);
  for (const auto& r : rep.results) EXPECT_TRUE(r.pass) << r.name << ": " << r.detail;
  EXPECT_TRUE(rep.ok());
}
