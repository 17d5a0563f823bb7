#pragma once

#include <chrono>
#include <cstdint>
#include <ctime>
#include <fstream>
#include <mutex>
#include <string>
#include <string_view>

#include "json.hpp"
#include "subpack/error.hpp"

namespace subpack {

inline constexpr std::string_view kEngineVersion = "subpack 1.0.0";

/// One decided (or skipped) graph.
struct SweepRecord {
  std::string graph6;
  int n = 0;
  int sat_level = -1;
  int heavy_sat_level = -1;
  std::string class_tag;
  std::string sequence;
  std::string verdict;  // feasible | infeasible | budget | skip | error
  std::string pipeline;
  std::string pipeline_verdict;  // ok | failed, empty when no pipeline ran
  std::string certificate;
  std::uint64_t nodes = 0;
  double wall_ms = 0;
  std::string error;
  std::string engine = std::string(kEngineVersion);

  nlohmann::json to_json() const {
    return {{"type", "record"},
            {"graph6", graph6},
            {"n", n},
            {"sat_level", sat_level},
            {"heavy_sat_level", heavy_sat_level},
            {"class", class_tag},
            {"sequence", sequence},
            {"verdict", verdict},
            {"pipeline", pipeline},
            {"pipeline_verdict", pipeline_verdict},
            {"certificate", certificate},
            {"nodes", nodes},
            {"wall_ms", wall_ms},
            {"error", error},
            {"engine", engine}};
  }

  static SweepRecord from_json(const nlohmann::json& j) {
    SweepRecord r;
    r.graph6 = j.at("graph6").get<std::string>();
    r.n = j.at("n").get<int>();
    r.sat_level = j.at("sat_level").get<int>();
    r.heavy_sat_level = j.at("heavy_sat_level").get<int>();
    r.class_tag = j.at("class").get<std::string>();
    r.sequence = j.at("sequence").get<std::string>();
    r.verdict = j.at("verdict").get<std::string>();
    r.pipeline = j.at("pipeline").get<std::string>();
    r.pipeline_verdict = j.at("pipeline_verdict").get<std::string>();
    r.certificate = j.at("certificate").get<std::string>();
    r.nodes = j.at("nodes").get<std::uint64_t>();
    r.wall_ms = j.at("wall_ms").get<double>();
    r.error = j.at("error").get<std::string>();
    r.engine = j.at("engine").get<std::string>();
    return r;
  }
};

inline std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

/// Append-only JSON-lines file. Opening writes a header line with the
/// engine version, a timestamp and the caller's configuration; records are
/// appended one per line under a lock. A default-constructed ledger
/// discards everything.
class Ledger {
 public:
  Ledger() = default;

  Ledger(const std::string& path, const nlohmann::json& config) : path_(path) {
    out_.open(path, std::ios::app);
    if (!out_) throw Error(Errc::io, "cannot open ledger '" + path + "'");
    write({{"type", "header"}, {"engine", kEngineVersion}, {"started", utc_timestamp()}, {"config", config}});
  }

  bool active() const { return out_.is_open(); }
  const std::string& path() const { return path_; }

  void append(const SweepRecord& r) { write(r.to_json()); }

  void write(const nlohmann::json& line) {
    if (!out_.is_open()) return;
    std::lock_guard lock(mutex_);
    out_ << line.dump() << '\n';
    out_.flush();
    if (!out_) throw Error(Errc::io, "write failed on ledger '" + path_ + "'");
  }

 private:
  std::string path_;
  std::ofstream out_;
  std::mutex mutex_;
};

}  // namespace subpack
