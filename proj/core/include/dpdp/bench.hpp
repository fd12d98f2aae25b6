#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "dpdp/extras.hpp"
#include "dpdp/instance_io.hpp"
#include "dpdp/types.hpp"

namespace dpdp {

// One CSV row of the harness. The header is fixed; fields are never
// reordered across versions.
struct BenchRecord {
  std::string algo;
  Index n = 0, m = 0;
  Index k_out = 0;
  Index rounds = 0;
  Index wasted_states = 0;
  int threads = 1;
  std::uint64_t seed = 0;
  std::string cost_spec;
  double time_ms = 0.0;

  static const char* csv_header();
  std::string csv_row() const;
};

struct RunOptions {
  std::string algo;
  std::string cost = "quad:C=0";   // glws/kglws/obst input costs, gap's w1
  std::string cost2 = "quad:C=0";  // gap's w2
  int threads = 0;                 // fork-join pool size; 0 keeps the current setting
  int repeats = 1;                 // timed repetitions; the median is reported
  bool verify = false;             // cross-check against the sequential counterpart
  std::uint64_t seed = 0;          // echoed into the record
  Index k = 1;                     // kglws cluster count
  ObstWeights obst_weights = ObstWeights::Frequencies;
};

struct RunOutcome {
  BenchRecord record;
  std::string verify;  // "", "pass", "fail", "skipped"
};

// Runs one algorithm over the given instance files (one file for most
// algorithms; two byte sequences for lcs/gap, or one pre-built match list
// for lis/lcs). Preprocessing such as match-list construction is excluded
// from the timed region. Warm-up runs once before timing.
RunOutcome run_bench(const RunOptions& opt, const std::vector<InstanceFile>& inputs);

struct SelfTestReport {
  bool ok = true;
  std::string message;                  // first failure, empty when ok
  std::vector<std::string> artifacts;   // serialized counterexample paths
};

// Reduced-size oracle-equivalence and invariant sweep over every module.
// On the first failure the offending instance and the expected/actual values
// are serialized under out_dir.
SelfTestReport selftest(const std::filesystem::path& out_dir);

}  // namespace dpdp
