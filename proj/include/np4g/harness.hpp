#pragma once

#include <optional>
#include <string>
#include <vector>

#include "np4g/network.hpp"
#include "np4g/synthesis.hpp"

namespace np4g {

enum class Outcome { success, failure, exceeded };

std::string outcome_name(Outcome o);

struct Counterexample {
  std::string input;
  std::string got;
  std::string expected;
};

struct RunReport {
  Outcome outcome = Outcome::exceeded;
  std::vector<double> phase_times_s;    // one per completed phase
  std::vector<uint64_t> phase_attempts; // matching phase_times_s
  double total_time_s = 0.0;
  std::optional<Network> final_network;
  AdfRegistry registry_snapshot;
  uint64_t seed = 0;
  std::optional<Counterexample> counterexample; // set on failure
};

/// The hand-built 1-bit NOT: two equal nodes against "0" and "1" feed two
/// gates passing "1" and "0", joined by a sum.
Network build_reference_not_1bit();

/// Split, map the most recent registry entry over the elements, and join
/// with a sum whose second link holds a "[NULL]" object (dropped by the
/// null rule, leaving a pure list-to-string join).
Network build_reference_not_multibit(const AdfRegistry& registry_with_not);

/// All 62 space-separated binary strings of 1..5 bits paired with their
/// bitwise NOT, shortest first, counting upward within a width.
std::vector<TrainingPair> verification_set();

struct VerifyResult {
  bool passed = false;
  std::optional<Counterexample> counterexample;
};

/// Runs the full verification set; on the first mismatch reports the
/// input, the rendered output, and the expected string.
VerifyResult verify(const Network& net, const AdfRegistry& registry);

struct ExperimentConfig {
  Curriculum curriculum;
  std::string curriculum_label = "custom";
  int node_count = 10;
  int runs = 10;
  double time_limit_s = 10800.0;
  uint64_t seed = 0;
  std::optional<uint64_t> attempt_cap;
  std::string out_dir; // empty: nothing is written
  bool parallel_trials = true;
  SearchMode search_mode = SearchMode::parallel; // used when trials run one by one
};

struct TimeStats {
  int n = 0;
  double mean = 0.0;
  double max = 0.0;
  double min = 0.0;
};

TimeStats time_stats(const std::vector<double>& xs);

struct ExperimentSummary {
  ExperimentConfig config;
  std::vector<RunReport> runs;
  int successes = 0;
  int failures = 0;
  int exceeded = 0;

  std::string counts_row() const; // "s / f / e"
  TimeStats total_time_stats() const;              // over completed (non-exceeded) runs
  std::vector<TimeStats> phase_time_stats() const; // over successes, one per phase
};

/// Executes cfg.runs independent curriculum runs with per-trial derived
/// seeds, classifies each as success / failure / exceeded, and (when
/// out_dir is set) writes the summary, the per-run table, and every final
/// network document with its DOT export.
ExperimentSummary run_experiment(const ExperimentConfig& cfg);

std::string summary_text(const ExperimentSummary& summary);

/// Writes summary.txt, runs.csv, stats.json, and run_NN.{network,registry}
/// .json / run_NN.dot under cfg.out_dir. Throws std::runtime_error on I/O
/// failure.
void write_experiment_outputs(const ExperimentSummary& summary);

} // namespace np4g
