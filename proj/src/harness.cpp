#include "np4g/harness.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include <json.hpp>

#include "np4g/dot.hpp"
#include "np4g/interpreter.hpp"
#include "np4g/serialize.hpp"

namespace np4g {

std::string outcome_name(Outcome o) {
  switch (o) {
    case Outcome::success: return "success";
    case Outcome::failure: return "failure";
    case Outcome::exceeded: return "exceeded";
  }
  return "?";
}

Network build_reference_not_1bit() {
  Network net;
  net.start_id = 0;
  net.nodes = {
      {0, NodeKind::start(), {}},
      {1, NodeKind::object("0"), {}},
      {2, NodeKind::object("1"), {}},
      {3, NodeKind::primitive(Op::equal), {0, 1}}, // input == "0"?
      {4, NodeKind::primitive(Op::equal), {0, 2}}, // input == "1"?
      {5, NodeKind::primitive(Op::gate), {3, 2}},  // pass "1"
      {6, NodeKind::primitive(Op::gate), {4, 1}},  // pass "0"
      {7, NodeKind::primitive(Op::sum), {5, 6}},
  };
  return net;
}

Network build_reference_not_multibit(const AdfRegistry& registry_with_not) {
  if (registry_with_not.size() == 0)
    throw ConfigError("the multibit builder needs a registry holding the 1-bit network");
  const int not_index = registry_with_not.size() - 1;
  Network net;
  net.start_id = 0;
  // sum's second link holds "[NULL]", which the null rule drops, so the
  // sum just joins the mapped list back into one string.
  net.nodes = {
      {0, NodeKind::start(), {}},
      {1, NodeKind::object(std::string(kNull)), {}},
      {2, NodeKind::primitive(Op::split), {0}},
      {3, NodeKind::adf(not_index), {2}},
      {4, NodeKind::primitive(Op::sum), {3, 1}},
  };
  net.adf_refs = {not_index};
  return net;
}

std::vector<TrainingPair> verification_set() {
  std::vector<TrainingPair> pairs;
  for (int digits = 1; digits <= 5; ++digits) {
    for (int bits = 0; bits < (1 << digits); ++bits) {
      std::string input, expected;
      for (int d = digits - 1; d >= 0; --d) {
        const bool one = (bits >> d) & 1;
        if (!input.empty()) {
          input += ' ';
          expected += ' ';
        }
        input += one ? '1' : '0';
        expected += one ? '0' : '1';
      }
      pairs.push_back({std::move(input), std::move(expected)});
    }
  }
  return pairs;
}

VerifyResult verify(const Network& net, const AdfRegistry& registry) {
  for (const auto& pair : verification_set()) {
    const Value got = execute(net, registry, Value::scalar(pair.input));
    if (got.is_list() || got.text() != pair.output)
      return {false, Counterexample{pair.input, got.display(), pair.output}};
  }
  return {true, std::nullopt};
}

TimeStats time_stats(const std::vector<double>& xs) {
  TimeStats stats;
  if (xs.empty()) return stats;
  stats.n = static_cast<int>(xs.size());
  stats.min = stats.max = xs[0];
  double sum = 0.0;
  for (double x : xs) {
    sum += x;
    stats.min = std::min(stats.min, x);
    stats.max = std::max(stats.max, x);
  }
  stats.mean = sum / static_cast<double>(stats.n);
  return stats;
}

std::string ExperimentSummary::counts_row() const {
  return std::to_string(successes) + " / " + std::to_string(failures) + " / " +
         std::to_string(exceeded);
}

TimeStats ExperimentSummary::total_time_stats() const {
  std::vector<double> xs;
  for (const auto& run : runs)
    if (run.outcome != Outcome::exceeded) xs.push_back(run.total_time_s);
  return time_stats(xs);
}

std::vector<TimeStats> ExperimentSummary::phase_time_stats() const {
  const size_t phases = config.curriculum.phases.size();
  std::vector<TimeStats> stats(phases);
  for (size_t k = 0; k < phases; ++k) {
    std::vector<double> xs;
    for (const auto& run : runs)
      if (run.outcome == Outcome::success && k < run.phase_times_s.size())
        xs.push_back(run.phase_times_s[k]);
    stats[k] = time_stats(xs);
  }
  return stats;
}

namespace {

RunReport execute_trial(const ExperimentConfig& cfg, int trial, SearchMode mode) {
  SearchConfig search;
  search.node_count = cfg.node_count;
  search.time_limit_s = cfg.time_limit_s;
  search.rng_seed = derive_seed(cfg.seed, static_cast<uint64_t>(trial));
  search.attempt_cap = cfg.attempt_cap;
  search.mode = mode;

  RunReport report;
  report.seed = search.rng_seed;

  const auto started = std::chrono::steady_clock::now();
  CurriculumRun run = run_curriculum(search, cfg.curriculum);
  const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - started;
  report.total_time_s = elapsed.count();

  for (const auto& phase : run.phase_results) {
    report.phase_times_s.push_back(phase.generation_time_s);
    report.phase_attempts.push_back(phase.attempts);
  }
  report.registry_snapshot = std::move(run.registry);

  if (run.timed_out) {
    report.outcome = Outcome::exceeded;
    return report;
  }
  report.final_network = run.phase_results.back().network;
  const VerifyResult check = verify(*report.final_network, report.registry_snapshot);
  report.outcome = check.passed ? Outcome::success : Outcome::failure;
  report.counterexample = check.counterexample;
  return report;
}

std::string format_seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", s);
  return buf;
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  out << text;
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

std::string run_tag(int index) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "run_%02d", index);
  return buf;
}

} // namespace

ExperimentSummary run_experiment(const ExperimentConfig& cfg) {
  if (cfg.runs < 1) throw ConfigError("an experiment needs at least one run");
  if (cfg.curriculum.phases.empty()) throw ConfigError("an experiment needs a curriculum");

  ExperimentSummary summary;
  summary.config = cfg;
  summary.runs.resize(static_cast<size_t>(cfg.runs));

  if (cfg.parallel_trials && cfg.runs > 1) {
    // Trials are independent; inner searches stay serial to keep the
    // cores on whole trials.
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1)
#endif
    for (int t = 0; t < cfg.runs; ++t)
      summary.runs[static_cast<size_t>(t)] = execute_trial(cfg, t, SearchMode::serial);
  } else {
    for (int t = 0; t < cfg.runs; ++t)
      summary.runs[static_cast<size_t>(t)] = execute_trial(cfg, t, cfg.search_mode);
  }

  for (const auto& run : summary.runs) {
    switch (run.outcome) {
      case Outcome::success: ++summary.successes; break;
      case Outcome::failure: ++summary.failures; break;
      case Outcome::exceeded: ++summary.exceeded; break;
    }
  }

  if (!cfg.out_dir.empty()) write_experiment_outputs(summary);
  return summary;
}

std::string summary_text(const ExperimentSummary& summary) {
  const ExperimentConfig& cfg = summary.config;
  std::ostringstream out;
  out << "curriculum=" << cfg.curriculum_label << " nodes=" << cfg.node_count
      << " runs=" << cfg.runs << " time_limit_s=" << cfg.time_limit_s << " seed=" << cfg.seed
      << "\n";
  out << "result counts (success / failure / exceeded): " << summary.counts_row() << "\n";

  const TimeStats totals = summary.total_time_stats();
  out << "execution time over completed runs (s): ";
  if (totals.n == 0)
    out << "-\n";
  else
    out << "Mean " << format_seconds(totals.mean) << "  Max " << format_seconds(totals.max)
        << "  Min " << format_seconds(totals.min) << "\n";

  out << "generation time per phase over successes (s):\n";
  const auto phase_stats = summary.phase_time_stats();
  out << "  phase:";
  for (const auto& phase : cfg.curriculum.phases) out << "  " << phase.name;
  out << "\n";
  const std::pair<const char*, double TimeStats::*> rows[] = {
      {"Mean", &TimeStats::mean}, {"Max", &TimeStats::max}, {"Min", &TimeStats::min}};
  for (const auto& [name, field] : rows) {
    out << "  " << name << ":";
    for (const auto& s : phase_stats) out << "  " << (s.n == 0 ? "-" : format_seconds(s.*field));
    out << "\n";
  }

  out << "runs:\n";
  for (size_t t = 0; t < summary.runs.size(); ++t) {
    const RunReport& run = summary.runs[t];
    out << "  " << run_tag(static_cast<int>(t)) << " seed=" << run.seed << " "
        << outcome_name(run.outcome) << " total=" << format_seconds(run.total_time_s) << "s";
    if (!run.phase_times_s.empty()) {
      out << " phases=";
      for (size_t k = 0; k < run.phase_times_s.size(); ++k)
        out << (k ? "/" : "") << format_seconds(run.phase_times_s[k]);
    }
    if (run.counterexample)
      out << " counterexample: input \"" << run.counterexample->input << "\" -> got \""
          << run.counterexample->got << "\", expected \"" << run.counterexample->expected << "\"";
    out << "\n";
  }
  return out.str();
}

void write_experiment_outputs(const ExperimentSummary& summary) {
  namespace fs = std::filesystem;
  const ExperimentConfig& cfg = summary.config;
  fs::create_directories(cfg.out_dir);
  const fs::path dir(cfg.out_dir);

  write_file(dir / "summary.txt", summary_text(summary));

  std::ostringstream csv;
  csv << "run,seed,outcome,total_s";
  for (const auto& phase : cfg.curriculum.phases)
    csv << ",time_s:" << phase.name << ",attempts:" << phase.name;
  csv << "\n";
  for (size_t t = 0; t < summary.runs.size(); ++t) {
    const RunReport& run = summary.runs[t];
    csv << t << "," << run.seed << "," << outcome_name(run.outcome) << ","
        << format_seconds(run.total_time_s);
    for (size_t k = 0; k < cfg.curriculum.phases.size(); ++k) {
      if (k < run.phase_times_s.size())
        csv << "," << format_seconds(run.phase_times_s[k]) << "," << run.phase_attempts[k];
      else
        csv << ",,";
    }
    csv << "\n";
  }
  write_file(dir / "runs.csv", csv.str());

  nlohmann::ordered_json stats;
  stats["config"] = {{"curriculum", cfg.curriculum_label},
                     {"nodes", cfg.node_count},
                     {"runs", cfg.runs},
                     {"time_limit_s", cfg.time_limit_s},
                     {"seed", cfg.seed}};
  stats["counts"] = {{"success", summary.successes},
                     {"failure", summary.failures},
                     {"exceeded", summary.exceeded},
                     {"row", summary.counts_row()}};
  const TimeStats totals = summary.total_time_stats();
  stats["total_time_s"] = {{"n", totals.n}, {"mean", totals.mean}, {"max", totals.max}, {"min", totals.min}};
  stats["phase_generation_s"] = nlohmann::ordered_json::object();
  const auto phase_stats = summary.phase_time_stats();
  for (size_t k = 0; k < phase_stats.size(); ++k) {
    const TimeStats& s = phase_stats[k];
    stats["phase_generation_s"][cfg.curriculum.phases[k].name] = {
        {"n", s.n}, {"mean", s.mean}, {"max", s.max}, {"min", s.min}};
  }
  write_file(dir / "stats.json", stats.dump(2) + "\n");

  for (size_t t = 0; t < summary.runs.size(); ++t) {
    const RunReport& run = summary.runs[t];
    if (!run.final_network) continue;
    const std::string tag = run_tag(static_cast<int>(t));
    write_file(dir / (tag + ".network.json"), serialize(*run.final_network));
    write_file(dir / (tag + ".registry.json"), serialize(run.registry_snapshot));
    write_file(dir / (tag + ".dot"), export_dot(*run.final_network, run.registry_snapshot));
  }
}

} // namespace np4g
