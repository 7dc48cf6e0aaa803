#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "np4g/network.hpp"
#include "np4g/rng.hpp"

namespace np4g {

struct TrainingPair {
  std::string input;
  std::string output;

  bool operator==(const TrainingPair&) const = default;
};

struct PhaseSpec {
  std::string name;
  std::vector<TrainingPair> pairs;
};

struct Curriculum {
  std::vector<PhaseSpec> phases;
};

/// The five stock phases of the bitwise-NOT curriculum.
PhaseSpec builtin_phase(int number);

/// Stock curricula: 3 phases = {2,3,4}, 4 = {1,2,3,4}, 5 = {1..5}.
Curriculum builtin_curriculum(int phase_count);

enum class SearchMode { serial, parallel };

struct SearchConfig {
  int node_count = 10;
  double time_limit_s = 10800.0; // one shared budget for a whole run
  uint64_t rng_seed = 0;
  std::optional<uint64_t> attempt_cap; // per phase, for tests
  SearchMode mode = SearchMode::parallel;
  int batch_size = 1024; // attempts per parallel chunk
};

struct PhaseResult {
  Network network;
  double generation_time_s = 0.0;
  uint64_t attempts = 0;
};

using Deadline = std::optional<std::chrono::steady_clock::time_point>;

/// The strings available as object-node constants for a phase: every
/// input and output of its pairs, deduplicated in first-occurrence order.
std::vector<std::string> object_pool(const PhaseSpec& phase);

/// Draws a start node plus exactly cfg.node_count nodes, each kind picked
/// uniformly from {split, sum, equal, gate} + one object per pool string
/// + one ADF per registry entry, then wires every input slot uniformly to
/// any node but the slot's owner. Always validates clean.
Network generate_candidate(const SearchConfig& cfg, const std::vector<std::string>& pool,
                           const AdfRegistry& registry, SplitMix64& rng);

/// True iff the network maps every pair's input to exactly its output
/// (a scalar, byte-equal string).
bool matches_phase(const Network& net, const AdfRegistry& registry, const PhaseSpec& phase);

/// Generate-and-test until a candidate matches the phase or the deadline
/// or attempt cap runs out (nullopt). Attempt k always draws from the
/// substream derive_seed(stream_seed, k), so results replay exactly for
/// a given seed and are identical across the serial and parallel engines.
std::optional<PhaseResult> search_phase(const SearchConfig& cfg, const PhaseSpec& phase,
                                        const AdfRegistry& registry, uint64_t stream_seed,
                                        Deadline deadline);

/// Reference engine: one attempt after another.
std::optional<PhaseResult> search_phase_serial(const SearchConfig& cfg, const PhaseSpec& phase,
                                               const AdfRegistry& registry, uint64_t stream_seed,
                                               Deadline deadline);

/// OpenMP engine: evaluates attempts in chunks and keeps the success with
/// the lowest attempt index, reproducing the serial result.
std::optional<PhaseResult> search_phase_parallel(const SearchConfig& cfg, const PhaseSpec& phase,
                                                 const AdfRegistry& registry, uint64_t stream_seed,
                                                 Deadline deadline);

struct CurriculumRun {
  bool timed_out = false;
  std::vector<PhaseResult> phase_results; // one per completed phase
  AdfRegistry registry;                   // grows by one entry per phase

  const Network* final_network() const {
    return phase_results.empty() || timed_out ? nullptr : &phase_results.back().network;
  }
};

/// Runs the phases in order under one shared deadline (cfg.time_limit_s),
/// registering each phase's network as the next ADF. Phase k searches the
/// substream derive_seed(cfg.rng_seed, k).
CurriculumRun run_curriculum(const SearchConfig& cfg, const Curriculum& curriculum);

} // namespace np4g
