#include <atomic>
#include <cstdint>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "np4g/synthesis.hpp"

namespace np4g {

// Attempts are embarrassingly parallel: each one draws from its own
// substream, so any schedule sees the same candidates. Keeping the
// success with the lowest attempt index makes the result bit-identical
// to search_phase_serial.
std::optional<PhaseResult> search_phase_parallel(const SearchConfig& cfg, const PhaseSpec& phase,
                                                 const AdfRegistry& registry, uint64_t stream_seed,
                                                 Deadline deadline) {
  const auto started = std::chrono::steady_clock::now();
  const std::vector<std::string> pool = object_pool(phase);
  const uint64_t chunk = cfg.batch_size > 0 ? static_cast<uint64_t>(cfg.batch_size) : 1024;

  std::atomic<uint64_t> best{UINT64_MAX};
  Network best_network;

  for (uint64_t base = 0;; base += chunk) {
    if (deadline && std::chrono::steady_clock::now() >= *deadline) return std::nullopt;
    uint64_t span = chunk;
    if (cfg.attempt_cap) {
      if (base >= *cfg.attempt_cap) return std::nullopt;
      span = std::min(span, *cfg.attempt_cap - base);
    }

#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 16)
#endif
    for (int64_t j = 0; j < static_cast<int64_t>(span); ++j) {
      const uint64_t attempt = base + static_cast<uint64_t>(j);
      if (attempt >= best.load(std::memory_order_relaxed)) continue; // cannot win
      SplitMix64 rng(derive_seed(stream_seed, attempt));
      Network candidate = generate_candidate(cfg, pool, registry, rng);
      if (!matches_phase(candidate, registry, phase)) continue;
#ifdef _OPENMP
#pragma omp critical(np4g_search_best)
#endif
      {
        if (attempt < best.load(std::memory_order_relaxed)) {
          best.store(attempt, std::memory_order_relaxed);
          best_network = std::move(candidate);
        }
      }
    }

    const uint64_t found = best.load(std::memory_order_relaxed);
    if (found != UINT64_MAX) {
      const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - started;
      return PhaseResult{std::move(best_network), elapsed.count(), found + 1};
    }
  }
}

} // namespace np4g
