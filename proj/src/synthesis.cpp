#include "np4g/synthesis.hpp"

#include <algorithm>
#include <unordered_set>

#include "np4g/interpreter.hpp"

namespace np4g {

PhaseSpec builtin_phase(int number) {
  switch (number) {
    case 1: return {"phase1", {{"0", "1"}}};
    case 2: return {"phase2", {{"1", "0"}}};
    case 3: return {"phase3", {{"0", "1"}, {"1", "0"}}};
    case 4: return {"phase4", {{"1", "0"}, {"0 0", "1 1"}}};
    case 5: return {"phase5", {{"1", "0"}, {"0 0", "1 1"}, {"0 1 0", "1 0 1"}}};
    default: throw ConfigError("no stock phase " + std::to_string(number));
  }
}

Curriculum builtin_curriculum(int phase_count) {
  Curriculum c;
  switch (phase_count) {
    case 3:
      for (int p : {2, 3, 4}) c.phases.push_back(builtin_phase(p));
      return c;
    case 4:
      for (int p : {1, 2, 3, 4}) c.phases.push_back(builtin_phase(p));
      return c;
    case 5:
      for (int p : {1, 2, 3, 4, 5}) c.phases.push_back(builtin_phase(p));
      return c;
    default:
      throw ConfigError("stock curricula have 3, 4, or 5 phases");
  }
}

std::vector<std::string> object_pool(const PhaseSpec& phase) {
  std::vector<std::string> pool;
  std::unordered_set<std::string> seen;
  for (const auto& pair : phase.pairs) {
    for (const std::string* s : {&pair.input, &pair.output})
      if (seen.insert(*s).second) pool.push_back(*s);
  }
  return pool;
}

Network generate_candidate(const SearchConfig& cfg, const std::vector<std::string>& pool,
                           const AdfRegistry& registry, SplitMix64& rng) {
  const int n = cfg.node_count;
  const uint64_t objects = pool.size();
  const uint64_t kinds = 4 + objects + static_cast<uint64_t>(registry.size());

  Network net;
  net.start_id = 0;
  net.nodes.reserve(static_cast<size_t>(n) + 1);
  net.nodes.push_back({0, NodeKind::start(), {}});
  for (int i = 1; i <= n; ++i) {
    const uint64_t k = rng.next_below(kinds);
    NodeKind kind;
    if (k < 4)
      kind = NodeKind::primitive(static_cast<Op>(k));
    else if (k < 4 + objects)
      kind = NodeKind::object(pool[static_cast<size_t>(k - 4)]);
    else
      kind = NodeKind::adf(static_cast<int>(k - 4 - objects));
    net.nodes.push_back({i, std::move(kind), {}});
  }

  // Wiring comes after all draws: any node but the slot's owner is a
  // legal source, forward or backward.
  const uint64_t total = static_cast<uint64_t>(n) + 1;
  for (int i = 1; i <= n; ++i) {
    Node& node = net.nodes[static_cast<size_t>(i)];
    const int arity = node.kind.arity();
    node.inputs.reserve(static_cast<size_t>(arity));
    for (int slot = 0; slot < arity; ++slot) {
      auto t = static_cast<NodeId>(rng.next_below(total - 1));
      if (t >= i) ++t;
      node.inputs.push_back(t);
    }
  }

  std::unordered_set<int> refs;
  for (const auto& node : net.nodes)
    if (node.kind.tag == NodeKind::Tag::adf) refs.insert(node.kind.adf_index);
  net.adf_refs.assign(refs.begin(), refs.end());
  std::sort(net.adf_refs.begin(), net.adf_refs.end());
  return net;
}

bool matches_phase(const Network& net, const AdfRegistry& registry, const PhaseSpec& phase) {
  for (const auto& pair : phase.pairs) {
    const Value out = execute(net, registry, Value::scalar(pair.input));
    if (out.is_list() || out.text() != pair.output) return false;
  }
  return true;
}

std::optional<PhaseResult> search_phase_serial(const SearchConfig& cfg, const PhaseSpec& phase,
                                               const AdfRegistry& registry, uint64_t stream_seed,
                                               Deadline deadline) {
  const auto started = std::chrono::steady_clock::now();
  const std::vector<std::string> pool = object_pool(phase);
  for (uint64_t attempt = 0;; ++attempt) {
    if (cfg.attempt_cap && attempt >= *cfg.attempt_cap) return std::nullopt;
    if (deadline && std::chrono::steady_clock::now() >= *deadline) return std::nullopt;
    SplitMix64 rng(derive_seed(stream_seed, attempt));
    Network candidate = generate_candidate(cfg, pool, registry, rng);
    if (matches_phase(candidate, registry, phase)) {
      const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - started;
      return PhaseResult{std::move(candidate), elapsed.count(), attempt + 1};
    }
  }
}

std::optional<PhaseResult> search_phase(const SearchConfig& cfg, const PhaseSpec& phase,
                                        const AdfRegistry& registry, uint64_t stream_seed,
                                        Deadline deadline) {
  if (cfg.mode == SearchMode::parallel)
    return search_phase_parallel(cfg, phase, registry, stream_seed, deadline);
  return search_phase_serial(cfg, phase, registry, stream_seed, deadline);
}

CurriculumRun run_curriculum(const SearchConfig& cfg, const Curriculum& curriculum) {
  CurriculumRun run;
  Deadline deadline;
  if (cfg.time_limit_s > 0) {
    deadline = std::chrono::steady_clock::now() +
               std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                   std::chrono::duration<double>(cfg.time_limit_s));
  }
  for (size_t k = 0; k < curriculum.phases.size(); ++k) {
    auto result =
        search_phase(cfg, curriculum.phases[k], run.registry, derive_seed(cfg.rng_seed, k), deadline);
    if (!result) {
      run.timed_out = true;
      return run;
    }
    run.registry.push(result->network);
    run.phase_results.push_back(std::move(*result));
  }
  return run;
}

} // namespace np4g
