#pragma once

#include <string>

#include "np4g/harness.hpp"
#include "np4g/synthesis.hpp"

namespace np4g {

/// Curriculum document:
///   { "phases": [ { "name": "phase1", "pairs": [["0", "1"]] }, ... ] }
Curriculum load_curriculum(const std::string& doc);
std::string curriculum_to_json(const Curriculum& curriculum);

/// Experiment document; any field may be omitted to keep its default:
///   { "phases": 4, "nodes": 15, "runs": 10, "time_limit_s": 900,
///     "seed": 42, "out_dir": "out", "curriculum": { ... } }
/// "curriculum" (inline document) wins over "phases" (stock choice).
ExperimentConfig load_experiment_config(const std::string& doc);

} // namespace np4g
