#include "np4g/config.hpp"

#include <json.hpp>

#include "np4g/serialize.hpp"

namespace np4g {

namespace {

using json = nlohmann::ordered_json;

json parse(const std::string& doc) {
  json j = json::parse(doc, nullptr, false);
  if (j.is_discarded()) throw ParseError("config is not valid JSON");
  return j;
}

Curriculum curriculum_from_json(const json& j) {
  if (!j.is_object() || !j.contains("phases") || !j["phases"].is_array())
    throw ParseError("curriculum: missing \"phases\" array");
  Curriculum curriculum;
  for (const auto& p : j["phases"]) {
    PhaseSpec phase;
    phase.name = p.value("name", "phase" + std::to_string(curriculum.phases.size() + 1));
    if (!p.contains("pairs") || !p["pairs"].is_array() || p["pairs"].empty())
      throw ParseError("curriculum: phase \"" + phase.name + "\" needs a non-empty \"pairs\" array");
    for (const auto& pair : p["pairs"]) {
      if (!pair.is_array() || pair.size() != 2 || !pair[0].is_string() || !pair[1].is_string())
        throw ParseError("curriculum: pairs must be [input, output] string pairs");
      TrainingPair t{pair[0].get<std::string>(), pair[1].get<std::string>()};
      if (t.input.empty() || t.output.empty())
        throw ParseError("curriculum: training strings must be non-empty");
      phase.pairs.push_back(std::move(t));
    }
    curriculum.phases.push_back(std::move(phase));
  }
  if (curriculum.phases.empty()) throw ParseError("curriculum: needs at least one phase");
  return curriculum;
}

} // namespace

Curriculum load_curriculum(const std::string& doc) { return curriculum_from_json(parse(doc)); }

std::string curriculum_to_json(const Curriculum& curriculum) {
  json j;
  j["phases"] = json::array();
  for (const auto& phase : curriculum.phases) {
    json p;
    p["name"] = phase.name;
    p["pairs"] = json::array();
    for (const auto& pair : phase.pairs) p["pairs"].push_back({pair.input, pair.output});
    j["phases"].push_back(std::move(p));
  }
  return j.dump(2) + "\n";
}

ExperimentConfig load_experiment_config(const std::string& doc) {
  const json j = parse(doc);
  if (!j.is_object()) throw ParseError("experiment config is not an object");

  ExperimentConfig cfg;
  if (j.contains("curriculum")) {
    cfg.curriculum = curriculum_from_json(j["curriculum"]);
    cfg.curriculum_label = "custom";
  } else {
    const int phases = j.value("phases", 4);
    cfg.curriculum = builtin_curriculum(phases);
    cfg.curriculum_label = std::to_string(phases) + " phases";
  }
  cfg.node_count = j.value("nodes", cfg.node_count);
  cfg.runs = j.value("runs", cfg.runs);
  cfg.time_limit_s = j.value("time_limit_s", cfg.time_limit_s);
  cfg.seed = j.value("seed", cfg.seed);
  cfg.out_dir = j.value("out_dir", cfg.out_dir);
  if (j.contains("attempt_cap")) cfg.attempt_cap = j["attempt_cap"].get<uint64_t>();
  cfg.parallel_trials = j.value("parallel_trials", cfg.parallel_trials);
  if (j.contains("search_mode")) {
    const std::string mode = j["search_mode"].get<std::string>();
    if (mode == "serial")
      cfg.search_mode = SearchMode::serial;
    else if (mode == "parallel")
      cfg.search_mode = SearchMode::parallel;
    else
      throw ParseError("experiment config: search_mode must be \"serial\" or \"parallel\"");
  }
  if (cfg.runs < 1) throw ParseError("experiment config: runs must be >= 1");
  if (cfg.node_count < 1) throw ParseError("experiment config: nodes must be >= 1");
  return cfg;
}

} // namespace np4g
