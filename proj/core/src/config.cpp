// Copyright 2026 The ZNE Bounds Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "zne/config.hpp"

#include <initializer_list>
#include <string>

#include "json.hpp"
#include "zne/error.hpp"

namespace zne {
namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& msg) { throw Error(ErrorCode::ConfigError, msg); }

void only_keys(const json& obj, const std::string& where, std::initializer_list<const char*> keys) {
  if (!obj.is_object()) fail(where + " must be an object");
  for (const auto& [k, v] : obj.items()) {
    bool known = false;
    for (const char* allowed : keys) known = known || k == allowed;
    if (!known) fail("unknown key '" + k + "' in " + where);
  }
}

double get_number(const json& obj, const char* key, const std::string& where, double fallback) {
  if (!obj.contains(key)) return fallback;
  const json& v = obj.at(key);
  if (!v.is_number()) fail(where + "." + key + " must be a number");
  return v.get<double>();
}

std::uint64_t get_count(const json& obj, const char* key, const std::string& where,
                        std::uint64_t fallback) {
  if (!obj.contains(key)) return fallback;
  const json& v = obj.at(key);
  if (!v.is_number_unsigned()) fail(where + "." + key + " must be a non-negative integer");
  return v.get<std::uint64_t>();
}

std::string get_string(const json& obj, const char* key, const std::string& where,
                       const std::string& fallback) {
  if (!obj.contains(key)) return fallback;
  const json& v = obj.at(key);
  if (!v.is_string()) fail(where + "." + key + " must be a string");
  return v.get<std::string>();
}

std::vector<std::size_t> get_counts(const json& v, const std::string& where) {
  if (!v.is_array()) fail(where + " must be an array");
  std::vector<std::size_t> out;
  for (const json& e : v) {
    if (!e.is_number_unsigned()) fail(where + " entries must be non-negative integers");
    out.push_back(e.get<std::size_t>());
  }
  return out;
}

ExperimentConfig from_json(const json& doc) {
  only_keys(doc, "config",
            {"schema_version", "name", "kind", "model", "evolution", "nodes", "degree",
             "degree_range", "shots", "seed", "observable", "shot_free", "step_counts", "joint",
             "pilot_fraction", "hoeffding_epsilon"});
  if (!doc.contains("schema_version")) fail("missing schema_version");
  if (get_count(doc, "schema_version", "config", 0) != kConfigSchemaVersion) {
    fail("unsupported schema_version (expected " + std::to_string(kConfigSchemaVersion) + ")");
  }
  if (!doc.contains("name")) fail("missing name");
  if (!doc.contains("kind")) fail("missing kind");

  ExperimentConfig cfg;
  cfg.name = get_string(doc, "name", "config", cfg.name);
  cfg.kind = parse_experiment_kind(get_string(doc, "kind", "config", ""));

  if (doc.contains("model")) {
    const json& m = doc.at("model");
    only_keys(m, "model", {"num_qubits", "coupling", "field"});
    cfg.evolution.tfim.num_qubits = get_count(m, "num_qubits", "model", 5);
    cfg.evolution.tfim.coupling = get_number(m, "coupling", "model", cfg.evolution.tfim.coupling);
    cfg.evolution.tfim.field = get_number(m, "field", "model", cfg.evolution.tfim.field);
  }
  if (doc.contains("evolution")) {
    const json& e = doc.at("evolution");
    only_keys(e, "evolution", {"t_final", "trotter_steps", "noise_base", "noise_model"});
    cfg.evolution.t_final = get_number(e, "t_final", "evolution", cfg.evolution.t_final);
    cfg.evolution.trotter_steps =
        get_count(e, "trotter_steps", "evolution", cfg.evolution.trotter_steps);
    cfg.evolution.noise_base = get_number(e, "noise_base", "evolution", cfg.evolution.noise_base);
    cfg.evolution.noise_model =
        parse_noise_model(get_string(e, "noise_model", "evolution", "per_step"));
  }
  if (doc.contains("nodes")) {
    const json& n = doc.at("nodes");
    only_keys(n, "nodes", {"scheme", "n", "b_max", "values"});
    cfg.nodes.scheme = parse_node_scheme(get_string(n, "scheme", "nodes", "equidistant"));
    cfg.nodes.n = get_count(n, "n", "nodes", cfg.nodes.n);
    cfg.nodes.b_max = get_number(n, "b_max", "nodes", cfg.nodes.b_max);
    if (n.contains("values")) {
      const json& vals = n.at("values");
      if (!vals.is_array()) fail("nodes.values must be an array");
      for (const json& v : vals) {
        if (!v.is_number()) fail("nodes.values entries must be numbers");
        cfg.nodes.values.push_back(v.get<double>());
      }
    }
  }
  cfg.degree = get_count(doc, "degree", "config", cfg.degree);
  if (doc.contains("degree_range")) {
    const std::vector<std::size_t> r = get_counts(doc.at("degree_range"), "degree_range");
    if (r.size() != 2) fail("degree_range must be [min, max]");
    cfg.degree_min = r[0];
    cfg.degree_max = r[1];
  }
  cfg.shots = get_count(doc, "shots", "config", cfg.shots);
  cfg.seed = get_count(doc, "seed", "config", cfg.seed);
  if (doc.contains("observable")) {
    const json& o = doc.at("observable");
    only_keys(o, "observable", {"pauli", "qubit"});
    cfg.observable.which = parse_pauli(get_string(o, "pauli", "observable", "X"));
    cfg.observable.qubit = get_count(o, "qubit", "observable", 0);
  }
  if (doc.contains("shot_free")) {
    if (!doc.at("shot_free").is_boolean()) fail("shot_free must be a boolean");
    cfg.shot_free = doc.at("shot_free").get<bool>();
  }
  if (doc.contains("step_counts")) cfg.step_counts = get_counts(doc.at("step_counts"), "step_counts");
  if (doc.contains("joint")) {
    const json& j = doc.at("joint");
    only_keys(j, "joint", {"c", "step_counts"});
    JointSchedule js;
    js.c = get_number(j, "c", "joint", js.c);
    if (j.contains("step_counts")) js.step_counts = get_counts(j.at("step_counts"), "joint.step_counts");
    cfg.joint = js;
  }
  cfg.pilot_fraction = get_number(doc, "pilot_fraction", "config", cfg.pilot_fraction);
  cfg.hoeffding_epsilon = get_number(doc, "hoeffding_epsilon", "config", cfg.hoeffding_epsilon);
  return cfg;
}

}  // namespace

ExperimentConfig parse_config(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    fail(std::string("malformed JSON: ") + e.what());
  }
  try {
    ExperimentConfig cfg = from_json(doc);
    cfg.validate();
    return cfg;
  } catch (const Error& e) {
    if (e.code() == ErrorCode::ConfigError) throw;
    fail(e.what());
  }
}

std::string config_to_json(const ExperimentConfig& cfg, int indent) {
  json doc;
  doc["schema_version"] = kConfigSchemaVersion;
  doc["name"] = cfg.name;
  doc["kind"] = std::string(to_string(cfg.kind));
  doc["model"] = {{"num_qubits", cfg.evolution.tfim.num_qubits},
                  {"coupling", cfg.evolution.tfim.coupling},
                  {"field", cfg.evolution.tfim.field}};
  doc["evolution"] = {{"t_final", cfg.evolution.t_final},
                      {"trotter_steps", cfg.evolution.trotter_steps},
                      {"noise_base", cfg.evolution.noise_base},
                      {"noise_model", std::string(to_string(cfg.evolution.noise_model))}};
  json nodes = {{"scheme", std::string(to_string(cfg.nodes.scheme))},
                {"n", cfg.nodes.n},
                {"b_max", cfg.nodes.b_max}};
  if (!cfg.nodes.values.empty()) nodes["values"] = cfg.nodes.values;
  doc["nodes"] = nodes;
  doc["degree"] = cfg.degree;
  doc["degree_range"] = {cfg.degree_min, cfg.degree_max};
  doc["shots"] = cfg.shots;
  doc["seed"] = cfg.seed;
  doc["observable"] = {{"pauli", std::string(to_string(cfg.observable.which))},
                       {"qubit", cfg.observable.qubit}};
  doc["shot_free"] = cfg.shot_free;
  if (!cfg.step_counts.empty()) doc["step_counts"] = cfg.step_counts;
  if (cfg.joint) doc["joint"] = {{"c", cfg.joint->c}, {"step_counts", cfg.joint->step_counts}};
  doc["pilot_fraction"] = cfg.pilot_fraction;
  doc["hoeffding_epsilon"] = cfg.hoeffding_epsilon;
  return doc.dump(indent);
}

}  // namespace zne
