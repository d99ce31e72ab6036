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

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <gtest/gtest.h>
#include "json.hpp"

#include "zne/config.hpp"
#include "zne/error.hpp"

namespace zne {
namespace {

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const char* kMinimal = R"({
  "schema_version": 1,
  "name": "mini",
  "kind": "richardson",
  "model": {"num_qubits": 3, "coupling": 1.5, "field": 0.5},
  "evolution": {"t_final": 0.4, "trotter_steps": 4, "noise_base": 0.01},
  "nodes": {"scheme": "chebyshev", "n": 2, "b_max": 3.0},
  "degree": 2,
  "shots": 500,
  "seed": 9,
  "observable": {"pauli": "Z", "qubit": 2}
})";

TEST(Parse, MinimalConfig) {
  const ExperimentConfig c = parse_config(kMinimal);
  EXPECT_EQ(c.name, "mini");
  EXPECT_EQ(c.kind, ExperimentKind::Richardson);
  EXPECT_EQ(c.evolution.tfim.num_qubits, 3u);
  EXPECT_EQ(c.evolution.tfim.coupling, 1.5);
  EXPECT_EQ(c.evolution.trotter_steps, 4u);
  EXPECT_EQ(c.nodes.scheme, NodeScheme::Chebyshev);
  EXPECT_EQ(c.observable.which, Pauli::Z);
  EXPECT_EQ(c.observable.qubit, 2u);
  EXPECT_EQ(c.shots, 500u);
  EXPECT_EQ(c.seed, 9u);
}

TEST(Parse, CanonicalRoundTrip) {
  const ExperimentConfig c = parse_config(kMinimal);
  const std::string once = config_to_json(c);
  const std::string twice = config_to_json(parse_config(once));
  EXPECT_EQ(once, twice);
}

void expect_config_error(const std::string& text) {
  try {
    parse_config(text);
    FAIL() << text;
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ConfigError) << e.what();
  }
}

TEST(Parse, RejectsMalformedInput) {
  expect_config_error("{not json");
  expect_config_error(R"({"name": "x", "kind": "richardson"})");
  nlohmann::json j = nlohmann::json::parse(kMinimal);
  j["schema_version"] = 2;
  expect_config_error(j.dump());
  j = nlohmann::json::parse(kMinimal);
  j["extra"] = 1;
  expect_config_error(j.dump());
  j = nlohmann::json::parse(kMinimal);
  j["model"]["couplingg"] = 1;
  expect_config_error(j.dump());
  j = nlohmann::json::parse(kMinimal);
  j["kind"] = "unknown";
  expect_config_error(j.dump());
  j = nlohmann::json::parse(kMinimal);
  j["shots"] = "many";
  expect_config_error(j.dump());
  j = nlohmann::json::parse(kMinimal);
  j["kind"] = "least_squares";
  j["degree"] = 5;
  expect_config_error(j.dump());
}

TEST(Shipped, AllConfigsParseAndRoundTrip) {
  std::size_t count = 0;
  for (const auto& entry : std::filesystem::directory_iterator(ZNE_CONFIG_DIR)) {
    if (entry.path().extension() != ".json") continue;
    const ExperimentConfig c = parse_config(read_file(entry.path()));
    EXPECT_EQ(c.name, entry.path().stem().string());
    EXPECT_EQ(config_to_json(parse_config(config_to_json(c))), config_to_json(c));
    ++count;
  }
  EXPECT_GE(count, 10u);
}

TEST(Format, ShortestRoundTrip) {
  EXPECT_EQ(format_double(0.1), "0.1");
  EXPECT_EQ(std::stod(format_double(0.1918260000001336)), 0.1918260000001336);
  EXPECT_EQ(format_double(INFINITY), "inf");
}

TEST(Report, CsvAndJsonShape) {
  ExperimentConfig c = parse_config(kMinimal);
  c.shot_free = true;
  const ExperimentResult r = run_experiment(c);
  const std::string csv = result_csv(r);
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 4);
  const nlohmann::json j = nlohmann::json::parse(result_summary_json(r));
  EXPECT_EQ(j["degree"], 2);
  EXPECT_EQ(j["gamma"].size(), 3u);
  EXPECT_TRUE(j["physicality"]["ok"].get<bool>());
  EXPECT_NEAR(j["estimate"].get<double>(), r.extrapolation.estimate, 0.0);
  EXPECT_EQ(j["config"]["name"], "mini");
}

}  // namespace
}  // namespace zne
