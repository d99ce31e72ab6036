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

#pragma once

// Versioned JSON experiment configuration and result serialisation. The
// schema is documented in README.md; unknown keys are rejected.

#include <string>
#include <string_view>

#include "zne/experiments.hpp"

namespace zne {

inline constexpr int kConfigSchemaVersion = 1;

/// Parses and validates a configuration document. Throws Error(ConfigError).
ExperimentConfig parse_config(std::string_view json_text);

/// Canonical JSON for a configuration (round-trips through parse_config).
std::string config_to_json(const ExperimentConfig& config, int indent = 2);

/// Per-node CSV with header `x,estimate,sigma,shots`.
std::string result_csv(const ExperimentResult& result);

/// Summary JSON with keys estimate, variance, bias_bound, exact_reference,
/// gamma_l1 and config, plus kind-specific extras.
std::string result_summary_json(const ExperimentResult& result);

/// Degree sweep table `m,estimate,abs_error,standard_error,rms_error`.
std::string sweep_csv(const ExperimentResult& result);

/// Bound report table `check,family,params,measured,bound,margin,pass`.
std::string bounds_report_csv(const BoundsReport& report);

/// Shortest decimal that parses back to the same double.
std::string format_double(double v);

}  // namespace zne
