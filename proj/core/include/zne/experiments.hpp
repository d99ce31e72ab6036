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

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "zne/bounds.hpp"
#include "zne/chebkit.hpp"
#include "zne/extrap.hpp"
#include "zne/qsim.hpp"

namespace zne {

enum class ExperimentKind {
  Richardson,
  LeastSquares,
  DegreeSweep,
  TrotterOnly,
  Joint,
  PilotAllocate,
  VerifyBounds,
};

std::string_view to_string(ExperimentKind kind) noexcept;
ExperimentKind parse_experiment_kind(std::string_view name);

/// Recipe for a NodeSet; Custom uses `values`.
struct NodeSpec {
  NodeScheme scheme = NodeScheme::Equidistant;
  std::size_t n = 1;
  double b_max = 2.0;
  std::vector<double> values;

  NodeSet build() const;
};

/// Joint step-size/noise axis: lambda = c tau^2 and x = lambda / lambda0.
struct JointSchedule {
  double c = 100.0;
  std::vector<std::size_t> step_counts;
};

struct ExperimentConfig {
  std::string name = "experiment";
  ExperimentKind kind = ExperimentKind::Richardson;
  EvolutionSpec evolution;
  NodeSpec nodes;
  std::size_t degree = 0;
  std::size_t degree_min = 0;
  std::size_t degree_max = 0;
  std::uint64_t shots = 1000000;
  std::uint64_t seed = 0;
  PauliObservable observable;
  bool shot_free = false;
  /// Step counts of the tau axis for TrotterOnly.
  std::vector<std::size_t> step_counts;
  std::optional<JointSchedule> joint;
  double pilot_fraction = 0.2;
  /// Accuracy used for the attached Hoeffding prediction.
  double hoeffding_epsilon = 0.02;

  void validate() const;
};

/// One row of the per-node table.
struct NodeRow {
  double x = 0.0;
  double exact_value = 0.0;
  Measurement measurement;
  /// Trotter steps used for this node.
  std::size_t trotter_steps = 0;
};

struct SweepRow {
  std::size_t degree = 0;
  double estimate = 0.0;
  double abs_error = 0.0;
  double standard_error = 0.0;
  /// sqrt(bias^2 + propagated variance) evaluated on exact node values.
  double rms_error = 0.0;
};

struct ExperimentResult {
  ExperimentConfig config;
  ExtrapolationResult extrapolation;
  std::vector<NodeRow> rows;
  double exact_reference = 0.0;
  std::optional<double> hoeffding_failure;
  /// Worst physicality figures over every evolution the run performed.
  PhysicalityReport worst_physicality;
  std::vector<SweepRow> sweep;
  /// Pilot phase propagated variance (PilotAllocate only).
  std::optional<double> pilot_variance;
  /// Variance of a uniform allocation with the same total budget.
  std::optional<double> uniform_variance;
};

/// Degree-n Richardson on the scanned noise levels.
ExperimentResult run_richardson_experiment(const ExperimentConfig& config);

/// Closed-form least squares of degree `config.degree` on Chebyshev nodes
/// (general least squares on other schemes).
ExperimentResult run_lsq_experiment(const ExperimentConfig& config);

/// Least-squares degree sweep over [degree_min, degree_max] on one dataset.
ExperimentResult degree_sweep(const ExperimentConfig& config);

/// Noiseless Trotter-step extrapolation: nodes are x = tau / tau_min.
ExperimentResult run_trotter_only(const ExperimentConfig& config);

/// Joint step-size and noise extrapolation with lambda = c tau^2.
ExperimentResult run_joint(const ExperimentConfig& config);

/// Uniform pilot to estimate sigma_j, then optimal allocation of the rest of
/// the budget (shots * (n + 1) in total).
ExperimentResult pilot_then_allocate(const ExperimentConfig& config, double pilot_fraction);

/// Dispatches on config.kind (VerifyBounds excluded).
ExperimentResult run_experiment(const ExperimentConfig& config);

/// Gevrey parameters implied by the noise model: C = 1, M = N_T lambda0
/// (per-step) or lambda0 T (rate).
GevreyParams gevrey_params_for(const EvolutionSpec& evo);

struct BoundCheckRow {
  std::string check;
  std::string family;
  std::string params;
  double measured = 0.0;
  double bound = 0.0;
  bool pass = false;

  double margin() const noexcept { return bound - measured; }
};

struct BoundsReport {
  std::vector<BoundCheckRow> rows;

  std::size_t failures() const noexcept;
  bool all_pass() const noexcept { return failures() == 0; }
};

struct VerifyOptions {
  std::size_t hoeffding_trials = 2000;
  std::uint64_t seed = 7;
};

/// Grid of measured-vs-bound checks covering every bound calculator.
BoundsReport verify_bounds_suite(const VerifyOptions& options = {});

}  // namespace zne
