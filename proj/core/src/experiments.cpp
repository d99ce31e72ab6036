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

#include "zne/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "zne/error.hpp"
#include "zne/rng.hpp"

namespace zne {
namespace {

struct PhysicalityTracker {
  PhysicalityReport worst{0.0, 0.0, std::numeric_limits<double>::infinity()};
  bool any = false;

  void add(const PhysicalityReport& r) {
    worst.hermiticity_error = std::max(worst.hermiticity_error, r.hermiticity_error);
    worst.trace_error = std::max(worst.trace_error, r.trace_error);
    worst.min_eigenvalue = std::min(worst.min_eigenvalue, r.min_eigenvalue);
    any = true;
  }
  PhysicalityReport result() const {
    PhysicalityReport r = worst;
    if (!any) r.min_eigenvalue = 0.0;
    return r;
  }
};

double evolve_and_measure(const EvolutionSpec& evo, const PauliObservable& obs,
                          PhysicalityTracker& tracker) {
  const DensityMatrix rho = trotter2_evolve(evo);
  tracker.add(check_physical(rho));
  return expectation(rho, obs);
}

Measurement measure(double exact, double x, const ExperimentConfig& cfg, std::size_t j) {
  const std::uint64_t seed = derive_seed(cfg.seed, j);
  Measurement m;
  if (cfg.shot_free) {
    m.estimate = exact;
    m.shots = cfg.shots;
    m.sigma = std::sqrt(std::max(0.0, 1.0 - exact * exact));
    m.seed = seed;
  } else {
    m = sample_shots(exact, cfg.shots, seed);
  }
  m.node = x;
  return m;
}

double continuous_reference(const ExperimentConfig& cfg) {
  EvolutionSpec evo = cfg.evolution;
  evo.noise_base = 0.0;
  evo.noise_scale = 1.0;
  return exact_expectation(evo, cfg.observable);
}

// Scans the noise axis of config.nodes at the configured step count.
std::vector<NodeRow> scan_rows(const ExperimentConfig& cfg, const NodeSet& nodes,
                               PhysicalityTracker& tracker) {
  std::vector<NodeRow> rows;
  rows.reserve(nodes.size());
  for (std::size_t j = 0; j < nodes.size(); ++j) {
    EvolutionSpec evo = cfg.evolution;
    evo.noise_scale = nodes[j];
    NodeRow row;
    row.x = nodes[j];
    row.trotter_steps = evo.trotter_steps;
    row.exact_value = evolve_and_measure(evo, cfg.observable, tracker);
    row.measurement = measure(row.exact_value, row.x, cfg, j);
    rows.push_back(row);
  }
  return rows;
}

std::vector<Measurement> measurements_of(const std::vector<NodeRow>& rows) {
  std::vector<Measurement> out;
  out.reserve(rows.size());
  for (const NodeRow& r : rows) out.push_back(r.measurement);
  return out;
}

ExperimentResult make_result(const ExperimentConfig& cfg, ExtrapolationResult ex,
                             std::vector<NodeRow> rows) {
  return ExperimentResult{cfg,          std::move(ex), std::move(rows), 0.0, std::nullopt,
                          {},           {},            std::nullopt,    std::nullopt};
}

void attach_hoeffding(ExperimentResult& res) {
  const double g = res.extrapolation.gamma.l1_norm();
  if (g > 0.0) {
    res.hoeffding_failure = hoeffding_failure_prob(
        res.config.hoeffding_epsilon, static_cast<double>(res.config.shots), 1.0, g);
  }
}

GammaVector lsq_weights(const NodeSet& nodes, std::size_t m) {
  if (nodes.scheme() == NodeScheme::Chebyshev) return lsq_gamma(nodes, m);
  return lsq_gamma_general(nodes, m);
}

// Interval that contains every x in `xs` (all >= 1). A single node at x = 1
// still needs a non-degenerate interval.
Interval covering_interval(const std::vector<double>& xs) {
  const double hi = *std::max_element(xs.begin(), xs.end());
  return Interval(hi > 1.0 ? hi : 2.0);
}

void require_kind(const ExperimentConfig& cfg, ExperimentKind kind) {
  if (cfg.kind != kind) {
    throw Error(ErrorCode::InvalidArgument, "config kind is " +
                                                std::string(to_string(cfg.kind)) +
                                                ", expected " + std::string(to_string(kind)));
  }
}

}  // namespace

std::string_view to_string(ExperimentKind kind) noexcept {
  switch (kind) {
    case ExperimentKind::Richardson: return "richardson";
    case ExperimentKind::LeastSquares: return "least_squares";
    case ExperimentKind::DegreeSweep: return "degree_sweep";
    case ExperimentKind::TrotterOnly: return "trotter_only";
    case ExperimentKind::Joint: return "joint";
    case ExperimentKind::PilotAllocate: return "pilot_allocate";
    case ExperimentKind::VerifyBounds: return "verify_bounds";
  }
  return "richardson";
}

ExperimentKind parse_experiment_kind(std::string_view name) {
  for (ExperimentKind k :
       {ExperimentKind::Richardson, ExperimentKind::LeastSquares, ExperimentKind::DegreeSweep,
        ExperimentKind::TrotterOnly, ExperimentKind::Joint, ExperimentKind::PilotAllocate,
        ExperimentKind::VerifyBounds}) {
    if (to_string(k) == name) return k;
  }
  throw Error(ErrorCode::InvalidArgument, "unknown experiment kind '" + std::string(name) + "'");
}

NodeSet NodeSpec::build() const {
  const Interval iv(b_max);
  switch (scheme) {
    case NodeScheme::Equidistant: return equidistant_nodes(n, iv);
    case NodeScheme::Chebyshev: return chebyshev_nodes(n, iv);
    case NodeScheme::Custom: return custom_nodes(values, iv);
  }
  return equidistant_nodes(n, iv);
}

void ExperimentConfig::validate() const {
  if (name.empty()) throw Error(ErrorCode::InvalidArgument, "experiment name is empty");
  if (kind == ExperimentKind::VerifyBounds) return;
  evolution.validate();
  if (observable.qubit >= evolution.tfim.num_qubits) {
    throw Error(ErrorCode::InvalidArgument, "observable qubit outside the register");
  }
  if (shots == 0) throw Error(ErrorCode::InvalidArgument, "shots must be at least 1");
  if (!(hoeffding_epsilon > 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "hoeffding_epsilon must be positive");
  }
  switch (kind) {
    case ExperimentKind::Richardson: (void)nodes.build(); break;
    case ExperimentKind::LeastSquares:
    case ExperimentKind::PilotAllocate: {
      const NodeSet ns = nodes.build();
      if (degree > ns.degree()) {
        throw Error(ErrorCode::DegreeExceedsNodes, "degree exceeds the node index n");
      }
      if (kind == ExperimentKind::PilotAllocate && !(pilot_fraction > 0.0 && pilot_fraction <= 1.0)) {
        throw Error(ErrorCode::InvalidArgument, "pilot_fraction must lie in (0, 1]");
      }
      break;
    }
    case ExperimentKind::DegreeSweep: {
      const NodeSet ns = nodes.build();
      if (degree_min > degree_max || degree_max > ns.degree()) {
        throw Error(ErrorCode::DegreeExceedsNodes, "degree range must lie inside [0, n]");
      }
      break;
    }
    case ExperimentKind::TrotterOnly:
      if (step_counts.empty()) {
        throw Error(ErrorCode::InvalidArgument, "trotter_only needs step_counts");
      }
      if (evolution.noise_base != 0.0) {
        throw Error(ErrorCode::InvalidArgument, "trotter_only runs without physical noise");
      }
      break;
    case ExperimentKind::Joint:
      if (!joint || joint->step_counts.empty()) {
        throw Error(ErrorCode::InvalidArgument, "joint needs a schedule with step counts");
      }
      if (!(joint->c > 0.0)) throw Error(ErrorCode::InvalidArgument, "joint c must be positive");
      if (!(evolution.noise_base > 0.0)) {
        throw Error(ErrorCode::InvalidArgument, "joint needs a positive noise_base");
      }
      break;
    case ExperimentKind::VerifyBounds: break;
  }
  for (std::size_t s : step_counts) {
    if (s == 0) throw Error(ErrorCode::InvalidArgument, "step counts must be positive");
  }
}

GevreyParams gevrey_params_for(const EvolutionSpec& evo) {
  GevreyParams p;
  p.c = 1.0;
  if (evo.noise_model == NoiseModel::Rate) {
    p.m_rate = gevrey_m_for_qem(evo.noise_base, 1.0, evo.t_final);
  } else {
    p.m_rate = gevrey_m_for_qem(evo.noise_base, 1.0, static_cast<double>(evo.trotter_steps));
  }
  return p;
}

ExperimentResult run_richardson_experiment(const ExperimentConfig& config) {
  config.validate();
  const NodeSet nodes = config.nodes.build();
  PhysicalityTracker tracker;
  std::vector<NodeRow> rows = scan_rows(config, nodes, tracker);
  const std::vector<Measurement> ms = measurements_of(rows);
  ExperimentResult res = make_result(config, extrapolate(ms, richardson_gamma(nodes)), std::move(rows));
  res.exact_reference = continuous_reference(config);
  const BoundValue bias = bias_bound_interp(gevrey_params_for(config.evolution), nodes);
  res.extrapolation.bias_bound = bias.value;
  attach_hoeffding(res);
  res.worst_physicality = tracker.result();
  return res;
}

ExperimentResult run_lsq_experiment(const ExperimentConfig& config) {
  config.validate();
  const NodeSet nodes = config.nodes.build();
  PhysicalityTracker tracker;
  std::vector<NodeRow> rows = scan_rows(config, nodes, tracker);
  const std::vector<Measurement> ms = measurements_of(rows);
  ExperimentResult res = make_result(config, extrapolate(ms, lsq_weights(nodes, config.degree)),
                       std::move(rows));
  res.exact_reference = continuous_reference(config);
  if (nodes.scheme() == NodeScheme::Chebyshev) {
    const BoundValue b = bias_bound_lsq(gevrey_params_for(config.evolution), nodes.degree(),
                                        config.degree, nodes.interval());
    if (b.ok()) res.extrapolation.bias_bound = b.value;
  }
  attach_hoeffding(res);
  res.worst_physicality = tracker.result();
  return res;
}

ExperimentResult degree_sweep(const ExperimentConfig& config) {
  config.validate();
  const NodeSet nodes = config.nodes.build();
  PhysicalityTracker tracker;
  std::vector<NodeRow> rows = scan_rows(config, nodes, tracker);
  const std::vector<Measurement> ms = measurements_of(rows);
  std::vector<double> exact(rows.size());
  std::vector<double> exact_sigma(rows.size());
  for (std::size_t j = 0; j < rows.size(); ++j) {
    exact[j] = rows[j].exact_value;
    exact_sigma[j] = std::sqrt(std::max(0.0, 1.0 - exact[j] * exact[j]));
  }
  const double reference = continuous_reference(config);
  const std::size_t chosen = std::clamp(config.degree, config.degree_min, config.degree_max);

  std::vector<SweepRow> sweep;
  std::optional<ExtrapolationResult> kept;
  for (std::size_t m = config.degree_min; m <= config.degree_max; ++m) {
    const GammaVector g = lsq_weights(nodes, m);
    const ExtrapolationResult r = extrapolate(ms, g);
    double var_exact = 0.0;
    for (std::size_t j = 0; j < g.size(); ++j) {
      var_exact += g[j] * g[j] * exact_sigma[j] * exact_sigma[j] / static_cast<double>(config.shots);
    }
    const double bias = extrapolate_values(exact, g) - reference;
    sweep.push_back({m, r.estimate, std::abs(r.estimate - reference), r.standard_error(),
                     std::sqrt(bias * bias + var_exact)});
    if (m == chosen) kept = r;
  }
  ExperimentResult res = make_result(config, *kept, std::move(rows));
  res.exact_reference = reference;
  res.sweep = std::move(sweep);
  attach_hoeffding(res);
  res.worst_physicality = tracker.result();
  return res;
}

ExperimentResult run_trotter_only(const ExperimentConfig& config) {
  config.validate();
  require_kind(config, ExperimentKind::TrotterOnly);
  const std::size_t n_max = *std::max_element(config.step_counts.begin(), config.step_counts.end());
  std::vector<double> xs;
  for (std::size_t s : config.step_counts) {
    xs.push_back(static_cast<double>(n_max) / static_cast<double>(s));
  }
  const NodeSet nodes = custom_nodes(xs, covering_interval(xs));

  // custom_nodes sorts by x, i.e. by decreasing step count.
  PhysicalityTracker tracker;
  std::vector<NodeRow> rows;
  for (std::size_t j = 0; j < nodes.size(); ++j) {
    EvolutionSpec evo = config.evolution;
    evo.noise_scale = 0.0;
    evo.trotter_steps = static_cast<std::size_t>(std::llround(static_cast<double>(n_max) / nodes[j]));
    NodeRow row;
    row.x = nodes[j];
    row.trotter_steps = evo.trotter_steps;
    row.exact_value = evolve_and_measure(evo, config.observable, tracker);
    row.measurement = measure(row.exact_value, row.x, config, j);
    rows.push_back(row);
  }
  const std::size_t m = std::min(config.degree, nodes.degree());
  const std::vector<Measurement> ms = measurements_of(rows);
  ExperimentResult res = make_result(config, extrapolate(ms, lsq_gamma_general(nodes, m)), std::move(rows));
  res.exact_reference = continuous_reference(config);
  attach_hoeffding(res);
  res.worst_physicality = tracker.result();
  return res;
}

ExperimentResult run_joint(const ExperimentConfig& config) {
  config.validate();
  require_kind(config, ExperimentKind::Joint);
  const JointSchedule& js = *config.joint;
  const double lambda0 = config.evolution.noise_base;
  const double t = config.evolution.t_final;

  std::vector<double> xs;
  std::vector<std::size_t> steps_of_x;
  for (std::size_t s : js.step_counts) {
    const double tau = t / static_cast<double>(s);
    double x = js.c * tau * tau / lambda0;
    if (x < 1.0 - 1e-12) {
      throw Error(ErrorCode::ScheduleViolation,
                  "N_T = " + std::to_string(s) + " gives x = " + std::to_string(x) + " < 1");
    }
    xs.push_back(std::max(x, 1.0));
  }
  const NodeSet nodes = custom_nodes(xs, covering_interval(xs));

  PhysicalityTracker tracker;
  std::vector<NodeRow> rows;
  for (std::size_t j = 0; j < nodes.size(); ++j) {
    // Nodes are sorted by x, i.e. by decreasing step count.
    std::size_t steps = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      if (xs[i] == nodes[j]) steps = js.step_counts[i];
    }
    EvolutionSpec evo = config.evolution;
    evo.trotter_steps = steps;
    evo.noise_scale = nodes[j];
    NodeRow row;
    row.x = nodes[j];
    row.trotter_steps = steps;
    row.exact_value = evolve_and_measure(evo, config.observable, tracker);
    row.measurement = measure(row.exact_value, row.x, config, j);
    rows.push_back(row);
  }
  const std::size_t m = std::min(config.degree, nodes.degree());
  const std::vector<Measurement> ms = measurements_of(rows);
  ExperimentResult res = make_result(config, extrapolate(ms, lsq_gamma_general(nodes, m)), std::move(rows));
  res.exact_reference = continuous_reference(config);
  attach_hoeffding(res);
  res.worst_physicality = tracker.result();
  return res;
}

ExperimentResult pilot_then_allocate(const ExperimentConfig& config, double pilot_fraction) {
  config.validate();
  if (!(pilot_fraction > 0.0 && pilot_fraction <= 1.0)) {
    throw Error(ErrorCode::InvalidArgument, "pilot_fraction must lie in (0, 1]");
  }
  const NodeSet nodes = config.nodes.build();
  const GammaVector gamma = config.degree >= nodes.degree() ? richardson_gamma(nodes)
                                                            : lsq_weights(nodes, config.degree);
  PhysicalityTracker tracker;
  ExperimentConfig uniform_cfg = config;
  uniform_cfg.shot_free = false;
  std::vector<NodeRow> rows = scan_rows(uniform_cfg, nodes, tracker);

  const std::size_t count = nodes.size();
  const std::uint64_t total = config.shots * count;
  const std::uint64_t pilot = std::clamp<std::uint64_t>(
      static_cast<std::uint64_t>(std::floor(pilot_fraction * static_cast<double>(config.shots))),
      1, config.shots);

  // Uniform reference run: the rows already hold it (child seed j, `shots` each).
  std::vector<Measurement> uniform = measurements_of(rows);
  const double uniform_variance = extrapolate(uniform, gamma).variance;

  // Pilot and phase-two draws share a Philox stream per node, so a pilot
  // fraction of one reproduces the uniform run exactly.
  std::vector<Measurement> pilot_ms;
  std::vector<std::uint64_t> pilot_plus(count);
  std::vector<double> sigmas(count);
  for (std::size_t j = 0; j < count; ++j) {
    Philox4x32 rng(derive_seed(config.seed, j));
    const double p_plus = std::clamp((1.0 + rows[j].exact_value) / 2.0, 0.0, 1.0);
    pilot_plus[j] = sample_binomial(rng, pilot, p_plus);
    Measurement m;
    m.node = nodes[j];
    m.shots = pilot;
    m.seed = derive_seed(config.seed, j);
    m.estimate = 2.0 * static_cast<double>(pilot_plus[j]) / static_cast<double>(pilot) - 1.0;
    m.sigma = std::sqrt(std::max(0.0, 1.0 - m.estimate * m.estimate));
    sigmas[j] = m.sigma;
    pilot_ms.push_back(m);
  }
  const double pilot_variance = extrapolate(pilot_ms, gamma).variance;

  std::vector<Measurement> final_ms = pilot_ms;
  const std::uint64_t remaining = total - pilot * count;
  if (pilot < config.shots && remaining >= count) {
    std::vector<std::uint64_t> extra(count, remaining / count);
    try {
      extra = optimal_allocation(gamma, sigmas, remaining).per_node;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::ZeroVarianceInput) throw;
      for (std::size_t j = 0; j < remaining % count; ++j) ++extra[j];
    }
    for (std::size_t j = 0; j < count; ++j) {
      Philox4x32 rng(derive_seed(config.seed, j), 1);
      const double p_plus = std::clamp((1.0 + rows[j].exact_value) / 2.0, 0.0, 1.0);
      const std::uint64_t k = pilot_plus[j] + sample_binomial(rng, extra[j], p_plus);
      Measurement& m = final_ms[j];
      m.shots = pilot + extra[j];
      m.estimate = 2.0 * static_cast<double>(k) / static_cast<double>(m.shots) - 1.0;
      m.sigma = std::sqrt(std::max(0.0, 1.0 - m.estimate * m.estimate));
    }
  }
  for (std::size_t j = 0; j < count; ++j) rows[j].measurement = final_ms[j];

  ExperimentResult res = make_result(config, extrapolate(final_ms, gamma), std::move(rows));
  res.exact_reference = continuous_reference(config);
  res.pilot_variance = pilot_variance;
  res.uniform_variance = uniform_variance;
  attach_hoeffding(res);
  res.worst_physicality = tracker.result();
  return res;
}

ExperimentResult run_experiment(const ExperimentConfig& config) {
  switch (config.kind) {
    case ExperimentKind::Richardson: return run_richardson_experiment(config);
    case ExperimentKind::LeastSquares: return run_lsq_experiment(config);
    case ExperimentKind::DegreeSweep: return degree_sweep(config);
    case ExperimentKind::TrotterOnly: return run_trotter_only(config);
    case ExperimentKind::Joint: return run_joint(config);
    case ExperimentKind::PilotAllocate: return pilot_then_allocate(config, config.pilot_fraction);
    case ExperimentKind::VerifyBounds: break;
  }
  throw Error(ErrorCode::InvalidArgument, "verify_bounds runs through verify_bounds_suite");
}

std::size_t BoundsReport::failures() const noexcept {
  return static_cast<std::size_t>(
      std::count_if(rows.begin(), rows.end(), [](const BoundCheckRow& r) { return !r.pass; }));
}

}  // namespace zne
