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

#include "zne_cli/cli.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "zne/bounds.hpp"
#include "zne/chebkit.hpp"
#include "zne/config.hpp"
#include "zne/error.hpp"
#include "zne/experiments.hpp"
#include "zne/extrap.hpp"
#include "zne/qsim.hpp"

namespace zne::cli {
namespace {

namespace fs = std::filesystem;

std::string g17(double v) {
  if (!std::isfinite(v)) return format_double(v);
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

int exit_code_for(ErrorCode code) {
  return code == ErrorCode::NumericalFailure ? kExitNumerical : kExitUsage;
}

std::string normalise(std::string s) {
  std::replace(s.begin(), s.end(), '-', '_');
  return s;
}

GammaBoundKind bound_kind_from(const std::string& method, const std::string& scheme) {
  const std::string m = normalise(method);
  if (m == "rich_equi" || m == "rich_equidistant") return GammaBoundKind::RichEquidistant;
  if (m == "rich_cheby" || m == "rich_chebyshev") return GammaBoundKind::RichChebyshev;
  if (m == "lsq" || m == "least_squares") return GammaBoundKind::LeastSquares;
  if (m.empty()) {
    return parse_node_scheme(scheme) == NodeScheme::Chebyshev ? GammaBoundKind::RichChebyshev
                                                               : GammaBoundKind::RichEquidistant;
  }
  throw Error(ErrorCode::InvalidArgument, "unknown method '" + method + "'");
}

NodeSet build_nodes(const std::string& scheme, std::size_t n, double b,
                    const std::vector<double>& values) {
  const NodeScheme s = parse_node_scheme(scheme);
  if (s == NodeScheme::Custom) {
    // B widens to cover the largest custom node.
    double hi = b;
    for (double v : values) hi = std::max(hi, v);
    return custom_nodes(values, Interval(hi));
  }
  const Interval iv(b);
  switch (s) {
    case NodeScheme::Equidistant: return equidistant_nodes(n, iv);
    case NodeScheme::Chebyshev: return chebyshev_nodes(n, iv);
    case NodeScheme::Custom: break;
  }
  return equidistant_nodes(n, iv);
}

GammaVector weights_for(const NodeSet& nodes, const std::string& method, std::size_t m) {
  const std::string k = normalise(method);
  if (k == "richardson") return richardson_gamma(nodes);
  if (k == "lsq" || k == "least_squares") return lsq_gamma(nodes, m);
  if (k == "lsq_general" || k == "least_squares_general") return lsq_gamma_general(nodes, m);
  throw Error(ErrorCode::InvalidArgument, "unknown method '" + method + "'");
}

void write_atomically(const fs::path& path, const std::string& content) {
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw Error(ErrorCode::ConfigError, "cannot write " + tmp.string());
    f << content;
    f.flush();
    if (!f) throw Error(ErrorCode::ConfigError, "write failed for " + tmp.string());
  }
  fs::rename(tmp, path);
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorCode::ConfigError, "cannot read " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

std::string verify_summary(const BoundsReport& rep) {
  nlohmann::json doc;
  doc["rows"] = rep.rows.size();
  doc["failures"] = rep.failures();
  doc["all_pass"] = rep.all_pass();
  nlohmann::json failed = nlohmann::json::array();
  for (const BoundCheckRow& r : rep.rows) {
    if (!r.pass) {
      failed.push_back({{"check", r.check}, {"family", r.family}, {"params", r.params},
                        {"measured", r.measured}, {"bound", r.bound}});
    }
  }
  doc["failed_rows"] = failed;
  return doc.dump(2);
}

struct Options {
  // nodes / gamma
  std::string scheme = "equidistant";
  std::size_t n = 0;
  double b = 2.0;
  std::vector<double> values;
  std::string method = "richardson";
  std::size_t m = 0;
  // bounds
  std::string kind;
  std::string bound_method;
  double c = 1.0;
  double big_m = 0.0;
  double eps = 0.1;
  double delta = 0.05;
  double alpha = 1.0;
  double mu = 0.5;
  double theta = 0.0;
  double lambda = 0.0;
  double shots_real = 0.0;
  double gamma_l1 = 1.0;
  double lambda0 = 0.0;
  double lindblad = 1.0;
  double t = 1.0;
  // extrapolate
  std::string input;
  // simulate
  std::size_t qubits = 5;
  double coupling = 3.0;
  double field = 2.0;
  std::size_t steps = 10;
  double x = 1.0;
  std::string noise_model = "per_step";
  std::string pauli = "X";
  std::size_t qubit = 0;
  std::uint64_t shots = 0;
  std::uint64_t seed = 0;
  // experiment / verify
  std::string config;
  std::string out_dir = ".";
  std::optional<std::uint64_t> seed_override;
  std::size_t trials = 2000;
  std::string out_file;
};

int cmd_nodes(const Options& o, std::ostream& out) {
  const NodeSet ns = build_nodes(o.scheme, o.n, o.b, o.values);
  for (double x : ns.nodes()) out << g17(x) << '\n';
  return kExitOk;
}

int cmd_gamma(const Options& o, std::ostream& out) {
  const NodeSet ns = build_nodes(o.scheme, o.n, o.b, o.values);
  const GammaVector g = weights_for(ns, o.method, o.m);
  out << "x,gamma\n";
  for (std::size_t i = 0; i < g.size(); ++i) out << g17(ns[i]) << ',' << g17(g[i]) << '\n';
  out << "# l1_norm " << g17(g.l1_norm()) << " sum " << g17(g.sum()) << '\n';
  return kExitOk;
}

void print_bound(std::ostream& out, const BoundValue& v, const char* tag) {
  out << g17(v.value);
  if (!v.ok()) out << ' ' << to_string(v.status);
  out << ' ' << tag << '\n';
}

int cmd_bounds(const Options& o, std::ostream& out) {
  const std::string kind = normalise(o.kind);
  const GevreyParams gp{o.c, o.big_m};
  const Interval iv(o.b);
  if (kind == "bias_interp") {
    const NodeSet ns = build_nodes(o.scheme, o.n, o.b, o.values);
    print_bound(out, bias_bound_interp(gp, ns),
                ns.scheme() == NodeScheme::Chebyshev ? "bias-chebyshev" : "bias-equidistant");
  } else if (kind == "cheb_majorant") {
    print_bound(out, chebyshev_bias_majorant(gp, o.n, iv), "bias-chebyshev");
  } else if (kind == "bias_lsq") {
    print_bound(out, bias_bound_lsq(gp, o.n, o.m, iv), "lsq-bias");
  } else if (kind == "nodes_required") {
    const NodeScheme scheme = parse_node_scheme(o.scheme);
    const NodeCount nc = nodes_required(o.eps, gp, iv, scheme);
    out << nc.n;
    if (nc.status != BoundStatus::Ok) out << ' ' << to_string(nc.status) << " a=" << g17(nc.base_a);
    out << ' ' << (scheme == NodeScheme::Chebyshev ? "bias-chebyshev" : "bias-equidistant") << '\n';
  } else if (kind == "gamma_l1") {
    const GammaBoundKind k = bound_kind_from(o.bound_method, o.scheme);
    const std::size_t deg = k == GammaBoundKind::LeastSquares ? o.m : o.n;
    const char* tag = k == GammaBoundKind::RichEquidistant ? "gamma-equidistant"
                      : k == GammaBoundKind::RichChebyshev ? "gamma-chebyshev"
                                                           : "lsq-gamma";
    out << g17(gamma_l1_bound(deg, iv, k)) << ' ' << tag << '\n';
  } else if (kind == "samples") {
    ComplexityQuery q;
    q.epsilon = o.eps;
    q.delta = o.delta;
    q.alpha = o.alpha;
    q.interval = iv;
    q.method = bound_kind_from(o.bound_method, o.scheme);
    const bool lsq = q.method == GammaBoundKind::LeastSquares;
    print_bound(out, sample_complexity(q, lsq ? o.m : o.n), lsq ? "lsq-samples" : "hoeffding");
  } else if (kind == "hoeffding") {
    out << g17(hoeffding_failure_prob(o.eps, o.shots_real, o.alpha, o.gamma_l1)) << " hoeffding\n";
  } else if (kind == "lsq_degree") {
    const LsqDegree d = lsq_degree_required(o.eps, gp, iv, o.mu);
    out << d.m << " lsq-degree\n";
    out << "c_prime " << g17(d.c_prime) << " lsq-degree\n";
  } else if (kind == "trotter_nodes") {
    out << trotter_nodes_required(o.eps, iv, o.theta, o.lambda) << " trotter-nodes\n";
  } else if (kind == "gevrey_m") {
    out << g17(gevrey_m_for_qem(o.lambda0, o.lindblad, o.t)) << " gevrey\n";
  } else {
    throw Error(ErrorCode::InvalidArgument, "unknown bound kind '" + o.kind + "'");
  }
  return kExitOk;
}

int cmd_extrapolate(const Options& o, std::ostream& out) {
  std::istringstream in(read_file(o.input));
  std::string line;
  std::vector<Measurement> ms;
  bool header = true;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (header) {
      header = false;
      if (line.rfind("x,", 0) == 0) continue;
    }
    std::istringstream row(line);
    std::string cell;
    std::vector<std::string> cells;
    while (std::getline(row, cell, ',')) cells.push_back(cell);
    if (cells.size() != 4) {
      throw Error(ErrorCode::ConfigError, "expected x,estimate,sigma,shots per row");
    }
    try {
      Measurement m;
      m.node = std::stod(cells[0]);
      m.estimate = std::stod(cells[1]);
      m.sigma = std::stod(cells[2]);
      m.shots = std::stoull(cells[3]);
      ms.push_back(m);
    } catch (const std::logic_error&) {
      throw Error(ErrorCode::ConfigError, "unparsable row '" + line + "'");
    }
  }
  if (ms.empty()) throw Error(ErrorCode::ConfigError, "no measurements in " + o.input);
  std::vector<double> xs;
  for (const Measurement& m : ms) xs.push_back(m.node);
  const double hi = *std::max_element(xs.begin(), xs.end());
  const NodeSet ns = custom_nodes(xs, Interval(std::max(o.b, hi > 1.0 ? hi : 2.0)));
  std::sort(ms.begin(), ms.end(),
            [](const Measurement& a, const Measurement& b) { return a.node < b.node; });
  const std::string method = normalise(o.method) == "lsq" ? "lsq_general" : o.method;
  const ExtrapolationResult r = extrapolate(ms, weights_for(ns, method, o.m));
  nlohmann::json doc;
  doc["estimate"] = r.estimate;
  doc["variance"] = r.variance;
  doc["standard_error"] = r.standard_error();
  doc["gamma_l1"] = r.gamma.l1_norm();
  doc["gamma"] = std::vector<double>(r.gamma.weights().begin(), r.gamma.weights().end());
  out << doc.dump(2) << '\n';
  return kExitOk;
}

int cmd_simulate(const Options& o, std::ostream& out) {
  EvolutionSpec s;
  s.tfim = {o.qubits, o.coupling, o.field};
  s.t_final = o.t;
  s.trotter_steps = o.steps;
  s.noise_base = o.lambda0;
  s.noise_scale = o.x;
  s.noise_model = parse_noise_model(normalise(o.noise_model));
  const PauliObservable obs{parse_pauli(o.pauli), o.qubit};
  const DensityMatrix rho = trotter2_evolve(s);
  const double e = expectation(rho, obs);
  const PhysicalityReport phys = check_physical(rho);
  EvolutionSpec clean = s;
  clean.noise_base = 0.0;
  nlohmann::json doc;
  doc["trotter_expectation"] = e;
  doc["exact_expectation"] = exact_expectation(clean, obs);
  doc["damping_factor"] = s.damping_factor();
  doc["purity"] = rho.purity();
  doc["physicality"] = {{"hermiticity_error", phys.hermiticity_error},
                        {"trace_error", phys.trace_error},
                        {"min_eigenvalue", phys.min_eigenvalue},
                        {"ok", phys.ok()}};
  if (o.shots > 0) {
    const Measurement m = sample_shots(e, o.shots, o.seed);
    doc["sampled"] = {{"estimate", m.estimate}, {"sigma", m.sigma}, {"shots", m.shots},
                      {"seed", m.seed}};
  }
  out << doc.dump(2) << '\n';
  return kExitOk;
}

int cmd_experiment(const Options& o, std::ostream& out) {
  ExperimentConfig cfg = parse_config(read_file(o.config));
  if (o.seed_override) cfg.seed = *o.seed_override;
  const fs::path dir(o.out_dir);
  fs::create_directories(dir);
  if (cfg.kind == ExperimentKind::VerifyBounds) {
    const BoundsReport rep = verify_bounds_suite({o.trials, cfg.seed});
    const std::string summary = verify_summary(rep);
    write_atomically(dir / (cfg.name + ".csv"), bounds_report_csv(rep));
    write_atomically(dir / (cfg.name + ".json"), summary + '\n');
    out << summary << '\n';
    return rep.all_pass() ? kExitOk : kExitNumerical;
  }
  const ExperimentResult res = run_experiment(cfg);
  const std::string summary = result_summary_json(res);
  write_atomically(dir / (cfg.name + ".csv"), result_csv(res));
  if (!res.sweep.empty()) write_atomically(dir / (cfg.name + "_sweep.csv"), sweep_csv(res));
  write_atomically(dir / (cfg.name + ".json"), summary + '\n');
  out << summary << '\n';
  return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const BoundsReport rep = verify_bounds_suite({o.trials, o.seed_override.value_or(7)});
  if (!o.out_file.empty()) write_atomically(o.out_file, bounds_report_csv(rep));
  std::vector<std::pair<std::string, std::string>> groups;
  for (const BoundCheckRow& r : rep.rows) {
    const std::pair<std::string, std::string> key{r.check, r.family};
    if (std::find(groups.begin(), groups.end(), key) == groups.end()) groups.push_back(key);
  }
  for (const auto& [check, family] : groups) {
    std::size_t total = 0;
    std::size_t passed = 0;
    double worst = std::numeric_limits<double>::infinity();
    for (const BoundCheckRow& r : rep.rows) {
      if (r.check != check) continue;
      ++total;
      passed += r.pass ? 1 : 0;
      worst = std::min(worst, r.margin());
    }
    out << check << ' ' << passed << '/' << total << " min_margin=" << g17(worst) << ' '
        << family << '\n';
  }
  out << (rep.all_pass() ? "all bounds hold" : "BOUND VIOLATION") << '\n';
  return rep.all_pass() ? kExitOk : kExitNumerical;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Zero-noise extrapolation toolkit: nodes, weights, bounds, simulation, experiments",
               "zne"};
  app.require_subcommand(1);
  Options o;

  auto* nodes = app.add_subcommand("nodes", "Print extrapolation nodes, one per line");
  nodes->add_option("--scheme", o.scheme, "equidistant | chebyshev | custom");
  nodes->add_option("--n", o.n, "Index of the last node (n + 1 nodes)")->required();
  nodes->add_option("--b", o.b, "Upper end B of the interval [1, B]");

  auto* gamma = app.add_subcommand("gamma", "Print extrapolation weights as CSV");
  gamma->add_option("--scheme", o.scheme, "equidistant | chebyshev | custom");
  gamma->add_option("--n", o.n, "Index of the last node");
  gamma->add_option("--b", o.b, "Upper end B of the interval");
  gamma->add_option("--values", o.values, "Custom nodes")->delimiter(',');
  gamma->add_option("--method", o.method, "richardson | lsq | lsq-general");
  gamma->add_option("--m", o.m, "Least-squares degree");

  auto* bounds = app.add_subcommand("bounds", "Evaluate a bound calculator");
  bounds->add_option("--kind", o.kind,
                     "bias-interp | cheb-majorant | bias-lsq | nodes-required | gamma-l1 | "
                     "samples | hoeffding | lsq-degree | trotter-nodes | gevrey-m")
      ->required();
  bounds->add_option("--method", o.bound_method, "rich-equi | rich-cheby | lsq");
  bounds->add_option("--scheme", o.scheme, "equidistant | chebyshev | custom");
  bounds->add_option("--n", o.n, "Node index n");
  bounds->add_option("--m", o.m, "Least-squares degree m");
  bounds->add_option("--b", o.b, "Interval end B");
  bounds->add_option("--values", o.values, "Custom nodes")->delimiter(',');
  bounds->add_option("--c", o.c, "Derivative prefactor C");
  bounds->add_option("--M", o.big_m, "Derivative growth rate M");
  bounds->add_option("--eps", o.eps, "Target accuracy epsilon");
  bounds->add_option("--delta", o.delta, "Failure probability delta");
  bounds->add_option("--alpha", o.alpha, "Observable norm bound alpha");
  bounds->add_option("--mu", o.mu, "Exponent mu in (0, 1)");
  bounds->add_option("--theta", o.theta, "Trotter remainder growth theta");
  bounds->add_option("--lambda", o.lambda, "Noise strength lambda");
  bounds->add_option("--shots", o.shots_real, "Shots per node");
  bounds->add_option("--gamma-l1", o.gamma_l1, "Weight norm");
  bounds->add_option("--lambda0", o.lambda0, "Base noise lambda0");
  bounds->add_option("--lindblad", o.lindblad, "Lindbladian norm l");
  bounds->add_option("--t", o.t, "Evolution time T");

  auto* extra = app.add_subcommand("extrapolate", "Extrapolate a CSV of measurements to x = 0");
  extra->add_option("--input", o.input, "CSV with columns x,estimate,sigma,shots")->required();
  extra->add_option("--method", o.method, "richardson | lsq");
  extra->add_option("--m", o.m, "Least-squares degree");
  extra->add_option("--b", o.b, "Interval end B (defaults to the largest x)");

  auto* sim = app.add_subcommand("simulate", "Run one noisy Trotter evolution");
  sim->add_option("--qubits", o.qubits, "Chain length L");
  sim->add_option("--coupling", o.coupling, "ZZ coupling J");
  sim->add_option("--field", o.field, "Transverse field h");
  sim->add_option("--t", o.t, "Evolution time T");
  sim->add_option("--steps", o.steps, "Trotter steps N_T");
  sim->add_option("--lambda0", o.lambda0, "Base noise lambda0");
  sim->add_option("--x", o.x, "Noise scale x");
  sim->add_option("--noise-model", o.noise_model, "per-step | rate");
  sim->add_option("--pauli", o.pauli, "X | Y | Z");
  sim->add_option("--qubit", o.qubit, "Observable qubit");
  sim->add_option("--shots", o.shots, "Shots to sample (0 for none)");
  sim->add_option("--seed", o.seed, "Sampling seed");

  auto* exp = app.add_subcommand("experiment", "Run an experiment from a JSON config");
  exp->add_option("--config", o.config, "Config file")->required();
  exp->add_option("--out", o.out_dir, "Output directory");
  exp->add_option("--seed", o.seed_override, "Override the config seed");
  exp->add_option("--trials", o.trials, "Monte Carlo trials for verify_bounds configs");

  auto* ver = app.add_subcommand("verify", "Run the bound verification suite");
  ver->add_option("--trials", o.trials, "Hoeffding Monte Carlo trials");
  ver->add_option("--seed", o.seed_override, "Monte Carlo seed");
  ver->add_option("--out", o.out_file, "Write the full report CSV here");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (nodes->parsed()) return cmd_nodes(o, out);
    if (gamma->parsed()) return cmd_gamma(o, out);
    if (bounds->parsed()) return cmd_bounds(o, out);
    if (extra->parsed()) return cmd_extrapolate(o, out);
    if (sim->parsed()) return cmd_simulate(o, out);
    if (exp->parsed()) return cmd_experiment(o, out);
    if (ver->parsed()) return cmd_verify(o, out);
  } catch (const Error& e) {
    err << "zne: " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const fs::filesystem_error& e) {
    err << "zne: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace zne::cli
