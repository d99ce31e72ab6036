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

// Acceptance suite: one PASS/FAIL line per criterion. The process exits 0
// only when the set of failing criteria equals the --expect-fail list.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "zne/bounds.hpp"
#include "zne/chebkit.hpp"
#include "zne/config.hpp"
#include "zne/experiments.hpp"
#include "zne/extrap.hpp"
#include "zne/qsim.hpp"
#include "zne/rng.hpp"

namespace {

using namespace zne;
using Clock = std::chrono::steady_clock;

constexpr double kTStar = 0.13640678814719542;
constexpr PauliObservable kX0{Pauli::X, 0};

struct Outcome {
  bool pass = true;
  std::string detail;
};

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

// Physicality over every evolution in criteria 3-8, plus noiseless purity.
struct Physicality {
  std::size_t evolutions = 0;
  double worst_herm = 0.0;
  double worst_trace = 0.0;
  double worst_eig = 1.0;
  std::size_t noiseless = 0;
  double worst_purity_gap = 0.0;

  void add(const PhysicalityReport& r) {
    ++evolutions;
    worst_herm = std::max(worst_herm, r.hermiticity_error);
    worst_trace = std::max(worst_trace, r.trace_error);
    worst_eig = std::min(worst_eig, r.min_eigenvalue);
  }
  double evolve(const EvolutionSpec& s, const PauliObservable& obs) {
    const DensityMatrix rho = trotter2_evolve(s);
    add(check_physical(rho));
    if (s.noiseless()) {
      ++noiseless;
      worst_purity_gap = std::max(worst_purity_gap, std::abs(rho.purity() - 1.0));
    }
    return expectation(rho, obs);
  }
};

Physicality g_phys;

EvolutionSpec operating_point(std::size_t steps, double lambda0) {
  EvolutionSpec s;
  s.tfim = {5, 3.0, 2.0};
  s.t_final = kTStar;
  s.trotter_steps = steps;
  s.noise_base = lambda0;
  return s;
}

ExperimentConfig load(const std::string& name) {
  std::ifstream in(std::string(ZNE_CONFIG_DIR) + "/" + name);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

// Runs a config, then replays each node evolution through the tracker so
// every density matrix feeding the criterion is checked.
ExperimentResult run_tracked(const ExperimentConfig& c) {
  ExperimentResult r = run_experiment(c);
  g_phys.add(r.worst_physicality);
  for (const NodeRow& row : r.rows) {
    EvolutionSpec s = c.evolution;
    if (row.trotter_steps != 0) s.trotter_steps = row.trotter_steps;
    if (c.kind == ExperimentKind::TrotterOnly) {
      s.noise_scale = 0.0;
    } else if (c.kind == ExperimentKind::Joint) {
      const double tau = s.tau();
      s.noise_base = c.joint->c * tau * tau;
      s.noise_scale = 1.0;
    } else {
      s.noise_scale = row.x;
    }
    g_phys.evolve(s, c.observable);
  }
  return r;
}

// sum_j f(x_j) l_j(0) in long double with compensated summation.
long double lagrange_at_zero(const std::vector<double>& xs, const std::function<long double(long double)>& f) {
  long double sum = 0.0L, comp = 0.0L;
  for (std::size_t j = 0; j < xs.size(); ++j) {
    long double w = 1.0L;
    for (std::size_t k = 0; k < xs.size(); ++k) {
      if (k != j) w *= static_cast<long double>(xs[k]) / (static_cast<long double>(xs[k]) - xs[j]);
    }
    const long double y = w * f(xs[j]) - comp;
    const long double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
  return sum;
}

Outcome criterion1() {
  Outcome o;
  const GammaVector g3 = richardson_gamma(custom_nodes({1.0, 2.0, 3.0}, Interval(3.0)));
  const bool exact3 = g3.size() == 3 && std::abs(g3[0] - 3) < 1e-15 && std::abs(g3[1] + 3) < 1e-15 &&
                      std::abs(g3[2] - 1) < 1e-15;
  o.detail = std::string("{1,2,3}->") + (exact3 ? "{3,-3,1}" : "wrong");
  o.pass = exact3;

  // Random valid NodeSets: scheme, n and B drawn uniformly, custom nodes sorted
  // uniform draws on [1, B].
  std::mt19937_64 gen(1);
  std::size_t sum_fail = 0, scaled_fail = 0;
  std::size_t by_scheme_fail[3] = {0, 0, 0}, by_scheme_total[3] = {0, 0, 0};
  double worst_sum = 0.0, worst_l1 = 0.0;
  for (int t = 0; t < 500; ++t) {
    const int scheme = static_cast<int>(gen() % 3);
    const std::size_t n = gen() % 21;
    const double b = std::uniform_real_distribution<double>(2.0, 30.0)(gen);
    const Interval iv(b);
    NodeSet ns = chebyshev_nodes(n, iv);
    if (scheme == 0 && n >= 1) ns = equidistant_nodes(n, iv);
    if (scheme == 2) {
      std::vector<double> xs;
      std::uniform_real_distribution<double> u(1.0, b);
      while (xs.size() < n + 1) {
        const double x = u(gen);
        if (std::none_of(xs.begin(), xs.end(), [&](double y) { return std::abs(x - y) < 1e-3; })) xs.push_back(x);
      }
      std::sort(xs.begin(), xs.end());
      ns = custom_nodes(xs, iv);
    }
    const GammaVector g = richardson_gamma(ns);
    const double err = std::abs(g.sum() - 1.0);
    const int kind = ns.scheme() == NodeScheme::Equidistant ? 0 : ns.scheme() == NodeScheme::Chebyshev ? 1 : 2;
    ++by_scheme_total[kind];
    if (err > 1e-10) {
      ++sum_fail;
      ++by_scheme_fail[kind];
      if (err > worst_sum) {
        worst_sum = err;
        worst_l1 = g.l1_norm();
      }
    }
    if (err > 64 * 1.1102230246251565e-16 * g.l1_norm() * static_cast<double>(n + 1)) ++scaled_fail;
  }
  o.pass = o.pass && sum_fail == 0;
  o.detail += "; sum(gamma)=1 within 1e-10: " + std::to_string(500 - sum_fail) + "/500";
  if (sum_fail) {
    const char* names[3] = {"equi", "cheb", "custom"};
    o.detail += " (misses:";
    for (int k = 0; k < 3; ++k) {
      o.detail += std::string(" ") + names[k] + " " + std::to_string(by_scheme_fail[k]) + "/" +
                  std::to_string(by_scheme_total[k]);
    }
    o.detail += "; worst err " + num(worst_sum) + " at |gamma|_1=" + num(worst_l1) + ")";
  }
  o.detail += "; conditioning-scaled sum check: " + std::to_string(500 - scaled_fail) + "/500";

  // Degree-n polynomials with random coefficients in the Chebyshev basis of
  // [1, B], values formed in long double.
  std::string poly_fail;
  std::size_t poly_bad = 0, poly_total = 0;
  for (double b : {2.0, 5.0, 10.0, 30.0}) {
    const Interval iv(b);
    for (int scheme = 0; scheme < 2; ++scheme) {
      double worst = 0.0;
      std::size_t worst_n = 0;
      for (std::size_t n = 1; n <= 20; ++n) {
        const NodeSet ns = scheme == 0 ? equidistant_nodes(n, iv) : chebyshev_nodes(n, iv);
        const GammaVector g = richardson_gamma(ns);
        for (int rep = 0; rep < 5; ++rep) {
          std::vector<long double> coef(n + 1);
          for (auto& c : coef) c = std::uniform_real_distribution<double>(-1.0, 1.0)(gen);
          const auto p = [&](long double x) {
            const long double y = 2.0L * (x - 1.0L) / (static_cast<long double>(b) - 1.0L) - 1.0L;
            long double t0 = 1.0L, t1 = y, s = coef[0];
            for (std::size_t k = 1; k <= n; ++k) {
              s += coef[k] * t1;
              const long double t2 = 2.0L * y * t1 - t0;
              t0 = t1;
              t1 = t2;
            }
            return s;
          };
          std::vector<double> vals;
          for (double x : ns.nodes()) vals.push_back(static_cast<double>(p(x)));
          const long double truth = p(0.0L);
          const double rel = static_cast<double>(std::abs(extrapolate_values(vals, g) - truth) /
                                                 std::max(std::abs(truth), 1e-300L));
          ++poly_total;
          if (rel > 1e-8) ++poly_bad;
          if (rel > worst) {
            worst = rel;
            worst_n = n;
          }
        }
      }
      if (worst > 1e-8) {
        poly_fail += std::string(" ") + (scheme == 0 ? "equi" : "cheb") + " B=" + num(b) + " worst " + num(worst) +
                     " (n=" + std::to_string(worst_n) + ")";
      }
    }
  }
  o.pass = o.pass && poly_bad == 0;
  o.detail += "; polynomial exactness 1e-8 rel: " + std::to_string(poly_total - poly_bad) + "/" +
              std::to_string(poly_total);
  if (!poly_fail.empty()) o.detail += " failing:" + poly_fail;
  return o;
}

Outcome criterion2() {
  std::size_t checks = 0, violations = 0;
  for (double b : {2.0, 5.0, 10.0, 30.0}) {
    const Interval iv(b);
    for (std::size_t n = 0; n <= 20; ++n) {
      if (n >= 1) {
        ++checks;
        if (richardson_gamma(equidistant_nodes(n, iv)).l1_norm() > gamma_l1_bound(n, iv, GammaBoundKind::RichEquidistant)) ++violations;
      }
      const NodeSet ch = chebyshev_nodes(n, iv);
      ++checks;
      if (richardson_gamma(ch).l1_norm() > gamma_l1_bound(n, iv, GammaBoundKind::RichChebyshev)) ++violations;
      for (std::size_t m = 0; m <= n; ++m) {
        ++checks;
        if (lsq_gamma(ch, m).l1_norm() > gamma_l1_bound(m, iv, GammaBoundKind::LeastSquares)) ++violations;
      }
    }
  }
  return {violations == 0, std::to_string(violations) + " violations in " + std::to_string(checks) + " checks"};
}

Outcome criterion3() {
  constexpr std::size_t kSteps = 50;
  constexpr double kLambda0 = 0.02;
  const double e0 = g_phys.evolve(operating_point(kSteps, 0.0), kX0);
  const auto f = [&](long double x) {
    return std::pow(1.0L - kLambda0 * x, static_cast<long double>(kSteps)) * static_cast<long double>(e0);
  };
  const GevreyParams gp{1.0, gevrey_m_for_qem(kLambda0, 1.0, static_cast<double>(kSteps))};
  std::size_t checks = 0, violations = 0;
  double oracle_gap = 0.0, worst_ratio = 0.0;
  for (double b : {2.0, 5.0, 10.0, 30.0}) {
    const Interval iv(b);
    for (std::size_t n = 0; n <= 12; ++n) {
      for (int scheme = 0; scheme < 2; ++scheme) {
        if (scheme == 0 && n == 0) continue;
        const NodeSet ns = scheme == 0 ? equidistant_nodes(n, iv) : chebyshev_nodes(n, iv);
        const std::vector<double> xs(ns.nodes().begin(), ns.nodes().end());
        const double err = static_cast<double>(std::abs(f(0.0L) - lagrange_at_zero(xs, f)));
        const double bound = bias_bound_interp(gp, ns).value;
        ++checks;
        if (err > bound) ++violations;
        worst_ratio = std::max(worst_ratio, err / bound);
      }
    }
  }
  // The closed form is checked against the simulator on the B=5 node set.
  const NodeSet check_nodes = equidistant_nodes(4, Interval(5.0));
  for (double x : check_nodes.nodes()) {
    EvolutionSpec s = operating_point(kSteps, kLambda0);
    s.noise_scale = x;
    oracle_gap = std::max(oracle_gap, std::abs(g_phys.evolve(s, kX0) - static_cast<double>(f(x))));
  }
  const bool pass = violations == 0 && oracle_gap <= 1e-10;
  return {pass, std::to_string(violations) + " violations in " + std::to_string(checks) +
                    " checks, max err/bound " + num(worst_ratio) + ", oracle vs simulator " + num(oracle_gap)};
}

Outcome criterion4() {
  const Interval iv(5.0);
  const NodeSet nodes = chebyshev_nodes(4, iv);
  const GammaVector gamma = richardson_gamma(nodes);
  std::vector<double> exact;
  for (double x : nodes.nodes()) {
    EvolutionSpec s = operating_point(10, 0.02);
    s.noise_scale = x;
    exact.push_back(g_phys.evolve(s, kX0));
  }
  const double target = extrapolate_values(exact, gamma);
  ComplexityQuery q;
  q.epsilon = 0.05;
  q.delta = 0.1;
  q.alpha = 1.0;
  q.interval = iv;
  q.method = GammaBoundKind::RichChebyshev;
  const BoundValue ns = sample_complexity(q, 4);
  if (!ns.ok()) return {false, "sample_complexity overflowed"};
  const auto shots = static_cast<std::uint64_t>(ns.value);
  const std::size_t trials = 2000;
  std::size_t fails = 0;
  double worst = 0.0;
  for (std::size_t t = 0; t < trials; ++t) {
    const std::uint64_t seed = derive_seed(404, t);
    double est = 0.0;
    for (std::size_t j = 0; j < nodes.size(); ++j) {
      est += gamma[j] * sample_shots(exact[j], shots, derive_seed(seed, j)).estimate;
    }
    const double dev = std::abs(est - target);
    worst = std::max(worst, dev);
    if (dev >= q.epsilon) ++fails;
  }
  const double freq = static_cast<double>(fails) / static_cast<double>(trials);
  return {freq <= q.delta, "N_S=" + num(ns.value) + " per node, failure frequency " + num(freq) + " <= " +
                               num(q.delta) + " (max deviation " + num(worst) + ")"};
}

Outcome compare(const std::string& config, double ideal, double tol, bool use_target, bool shot_free = false) {
  ExperimentConfig c = load(config);
  c.shot_free = shot_free;
  const ExperimentResult r = run_tracked(c);
  const double ref = use_target ? ideal : r.exact_reference;
  const double err = std::abs(r.extrapolation.estimate - ref);
  return {err < tol, "estimate " + num(r.extrapolation.estimate) + " vs " + num(ref) + ", |err| " + num(err) +
                         " (tolerance " + num(tol) + ", sigma " + num(r.extrapolation.standard_error()) +
                         ", solver reference " + num(r.exact_reference) + ")"};
}

Outcome criterion5() { return compare("richardson_equi5.json", 0.191826, 0.02, true); }
Outcome criterion6() { return compare("lsq_cheb8.json", 0.191826, 0.01, true); }

Outcome criterion7() {
  const Outcome shots = compare("trotter_only.json", 0.48652, 5e-3, true);
  const Outcome free = compare("trotter_only.json", 0.48652, 1e-4, true, true);
  return {shots.pass && free.pass, "with shots: " + shots.detail + "; shot-free: " + free.detail};
}

Outcome criterion8() { return compare("joint.json", 0.3693, 0.01, true); }

Outcome criterion9() {
  Outcome o;
  struct Model {
    const char* name;
    double j, h;
    Pauli p;
  };
  const Model models[] = {{"J=3,h=2,X0", 3.0, 2.0, Pauli::X}, {"J=3,h=2,Z0", 3.0, 2.0, Pauli::Z},
                          {"J=0.2,h=1,X0", 0.2, 1.0, Pauli::X}};
  double lo = INFINITY, hi = 0.0;
  for (const Model& m : models) {
    EvolutionSpec s;
    s.tfim = {5, m.j, m.h};
    s.t_final = 2.0;
    const PauliObservable obs{m.p, 0};
    const double exact = exact_expectation(s, obs);
    for (std::size_t steps : {40u, 50u, 64u, 80u, 100u, 160u}) {
      s.trotter_steps = steps;
      const double e1 = std::abs(expectation(trotter2_evolve(s), obs) - exact);
      s.trotter_steps = 2 * steps;
      const double e2 = std::abs(expectation(trotter2_evolve(s), obs) - exact);
      const double ratio = e1 / e2;
      lo = std::min(lo, ratio);
      hi = std::max(hi, ratio);
      if (!(ratio >= 3.5 && ratio <= 4.5)) {
        o.pass = false;
        o.detail += std::string(" ") + m.name + " N_T=" + std::to_string(steps) + " ratio " + num(ratio);
      }
    }
  }
  o.detail = "ratios in [" + num(lo) + ", " + num(hi) + "] over 18 halvings" + o.detail;
  return o;
}

// Variances over every allocation on the simplex grid with resolution 1/100.
double best_grid(const GammaVector& g, const std::vector<double>& s, double total) {
  const std::size_t k = g.size();
  const int steps = 100;
  std::vector<int> parts(k, 0);
  double best = INFINITY;
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
    if (i + 1 == k) {
      if (left == 0) return;
      parts[i] = left;
      double v = 0.0;
      for (std::size_t j = 0; j < k; ++j) v += g[j] * g[j] * s[j] * s[j] / (total * parts[j] / steps);
      best = std::min(best, v);
      return;
    }
    for (int p = 1; p < left; ++p) {
      parts[i] = p;
      rec(i + 1, left - p);
    }
  };
  rec(0, steps);
  return best;
}

Outcome criterion10() {
  std::mt19937_64 gen(10);
  std::size_t bad_grid = 0, bad_uniform = 0;
  double worst_gain = INFINITY;
  for (int t = 0; t < 50; ++t) {
    const std::size_t k = 2 + gen() % 4;
    std::vector<double> xs = {1.0};
    while (xs.size() < k) xs.push_back(xs.back() + std::uniform_real_distribution<double>(0.3, 2.0)(gen));
    const GammaVector g = richardson_gamma(custom_nodes(xs, Interval(xs.back() + 0.5)));
    std::vector<double> s;
    for (std::size_t j = 0; j < k; ++j) s.push_back(std::uniform_real_distribution<double>(0.05, 1.0)(gen));
    const std::uint64_t total = 1000000;
    const ShotAllocation a = optimal_allocation(g, s, total);
    std::vector<double> shots(a.per_node.begin(), a.per_node.end());
    const double v = allocation_variance(g, s, shots);
    const double grid = best_grid(g, s, static_cast<double>(total));
    const std::vector<double> uniform(k, static_cast<double>(total) / static_cast<double>(k));
    const double vu = allocation_variance(g, s, uniform);
    if (v > grid * (1 + 1e-12)) ++bad_grid;
    if (v > vu * (1 + 1e-12)) ++bad_uniform;
    worst_gain = std::min(worst_gain, grid / v);
  }
  return {bad_grid == 0 && bad_uniform == 0,
          std::to_string(bad_grid) + " grid and " + std::to_string(bad_uniform) +
              " uniform violations over 50 instances, min grid/optimal variance " + num(worst_gain)};
}

Outcome criterion11() {
  const bool pass = g_phys.worst_herm <= 1e-12 && g_phys.worst_trace <= 1e-12 && g_phys.worst_eig >= -1e-10 &&
                    g_phys.noiseless > 0 && g_phys.worst_purity_gap <= 1e-10;
  return {pass, std::to_string(g_phys.evolutions) + " evolutions: max hermiticity " + num(g_phys.worst_herm) +
                    ", max trace " + num(g_phys.worst_trace) + ", min eigenvalue " + num(g_phys.worst_eig) + "; " +
                    std::to_string(g_phys.noiseless) + " noiseless, max |purity-1| " + num(g_phys.worst_purity_gap)};
}

// Fourth-order accurate central differences for derivative orders 1-4.
double derivative(const std::function<double(double)>& f, double x, double h, int k) {
  const double f0 = f(x), p1 = f(x + h), m1 = f(x - h), p2 = f(x + 2 * h), m2 = f(x - 2 * h);
  switch (k) {
    case 1: return (-p2 + 8 * p1 - 8 * m1 + m2) / (12 * h);
    case 2: return (-p2 + 16 * p1 - 30 * f0 + 16 * m1 - m2) / (12 * h * h);
    case 3: {
      const double p3 = f(x + 3 * h), m3 = f(x - 3 * h);
      return (-p3 + 8 * p2 - 13 * p1 + 13 * m1 - 8 * m2 + m3) / (8 * h * h * h);
    }
    default: {
      const double p3 = f(x + 3 * h), m3 = f(x - 3 * h);
      return (-p3 + 12 * p2 - 39 * p1 + 56 * f0 - 39 * m1 + 12 * m2 - m3) / (6 * h * h * h * h);
    }
  }
}

Outcome criterion12() {
  constexpr std::size_t kSteps = 50;
  constexpr double kLambda0 = 0.02;
  const double alpha = 1.0;
  const double e0 = g_phys.evolve(operating_point(kSteps, 0.0), kX0);
  const std::function<double(double)> f = [&](double x) { return std::pow(1.0 - kLambda0 * x, double(kSteps)) * e0; };
  // f^(k) = E0 (-lambda0)^k 50!/(50-k)! (1 - lambda0 x)^(50-k), so M_eff = N_T lambda0.
  const double m_eff = kSteps * kLambda0;
  std::size_t checks = 0, violations = 0;
  double worst_ratio = 0.0, worst_fd_err = 0.0;
  for (int k = 1; k <= 4; ++k) {
    for (int i = 0; i <= 40; ++i) {
      const double x = 1.0 + 0.1 * i;
      const double d = derivative(f, x, 0.05, k);
      double exact = e0 * std::pow(1.0 - kLambda0 * x, double(kSteps) - k);
      for (int r = 0; r < k; ++r) exact *= -kLambda0 * double(kSteps - r);
      worst_fd_err = std::max(worst_fd_err, std::abs(d - exact) / std::pow(m_eff, k));
      ++checks;
      const double ratio = std::abs(d) / (alpha * std::pow(m_eff, k));
      worst_ratio = std::max(worst_ratio, ratio);
      if (ratio > 1.0) ++violations;
    }
  }
  return {violations == 0, std::to_string(violations) + " violations in " + std::to_string(checks) +
                               " checks (M_eff=" + num(m_eff) + "), max |f^(k)|/(alpha M^k) " + num(worst_ratio) +
                               ", max stencil error " + num(worst_fd_err)};
}

}  // namespace

int main(int argc, char** argv) {
  std::set<int> expected;
  for (int i = 1; i < argc; ++i) {
    const std::string a = argv[i];
    if (a == "--expect-fail" && i + 1 < argc) {
      std::stringstream ss(argv[++i]);
      std::string item;
      while (std::getline(ss, item, ',')) {
        if (!item.empty()) expected.insert(std::stoi(item));
      }
    }
  }
  struct Criterion {
    int id;
    const char* title;
    double limit_s;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "weight exactness", 5, criterion1},
      {2, "gamma l1 bound dominance", 5, criterion2},
      {3, "interpolation bias bound dominance", 30, criterion3},
      {4, "Hoeffding conservativeness", 300, criterion4},
      {5, "five-node Richardson reproduction", 60, criterion5},
      {6, "eight-node least squares reproduction", 60, criterion6},
      {7, "Trotter-only extrapolation", 120, criterion7},
      {8, "joint mitigation", 180, criterion8},
      {9, "second-order Trotter convergence", 30, criterion9},
      {10, "allocation optimality", 10, criterion10},
      {11, "simulator physicality", 1e9, criterion11},
      {12, "Gevrey derivative structure", 10, criterion12},
  };
  std::set<int> failed;
  for (const Criterion& c : criteria) {
    const auto start = Clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    const bool in_time = secs < c.limit_s;
    const bool pass = o.pass && in_time;
    if (!pass) failed.insert(c.id);
    std::printf("criterion %2d %s: %s: %s [%.2f s%s]\n", c.id, pass ? "PASS" : "FAIL", c.title, o.detail.c_str(),
                secs, in_time ? "" : ", over time limit");
    std::fflush(stdout);
  }
  std::printf("summary: %zu/%zu PASS\n", criteria.size() - failed.size(), criteria.size());
  if (failed != expected) {
    std::printf("failing set differs from the expected set\n");
    return 1;
  }
  return 0;
}
