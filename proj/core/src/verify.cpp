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

#include <cmath>
#include <cstdio>
#include <span>
#include <string>
#include <vector>

#include "zne/error.hpp"
#include "zne/experiments.hpp"
#include "zne/rng.hpp"

namespace zne {
namespace {

// Calibrated TFIM operating point shared by the simulator-driven rows.
EvolutionSpec reference_evolution(std::size_t steps, double lambda0) {
  EvolutionSpec evo;
  evo.tfim = {5, 3.0, 2.0};
  evo.t_final = 0.13640678814719542;
  evo.trotter_steps = steps;
  evo.noise_base = lambda0;
  return evo;
}

const PauliObservable kObs{Pauli::X, 0};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

void push(BoundsReport& rep, std::string check, std::string family, std::string params,
          double measured, double bound) {
  rep.rows.push_back({std::move(check), std::move(family), std::move(params), measured, bound,
                      measured <= bound});
}

// Interpolation error at 0 evaluated in extended precision: the true bias is
// orders of magnitude below the double rounding of sum gamma_j f(x_j) once
// ||gamma||_1 exceeds ~1e8.
template <class F>
long double interp_error_at_zero(std::span<const double> xs, F f) {
  const std::size_t n = xs.size();
  long double acc = 0.0L;
  long double comp = 0.0L;
  for (std::size_t j = 0; j < n; ++j) {
    long double g = 1.0L;
    for (std::size_t k = 0; k < n; ++k) {
      if (k != j) g *= static_cast<long double>(xs[k]) / (static_cast<long double>(xs[k]) - xs[j]);
    }
    const long double term = g * f(static_cast<long double>(xs[j])) - comp;
    const long double t = acc + term;
    comp = (t - acc) - term;
    acc = t;
  }
  return std::fabs(f(0.0L) - acc);
}

void gamma_rows(BoundsReport& rep) {
  for (double b : {2.0, 5.0, 10.0, 30.0}) {
    const Interval iv(b);
    for (std::size_t n = 0; n <= 20; ++n) {
      const std::string p = "n=" + std::to_string(n) + " B=" + fmt(b);
      if (n >= 1) {
        push(rep, "gamma_l1_rich_equidistant", "gamma-equidistant", p,
             richardson_gamma(equidistant_nodes(n, iv)).l1_norm(),
             gamma_l1_bound(n, iv, GammaBoundKind::RichEquidistant));
      }
      const NodeSet cheb = chebyshev_nodes(n, iv);
      push(rep, "gamma_l1_rich_chebyshev", "gamma-chebyshev", p, richardson_gamma(cheb).l1_norm(),
           gamma_l1_bound(n, iv, GammaBoundKind::RichChebyshev));
      for (std::size_t m = 0; m <= n; ++m) {
        push(rep, "gamma_l1_lsq", "lsq-gamma", p + " m=" + std::to_string(m),
             lsq_gamma(cheb, m).l1_norm(), gamma_l1_bound(m, iv, GammaBoundKind::LeastSquares));
      }
    }
  }
}

void interp_bias_rows(BoundsReport& rep) {
  constexpr std::size_t kSteps = 50;
  constexpr double kLambda0 = 0.02;
  const double e0 = expectation(trotter2_evolve(reference_evolution(10, 0.0)), kObs);
  const auto f = [&](long double x) {
    return std::pow(1.0L - static_cast<long double>(kLambda0) * x, static_cast<long double>(kSteps)) *
           static_cast<long double>(e0);
  };
  const GevreyParams gp{1.0, gevrey_m_for_qem(kLambda0, 1.0, static_cast<double>(kSteps))};
  for (double b : {2.0, 5.0, 10.0, 30.0}) {
    const Interval iv(b);
    for (std::size_t n = 1; n <= 12; ++n) {
      const std::string p = "n=" + std::to_string(n) + " B=" + fmt(b) + " M=" + fmt(gp.m_rate);
      const NodeSet eq = equidistant_nodes(n, iv);
      push(rep, "bias_interp_equidistant", "bias-equidistant", p,
           static_cast<double>(interp_error_at_zero(eq.nodes(), f)), bias_bound_interp(gp, eq).value);
      const NodeSet ch = chebyshev_nodes(n, iv);
      push(rep, "bias_interp_chebyshev", "bias-chebyshev", p,
           static_cast<double>(interp_error_at_zero(ch.nodes(), f)), bias_bound_interp(gp, ch).value);
    }
  }
}

void majorant_rows(BoundsReport& rep) {
  for (double b : {2.0, 5.0, 10.0}) {
    const Interval iv(b);
    for (double m : {0.1, 1.0}) {
      const GevreyParams gp{1.0, m};
      for (std::size_t n = 0; n <= 20; ++n) {
        push(rep, "chebyshev_product_majorant", "bias-chebyshev",
             "n=" + std::to_string(n) + " B=" + fmt(b) + " M=" + fmt(m),
             bias_bound_interp(gp, chebyshev_nodes(n, iv)).value,
             chebyshev_bias_majorant(gp, n, iv).value);
      }
    }
  }
}

void lsq_bias_rows(BoundsReport& rep) {
  constexpr std::size_t kSteps = 10;
  constexpr double kLambda0 = 0.02;
  const double e0 = expectation(trotter2_evolve(reference_evolution(kSteps, 0.0)), kObs);
  const GevreyParams gp{1.0, gevrey_m_for_qem(kLambda0, 1.0, static_cast<double>(kSteps))};
  for (double b : {10.0, 30.0}) {
    const Interval iv(b);
    for (std::size_t n = 1; n <= 12; ++n) {
      const NodeSet ch = chebyshev_nodes(n, iv);
      for (std::size_t m = 0; m <= n; ++m) {
        const GammaVector g = lsq_gamma(ch, m);
        long double acc = 0.0L;
        for (std::size_t j = 0; j < ch.size(); ++j) {
          acc += static_cast<long double>(g[j]) *
                 std::pow(1.0L - static_cast<long double>(kLambda0) * ch[j],
                          static_cast<long double>(kSteps)) *
                 e0;
        }
        push(rep, "bias_lsq", "lsq-bias",
             "n=" + std::to_string(n) + " m=" + std::to_string(m) + " B=" + fmt(b) +
                 " M=" + fmt(gp.m_rate),
             static_cast<double>(std::fabs(acc - e0)), bias_bound_lsq(gp, n, m, iv).value);
      }
    }
  }
}

void growth_rows(BoundsReport& rep) {
  for (double b : {2.0, 5.0, 10.0, 30.0}) {
    const Interval iv(b);
    for (std::size_t k = 0; k <= 40; k += 4) {
      push(rep, "shifted_chebyshev_at_zero", "gamma-chebyshev", "k=" + std::to_string(k) + " B=" + fmt(b),
           std::abs(shifted_chebyshev_t(k, 0.0, iv)), std::pow(kappa(iv), static_cast<double>(k)));
    }
  }
}

template <class F>
double central_difference(F f, double x, double h, int order) {
  switch (order) {
    case 1: return (f(x + h) - f(x - h)) / (2 * h);
    case 2: return (f(x + h) - 2 * f(x) + f(x - h)) / (h * h);
    case 3: return (f(x + 2 * h) - 2 * f(x + h) + 2 * f(x - h) - f(x - 2 * h)) / (2 * h * h * h);
    default:
      return (f(x + 2 * h) - 4 * f(x + h) + 6 * f(x) - 4 * f(x - h) + f(x - 2 * h)) /
             (h * h * h * h);
  }
}

void gevrey_rows(BoundsReport& rep) {
  const double h = 0.05;
  {
    constexpr std::size_t kSteps = 50;
    const double e0 = expectation(trotter2_evolve(reference_evolution(10, 0.0)), kObs);
    const double m = gevrey_m_for_qem(0.02, 1.0, kSteps);
    const auto f = [&](double x) { return std::pow(1.0 - 0.02 * x, double(kSteps)) * e0; };
    for (int k = 1; k <= 4; ++k) {
      for (double x = 1.0; x <= 5.0; x += 1.0) {
        push(rep, "gevrey_oracle", "gevrey",
             "k=" + std::to_string(k) + " x=" + fmt(x) + " N_T=50",
             std::abs(central_difference(f, x, h, k)), std::pow(m, k));
      }
    }
  }
  {
    const EvolutionSpec base = reference_evolution(10, 0.02);
    const double m = gevrey_params_for(base).m_rate;
    const auto f = [&](double x) {
      EvolutionSpec s = base;
      s.noise_scale = x;
      return expectation(trotter2_evolve(s), kObs);
    };
    const double e0 = f(0.0);
    for (double x = 1.0; x <= 5.0; x += 1.0) {
      EvolutionSpec s = base;
      s.noise_scale = x;
      push(rep, "closed_form_damping", "gevrey", "x=" + fmt(x) + " N_T=10",
           std::abs(f(x) - s.damping_factor() * e0), 1e-10);
      for (int k = 1; k <= 4; ++k) {
        push(rep, "gevrey_simulator", "gevrey",
             "k=" + std::to_string(k) + " x=" + fmt(x) + " N_T=10",
             std::abs(central_difference(f, x, h, k)), std::pow(m, k));
      }
    }
  }
}

void hoeffding_rows(BoundsReport& rep, const VerifyOptions& opt) {
  const Interval iv(5.0);
  const NodeSet nodes = chebyshev_nodes(4, iv);
  const GammaVector gamma = richardson_gamma(nodes);
  const EvolutionSpec base = reference_evolution(10, 0.02);
  std::vector<double> exact;
  for (double x : nodes.nodes()) {
    EvolutionSpec s = base;
    s.noise_scale = x;
    exact.push_back(expectation(trotter2_evolve(s), kObs));
  }
  const double target = extrapolate_values(exact, gamma);
  const auto failure_rate = [&](double eps, std::uint64_t shots, std::uint64_t salt) {
    std::size_t fails = 0;
    for (std::size_t t = 0; t < opt.hoeffding_trials; ++t) {
      const std::uint64_t trial_seed = derive_seed(derive_seed(opt.seed, salt), t);
      double est = 0.0;
      for (std::size_t j = 0; j < nodes.size(); ++j) {
        est += gamma[j] * sample_shots(exact[j], shots, derive_seed(trial_seed, j)).estimate;
      }
      if (std::abs(est - target) >= eps) ++fails;
    }
    return static_cast<double>(fails) / static_cast<double>(opt.hoeffding_trials);
  };

  ComplexityQuery q;
  q.epsilon = 0.05;
  q.delta = 0.1;
  q.alpha = 1.0;
  q.interval = iv;
  q.method = GammaBoundKind::RichChebyshev;
  const BoundValue ns = sample_complexity(q, 4);
  push(rep, "hoeffding_sample_complexity", "hoeffding",
       "n=4 B=5 eps=0.05 delta=0.1 N_S=" + fmt(ns.value),
       failure_rate(q.epsilon, static_cast<std::uint64_t>(ns.value), 0), q.delta);

  // Same estimator at a budget where the predicted probability is 0.5.
  const double eps = 0.05;
  const double g = gamma.l1_norm();
  const double shots = std::ceil(2.0 * g * g * std::log(4.0) / (eps * eps));
  const double pred = hoeffding_failure_prob(eps, shots, 1.0, g);
  const double slack =
      3.0 * std::sqrt(pred * (1.0 - pred) / static_cast<double>(opt.hoeffding_trials));
  push(rep, "hoeffding_failure_prob", "hoeffding", "n=4 B=5 eps=0.05 N=" + fmt(shots),
       failure_rate(eps, static_cast<std::uint64_t>(shots), 1), pred + slack);
}

void round_trip_rows(BoundsReport& rep) {
  for (GammaBoundKind kind : {GammaBoundKind::RichEquidistant, GammaBoundKind::RichChebyshev,
                              GammaBoundKind::LeastSquares}) {
    for (double b : {2.0, 5.0, 10.0}) {
      for (std::size_t n = 0; n <= 6; n += 2) {
        ComplexityQuery q;
        q.epsilon = 0.05;
        q.delta = 0.1;
        q.interval = Interval(b);
        q.method = kind;
        const BoundValue ns = sample_complexity(q, n);
        const double p = hoeffding_failure_prob(q.epsilon, ns.value, q.alpha,
                                                gamma_l1_bound(n, q.interval, kind));
        // The ceiling snaps within 1e-12, so allow the matching relative slack.
        push(rep, "sample_complexity_round_trip", "hoeffding",
             std::string(to_string(kind)) + " n=" + std::to_string(n) + " B=" + fmt(b), p,
             q.delta * (1.0 + 1e-9));
      }
    }
  }
}

}  // namespace

BoundsReport verify_bounds_suite(const VerifyOptions& options) {
  BoundsReport rep;
  gamma_rows(rep);
  interp_bias_rows(rep);
  majorant_rows(rep);
  lsq_bias_rows(rep);
  growth_rows(rep);
  gevrey_rows(rep);
  hoeffding_rows(rep, options);
  round_trip_rows(rep);
  return rep;
}

}  // namespace zne
