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

// Closed-form bias, weight-norm, node-count and sample-complexity bounds for
// polynomial zero-noise extrapolation. All logarithms are natural. Constants
// are the explicit ones carried through the proofs, not the asymptotic
// statements; each function names the inequality it evaluates.

#include <cstddef>
#include <cstdint>
#include <string_view>

#include "zne/chebkit.hpp"

namespace zne {

/// Derivative growth |f^(k)(x)| <= C M^k on [1, B].
struct GevreyParams {
  double c = 1.0;
  double m_rate = 0.0;

  void validate() const;
};

enum class BoundStatus { Ok, Overflow, ConditionViolated };

std::string_view to_string(BoundStatus status) noexcept;

struct BoundValue {
  double value = 0.0;
  BoundStatus status = BoundStatus::Ok;

  bool ok() const noexcept { return status == BoundStatus::Ok; }
};

enum class GammaBoundKind { RichEquidistant, RichChebyshev, LeastSquares };

std::string_view to_string(GammaBoundKind kind) noexcept;
GammaBoundKind parse_gamma_bound_kind(std::string_view name);

struct ComplexityQuery {
  double epsilon = 0.1;
  double delta = 0.05;
  double alpha = 1.0;
  Interval interval{2.0};
  GammaBoundKind method = GammaBoundKind::RichChebyshev;

  void validate() const;
};

/// Interpolation bias bound C M^{n+1} / (n+1)! * prod_j x_j, accumulated in
/// log space. Returns +inf with status Overflow when the result exceeds the
/// double range.
BoundValue bias_bound_interp(const GevreyParams& params, const NodeSet& nodes);

/// Chebyshev-node majorant 2 C / (n+1)! (M (B-1) kappa^2 / 4)^{n+1}.
BoundValue chebyshev_bias_majorant(const GevreyParams& params, std::size_t n,
                                   const Interval& interval);

/// Least-squares bias bound
///   2 (B-1) C / pi * M^{m+1} (kappa^{2m+2} / (1 - M kappa^2) + kappa^{2n} / (1 - M)).
/// Status ConditionViolated (value +inf) unless M < 1 and M kappa^2 < 1.
BoundValue bias_bound_lsq(const GevreyParams& params, std::size_t n, std::size_t m,
                          const Interval& interval);

struct NodeCount {
  std::size_t n = 0;
  BoundStatus status = BoundStatus::Ok;
  /// Scheme-specific factorial-ratio base a (bias ~ (a e)^{n+1} / (n+1)!).
  double base_a = 0.0;
};

/// ceil(log(1/eps) / sqrt(log log(1/eps))) when the scheme's condition on M
/// holds (M <= B^{-B/(B-1)} equidistant, M <= 4/((B-1) e kappa^2) Chebyshev).
/// Otherwise status ConditionViolated with the large-M count
/// ceil(a e eps^{-1/(a e)}).
NodeCount nodes_required(double epsilon, const GevreyParams& params, const Interval& interval,
                         NodeScheme scheme);

/// Explicit weight-norm bounds:
///   RichEquidistant  B (2 B e / (B-1))^n
///   RichChebyshev    kappa^{2n+2}
///   LeastSquares     sqrt(2) (kappa^{2m+2} - 1) / (kappa^2 - 1)
double gamma_l1_bound(std::size_t n_or_m, const Interval& interval, GammaBoundKind kind);

/// Per-node shots N_S = ceil(2 alpha^2 G^2 log(2/delta) / eps^2) with G the
/// weight-norm bound. value is +inf (status Overflow) past 2^63.
BoundValue sample_complexity(const ComplexityQuery& query, std::size_t n_or_m);

/// Same formula with an explicit weight norm in place of the bound.
BoundValue sample_complexity_for_norm(double epsilon, double delta, double alpha,
                                      double gamma_l1);

/// Hoeffding two-sided failure probability min(1, 2 exp(-eps^2 N / (2 alpha^2 g^2))).
double hoeffding_failure_prob(double epsilon, double shots, double alpha, double gamma_l1);

struct LsqDegree {
  std::size_t m = 0;
  double c_prime = 0.0;
};

/// m = ceil(log(C'/eps) / ((1 - mu) log(1/M))), clamped at 0, with
/// C' = 2 (B-1) C M / pi (1/(1 - M kappa^2) + 1/(1 - M)).
LsqDegree lsq_degree_required(double epsilon, const GevreyParams& params,
                              const Interval& interval, double mu);

/// Joint Trotter/noise node count ceil(log eps / log r) with
/// r = (B-1) e kappa^2 theta / (4 (1 - lambda theta)); requires
/// lambda theta < 1 and r < 1.
std::size_t trotter_nodes_required(double epsilon, const Interval& interval, double theta,
                                   double lambda_val);

/// M = lambda0 * l * T for Lindblad-type noise of strength lambda0 x.
double gevrey_m_for_qem(double lambda0, double lindblad_norm, double t_final);

/// ceil that snaps values within 1e-12 (relative) of an integer to it.
double stable_ceil(double v) noexcept;

}  // namespace zne
