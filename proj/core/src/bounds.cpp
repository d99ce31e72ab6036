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

#include "zne/bounds.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "zne/error.hpp"

namespace zne {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
// log(DBL_MAX), leaving a little headroom for the final multiplications.
const double kLogMax = std::log(std::numeric_limits<double>::max()) - 1e-6;

BoundValue from_log(double log_value) {
  if (log_value == -kInf) return {0.0, BoundStatus::Ok};
  if (!(log_value < kLogMax)) return {kInf, BoundStatus::Overflow};
  return {std::exp(log_value), BoundStatus::Ok};
}

void require_unit_open(double v, const char* what) {
  if (!(v > 0.0 && v < 1.0)) {
    throw Error(ErrorCode::InvalidArgument,
                std::string(what) + " must lie in (0, 1), got " + std::to_string(v));
  }
}

double log_or_neg_inf(double v) { return v > 0.0 ? std::log(v) : -kInf; }

}  // namespace

void GevreyParams::validate() const {
  if (!(std::isfinite(c) && c > 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "C must be finite and positive");
  }
  if (!(std::isfinite(m_rate) && m_rate >= 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "M must be finite and non-negative");
  }
}

std::string_view to_string(BoundStatus status) noexcept {
  switch (status) {
    case BoundStatus::Ok: return "ok";
    case BoundStatus::Overflow: return "overflow";
    case BoundStatus::ConditionViolated: return "condition_violated";
  }
  return "ok";
}

std::string_view to_string(GammaBoundKind kind) noexcept {
  switch (kind) {
    case GammaBoundKind::RichEquidistant: return "rich_equidistant";
    case GammaBoundKind::RichChebyshev: return "rich_chebyshev";
    case GammaBoundKind::LeastSquares: return "lsq";
  }
  return "rich_chebyshev";
}

GammaBoundKind parse_gamma_bound_kind(std::string_view name) {
  if (name == "rich_equidistant" || name == "equidistant") return GammaBoundKind::RichEquidistant;
  if (name == "rich_chebyshev" || name == "chebyshev") return GammaBoundKind::RichChebyshev;
  if (name == "lsq" || name == "least_squares") return GammaBoundKind::LeastSquares;
  throw Error(ErrorCode::InvalidArgument, "unknown bound method '" + std::string(name) + "'");
}

void ComplexityQuery::validate() const {
  require_unit_open(epsilon, "epsilon");
  require_unit_open(delta, "delta");
  if (!(std::isfinite(alpha) && alpha > 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "alpha must be positive");
  }
}

double stable_ceil(double v) noexcept {
  if (!std::isfinite(v)) return v;
  const double r = std::round(v);
  if (std::abs(v - r) <= 1e-12 * std::max(1.0, std::abs(v))) return r;
  return std::ceil(v);
}

BoundValue bias_bound_interp(const GevreyParams& params, const NodeSet& nodes) {
  params.validate();
  const std::size_t n = nodes.degree();
  double log_v = std::log(params.c) + static_cast<double>(n + 1) * log_or_neg_inf(params.m_rate) -
                 std::lgamma(static_cast<double>(n + 2));
  for (double x : nodes.nodes()) log_v += std::log(x);
  return from_log(log_v);
}

BoundValue chebyshev_bias_majorant(const GevreyParams& params, std::size_t n,
                                   const Interval& interval) {
  params.validate();
  const double k = kappa(interval);
  const double base = params.m_rate * interval.width() * k * k / 4.0;
  const double log_v = std::log(2.0 * params.c) - std::lgamma(static_cast<double>(n + 2)) +
                       static_cast<double>(n + 1) * log_or_neg_inf(base);
  return from_log(log_v);
}

BoundValue bias_bound_lsq(const GevreyParams& params, std::size_t n, std::size_t m,
                          const Interval& interval) {
  params.validate();
  if (m > n) {
    throw Error(ErrorCode::DegreeExceedsNodes, "degree m exceeds n");
  }
  const double mm = params.m_rate;
  const double k2 = kappa(interval) * kappa(interval);
  if (!(mm < 1.0 && mm * k2 < 1.0)) {
    return {kInf, BoundStatus::ConditionViolated};
  }
  if (mm == 0.0) return {0.0, BoundStatus::Ok};
  const double log_pref = std::log(2.0 * interval.width() * params.c / std::numbers::pi) +
                          static_cast<double>(m + 1) * std::log(mm);
  const double log_a = static_cast<double>(m + 1) * std::log(k2) - std::log1p(-mm * k2);
  const double log_b = static_cast<double>(n) * std::log(k2) - std::log1p(-mm);
  const double hi = std::max(log_a, log_b);
  const double lse = hi + std::log(std::exp(log_a - hi) + std::exp(log_b - hi));
  return from_log(log_pref + lse);
}

NodeCount nodes_required(double epsilon, const GevreyParams& params, const Interval& interval,
                         NodeScheme scheme) {
  params.validate();
  require_unit_open(epsilon, "epsilon");
  const double b = interval.b_max();
  const double e = std::numbers::e;
  double threshold = 0.0;
  double a = 0.0;
  switch (scheme) {
    case NodeScheme::Equidistant:
      threshold = std::pow(b, -b / (b - 1.0));
      a = params.m_rate * std::pow(b, b / (b - 1.0)) / e;
      break;
    case NodeScheme::Chebyshev: {
      const double k2 = kappa(interval) * kappa(interval);
      threshold = 4.0 / ((b - 1.0) * e * k2);
      a = params.m_rate * (b - 1.0) * k2 / (4.0 * e);
      break;
    }
    case NodeScheme::Custom:
      throw Error(ErrorCode::SchemeMismatch, "node counts are defined for equidistant or "
                                             "Chebyshev nodes only");
  }
  if (params.m_rate > threshold) {
    const double ae = a * e;
    const double n = stable_ceil(ae * std::pow(epsilon, -1.0 / ae));
    if (!(n < 1e18)) {
      return {std::numeric_limits<std::size_t>::max(), BoundStatus::Overflow, a};
    }
    return {static_cast<std::size_t>(n), BoundStatus::ConditionViolated, a};
  }
  if (!(epsilon < std::exp(-e))) {
    throw Error(ErrorCode::InvalidArgument, "epsilon must be below e^-e for the node count");
  }
  const double l = std::log(1.0 / epsilon);
  const double n = stable_ceil(l / std::sqrt(std::log(l)));
  return {static_cast<std::size_t>(n), BoundStatus::Ok, a};
}

double gamma_l1_bound(std::size_t n_or_m, const Interval& interval, GammaBoundKind kind) {
  const double b = interval.b_max();
  const double k = static_cast<double>(n_or_m);
  switch (kind) {
    case GammaBoundKind::RichEquidistant:
      return b * std::pow(2.0 * b * std::numbers::e / (b - 1.0), k);
    case GammaBoundKind::RichChebyshev:
      return std::pow(kappa(interval), 2.0 * k + 2.0);
    case GammaBoundKind::LeastSquares: {
      const double k2 = kappa(interval) * kappa(interval);
      // (k2^{m+1} - 1) / (k2 - 1) is the geometric sum 1 + k2 + ... + k2^m.
      return std::numbers::sqrt2 * std::expm1((k + 1.0) * std::log(k2)) / (k2 - 1.0);
    }
  }
  return kInf;
}

BoundValue sample_complexity_for_norm(double epsilon, double delta, double alpha,
                                      double gamma_l1) {
  if (!(epsilon > 0.0) || !(alpha > 0.0) || !(gamma_l1 >= 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "epsilon, alpha must be positive");
  }
  if (!(delta > 0.0 && delta < 2.0)) {
    throw Error(ErrorCode::InvalidArgument, "delta must lie in (0, 2)");
  }
  if (!std::isfinite(gamma_l1)) return {kInf, BoundStatus::Overflow};
  const double v = 2.0 * alpha * alpha * gamma_l1 * gamma_l1 * std::log(2.0 / delta) /
                   (epsilon * epsilon);
  const double n = stable_ceil(v);
  if (!(n < 9.223372036854775807e18)) return {kInf, BoundStatus::Overflow};
  return {n, BoundStatus::Ok};
}

BoundValue sample_complexity(const ComplexityQuery& query, std::size_t n_or_m) {
  query.validate();
  return sample_complexity_for_norm(query.epsilon, query.delta, query.alpha,
                                    gamma_l1_bound(n_or_m, query.interval, query.method));
}

double hoeffding_failure_prob(double epsilon, double shots, double alpha, double gamma_l1) {
  if (!(epsilon > 0.0 && shots > 0.0 && alpha > 0.0 && gamma_l1 > 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "Hoeffding inputs must be positive");
  }
  const double expo = -epsilon * epsilon * shots / (2.0 * alpha * alpha * gamma_l1 * gamma_l1);
  return std::min(1.0, 2.0 * std::exp(expo));
}

LsqDegree lsq_degree_required(double epsilon, const GevreyParams& params,
                              const Interval& interval, double mu) {
  params.validate();
  if (!(epsilon > 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "epsilon must be positive");
  }
  require_unit_open(mu, "mu");
  const double mm = params.m_rate;
  const double k2 = kappa(interval) * kappa(interval);
  if (!(mm < 1.0)) {
    throw Error(ErrorCode::ConditionViolated, "least-squares degree needs M < 1");
  }
  if (!(mm * k2 < 1.0)) {
    throw Error(ErrorCode::ConditionViolated,
                "least-squares degree needs M kappa^2 < 1, got " + std::to_string(mm * k2));
  }
  const double c_prime = 2.0 * interval.width() * params.c * mm / std::numbers::pi *
                         (1.0 / (1.0 - mm * k2) + 1.0 / (1.0 - mm));
  if (mm == 0.0) return {0, 0.0};
  const double ratio = std::log(c_prime / epsilon) / ((1.0 - mu) * std::log(1.0 / mm));
  const double m = std::max(0.0, stable_ceil(ratio));
  return {static_cast<std::size_t>(m), c_prime};
}

std::size_t trotter_nodes_required(double epsilon, const Interval& interval, double theta,
                                   double lambda_val) {
  require_unit_open(epsilon, "epsilon");
  if (!(theta > 0.0) || !(lambda_val >= 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "theta must be positive and lambda non-negative");
  }
  if (!(lambda_val * theta < 1.0)) {
    throw Error(ErrorCode::ConditionViolated, "needs lambda * theta < 1");
  }
  const double k2 = kappa(interval) * kappa(interval);
  const double r = interval.width() * std::numbers::e * k2 * theta /
                   (4.0 * (1.0 - lambda_val * theta));
  if (!(r < 1.0)) {
    throw Error(ErrorCode::ConditionViolated,
                "contraction ratio " + std::to_string(r) + " is not below 1");
  }
  const double n = stable_ceil(std::log(epsilon) / std::log(r));
  return static_cast<std::size_t>(std::max(1.0, n));
}

double gevrey_m_for_qem(double lambda0, double lindblad_norm, double t_final) {
  if (!(lambda0 >= 0.0 && lindblad_norm >= 0.0 && t_final >= 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "Gevrey inputs must be non-negative");
  }
  return lambda0 * lindblad_norm * t_final;
}

}  // namespace zne
