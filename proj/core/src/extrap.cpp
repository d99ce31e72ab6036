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

#include "zne/extrap.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "zne/error.hpp"

namespace zne {

std::string_view to_string(GammaMethod method) noexcept {
  switch (method) {
    case GammaMethod::Richardson: return "richardson";
    case GammaMethod::LeastSquares: return "least_squares";
    case GammaMethod::LeastSquaresGeneral: return "least_squares_general";
  }
  return "richardson";
}

GammaVector::GammaVector(std::vector<double> nodes, std::vector<double> weights,
                         GammaMethod method, std::size_t degree)
    : nodes_(std::move(nodes)), weights_(std::move(weights)), method_(method), degree_(degree) {
  if (nodes_.size() != weights_.size()) {
    throw Error(ErrorCode::AlignmentError, "weights and nodes differ in length");
  }
  long double l1 = 0.0L;
  for (double w : weights_) l1 += std::abs(static_cast<long double>(w));
  l1_norm_ = static_cast<double>(l1);
}

double GammaVector::sum() const noexcept {
  long double acc = 0.0L;
  for (double w : weights_) acc += w;
  return static_cast<double>(acc);
}

double ExtrapolationResult::standard_error() const noexcept { return std::sqrt(variance); }

GammaVector richardson_gamma(std::span<const double> nodes) {
  if (nodes.empty()) {
    throw Error(ErrorCode::DegenerateNodeCount, "no nodes");
  }
  const std::size_t count = nodes.size();
  for (std::size_t j = 0; j < count; ++j) {
    if (!(nodes[j] > 0.0)) {
      throw Error(ErrorCode::InvalidArgument, "Richardson nodes must be positive");
    }
    for (std::size_t k = j + 1; k < count; ++k) {
      if (nodes[j] == nodes[k]) {
        throw Error(ErrorCode::DegenerateNodes, "duplicate node " + std::to_string(nodes[j]));
      }
    }
  }
  // The product is accumulated in extended precision; each factor is exact
  // up to one rounding of the difference.
  std::vector<double> gamma(count, 1.0);
  for (std::size_t j = 0; j < count; ++j) {
    long double g = 1.0L;
    for (std::size_t k = 0; k < count; ++k) {
      if (k != j) {
        const long double xk = nodes[k];
        g *= xk / (xk - static_cast<long double>(nodes[j]));
      }
    }
    gamma[j] = static_cast<double>(g);
  }
  return GammaVector({nodes.begin(), nodes.end()}, std::move(gamma), GammaMethod::Richardson,
                     count - 1);
}

GammaVector richardson_gamma(const NodeSet& nodes) { return richardson_gamma(nodes.nodes()); }

GammaVector lsq_gamma(const NodeSet& nodes, std::size_t m) {
  if (nodes.scheme() != NodeScheme::Chebyshev) {
    throw Error(ErrorCode::SchemeMismatch,
                "closed-form least squares needs Chebyshev nodes; got " +
                    std::string(to_string(nodes.scheme())));
  }
  const std::size_t n = nodes.degree();
  if (m > n) {
    throw Error(ErrorCode::DegreeExceedsNodes,
                "degree " + std::to_string(m) + " > n = " + std::to_string(n));
  }
  const Interval& iv = nodes.interval();
  std::vector<double> at_zero(m + 1);
  for (std::size_t k = 0; k <= m; ++k) at_zero[k] = rescaled_tau(k, 0.0, n, iv);

  std::vector<double> gamma(nodes.size(), 0.0);
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    double g = 0.0;
    for (std::size_t k = 0; k <= m; ++k) g += rescaled_tau(k, nodes[i], n, iv) * at_zero[k];
    gamma[i] = g;
  }
  return GammaVector({nodes.nodes().begin(), nodes.nodes().end()}, std::move(gamma),
                     GammaMethod::LeastSquares, m);
}

GammaVector lsq_gamma_general(const NodeSet& nodes, std::size_t m) {
  const std::size_t count = nodes.size();
  if (m + 1 > count) {
    throw Error(ErrorCode::DegreeExceedsNodes,
                "degree " + std::to_string(m) + " needs at least " + std::to_string(m + 1) +
                    " nodes");
  }
  const Interval& iv = nodes.interval();
  // Discrete orthonormal polynomials q_k over the nodes, built by two passes
  // of modified Gram-Schmidt on the shifted Chebyshev basis. Each q_k is
  // carried together with its value at x = 0.
  std::vector<std::vector<double>> q;
  std::vector<double> q_at_zero;
  q.reserve(m + 1);
  for (std::size_t k = 0; k <= m; ++k) {
    std::vector<double> v(count);
    for (std::size_t i = 0; i < count; ++i) v[i] = shifted_chebyshev_t(k, nodes[i], iv);
    double z = shifted_chebyshev_t(k, 0.0, iv);
    const double initial = std::sqrt(std::inner_product(v.begin(), v.end(), v.begin(), 0.0));
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t j = 0; j < q.size(); ++j) {
        const double c = std::inner_product(q[j].begin(), q[j].end(), v.begin(), 0.0);
        for (std::size_t i = 0; i < count; ++i) v[i] -= c * q[j][i];
        z -= c * q_at_zero[j];
      }
    }
    const double norm = std::sqrt(std::inner_product(v.begin(), v.end(), v.begin(), 0.0));
    if (!(norm > 1e-12 * initial)) {
      throw Error(ErrorCode::DegreeExceedsNodes, "basis is rank deficient on these nodes");
    }
    for (double& e : v) e /= norm;
    q.push_back(std::move(v));
    q_at_zero.push_back(z / norm);
  }
  std::vector<double> gamma(count, 0.0);
  for (std::size_t k = 0; k <= m; ++k) {
    for (std::size_t i = 0; i < count; ++i) gamma[i] += q[k][i] * q_at_zero[k];
  }
  return GammaVector({nodes.nodes().begin(), nodes.nodes().end()}, std::move(gamma),
                     GammaMethod::LeastSquaresGeneral, m);
}

double extrapolate_values(std::span<const double> values, const GammaVector& gamma) {
  if (values.size() != gamma.size()) {
    throw Error(ErrorCode::AlignmentError, std::to_string(values.size()) + " values for " +
                                               std::to_string(gamma.size()) + " weights");
  }
  long double acc = 0.0L;
  for (std::size_t j = 0; j < values.size(); ++j) {
    acc += static_cast<long double>(gamma[j]) * values[j];
  }
  return static_cast<double>(acc);
}

ExtrapolationResult extrapolate(std::span<const Measurement> measurements,
                                const GammaVector& gamma) {
  if (measurements.size() != gamma.size()) {
    throw Error(ErrorCode::AlignmentError, std::to_string(measurements.size()) +
                                               " measurements for " +
                                               std::to_string(gamma.size()) + " weights");
  }
  long double estimate = 0.0L;
  long double variance = 0.0L;
  for (std::size_t j = 0; j < measurements.size(); ++j) {
    const Measurement& m = measurements[j];
    if (m.shots == 0) {
      throw Error(ErrorCode::InvalidArgument, "measurement with zero shots");
    }
    if (std::abs(m.node - gamma.nodes()[j]) > 1e-12 * std::max(1.0, std::abs(m.node))) {
      throw Error(ErrorCode::AlignmentError, "measurement " + std::to_string(j) +
                                                 " taken at x = " + std::to_string(m.node) +
                                                 ", weight belongs to x = " +
                                                 std::to_string(gamma.nodes()[j]));
    }
    const long double g = gamma[j];
    estimate += g * m.estimate;
    variance += g * g * m.variance_of_mean();
  }
  return ExtrapolationResult{static_cast<double>(estimate), static_cast<double>(variance), gamma,
                             std::nullopt};
}

double allocation_variance(const GammaVector& gamma, std::span<const double> sigmas,
                           std::span<const double> shots) {
  if (sigmas.size() != gamma.size() || shots.size() != gamma.size()) {
    throw Error(ErrorCode::AlignmentError, "allocation vectors do not match the weights");
  }
  double v = 0.0;
  for (std::size_t i = 0; i < gamma.size(); ++i) {
    if (gamma[i] == 0.0 || sigmas[i] == 0.0) continue;
    v += gamma[i] * gamma[i] * sigmas[i] * sigmas[i] / shots[i];
  }
  return v;
}

ShotAllocation optimal_allocation(const GammaVector& gamma, std::span<const double> sigmas,
                                  std::uint64_t total) {
  const std::size_t count = gamma.size();
  if (sigmas.size() != count) {
    throw Error(ErrorCode::AlignmentError, "sigma count does not match the weights");
  }
  if (total < count) {
    throw Error(ErrorCode::InvalidArgument, "total shots must be at least the node count");
  }
  std::vector<double> w(count);
  double wsum = 0.0;
  for (std::size_t i = 0; i < count; ++i) {
    if (!(sigmas[i] >= 0.0)) {
      throw Error(ErrorCode::InvalidArgument, "negative sigma");
    }
    w[i] = std::abs(gamma[i]) * sigmas[i];
    wsum += w[i];
  }
  if (!(wsum > 0.0)) {
    throw Error(ErrorCode::ZeroVarianceInput,
                "all |gamma_i| sigma_i vanish; fall back to a uniform allocation");
  }

  // Largest remainder with a floor of one shot per node.
  const double t = static_cast<double>(total);
  std::vector<std::uint64_t> alloc(count);
  std::vector<double> remainder(count);
  std::uint64_t assigned = 0;
  for (std::size_t i = 0; i < count; ++i) {
    const double target = t * w[i] / wsum;
    const double fl = std::floor(target);
    alloc[i] = std::max<std::uint64_t>(1, static_cast<std::uint64_t>(fl));
    remainder[i] = target - static_cast<double>(alloc[i]);
    assigned += alloc[i];
  }
  std::vector<std::size_t> order(count);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return remainder[a] > remainder[b]; });
  for (std::size_t idx = 0; assigned < total; idx = (idx + 1) % count) {
    ++alloc[order[idx]];
    ++assigned;
  }
  // Only reachable when the one-shot floor overshoots the budget: take back
  // from the nodes that exceed their real-valued share the most.
  for (std::size_t idx = count; assigned > total;) {
    idx = (idx == 0) ? count - 1 : idx - 1;
    const std::size_t i = order[idx];
    if (alloc[i] > 1) {
      --alloc[i];
      --assigned;
    }
  }
  return ShotAllocation{std::move(alloc), total, wsum * wsum / t};
}

}  // namespace zne
