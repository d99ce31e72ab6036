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
#include <span>
#include <string_view>
#include <vector>

#include "zne/chebkit.hpp"

namespace zne {

enum class GammaMethod {
  Richardson,
  /// Closed-form least squares on Chebyshev nodes (orthonormal tau basis).
  LeastSquares,
  /// Least squares on arbitrary nodes through a discretely orthonormalised
  /// Chebyshev basis. No error bounds are attached to these weights.
  LeastSquaresGeneral,
};

std::string_view to_string(GammaMethod method) noexcept;

/// Extrapolation weights gamma_j with p(0) = sum_j gamma_j f(x_j).
class GammaVector {
 public:
  GammaVector(std::vector<double> nodes, std::vector<double> weights, GammaMethod method,
              std::size_t degree);

  std::span<const double> weights() const noexcept { return weights_; }
  std::span<const double> nodes() const noexcept { return nodes_; }
  double operator[](std::size_t i) const { return weights_[i]; }
  std::size_t size() const noexcept { return weights_.size(); }
  GammaMethod method() const noexcept { return method_; }
  /// Polynomial degree: n for Richardson, m for least squares.
  std::size_t degree() const noexcept { return degree_; }
  double l1_norm() const noexcept { return l1_norm_; }
  double sum() const noexcept;

 private:
  std::vector<double> nodes_;
  std::vector<double> weights_;
  GammaMethod method_;
  std::size_t degree_;
  double l1_norm_;
};

/// One sampled node: estimate is the sample mean over `shots` outcomes and
/// sigma the per-shot standard deviation.
struct Measurement {
  double node = 1.0;
  double estimate = 0.0;
  std::uint64_t shots = 1;
  double sigma = 0.0;
  std::uint64_t seed = 0;

  double variance_of_mean() const noexcept {
    return sigma * sigma / static_cast<double>(shots);
  }
};

struct ExtrapolationResult {
  double estimate = 0.0;
  double variance = 0.0;
  GammaVector gamma;
  std::optional<double> bias_bound;

  double standard_error() const noexcept;
};

struct ShotAllocation {
  std::vector<std::uint64_t> per_node;
  std::uint64_t total = 0;
  double min_variance = 0.0;
};

/// gamma_j = prod_{k != j} x_k / (x_k - x_j).
GammaVector richardson_gamma(const NodeSet& nodes);
GammaVector richardson_gamma(std::span<const double> nodes);

/// gamma_i = sum_{k<=m} tau~_k(x_i) tau~_k(0). Chebyshev node sets only.
GammaVector lsq_gamma(const NodeSet& nodes, std::size_t m);

/// Degree-m least-squares weights for any node set.
GammaVector lsq_gamma_general(const NodeSet& nodes, std::size_t m);

/// sum_j gamma_j y_j for exact (shot-free) data.
double extrapolate_values(std::span<const double> values, const GammaVector& gamma);

/// Weighted estimate and propagated variance sum_j gamma_j^2 sigma_j^2 / N_j.
ExtrapolationResult extrapolate(std::span<const Measurement> measurements,
                                const GammaVector& gamma);

/// sum_j gamma_j^2 sigma_j^2 / N_j for real-valued shot counts.
double allocation_variance(const GammaVector& gamma, std::span<const double> sigmas,
                           std::span<const double> shots);

/// Shots proportional to |gamma_i| sigma_i, integerised by largest remainder
/// with at least one shot per node. min_variance is the real-valued optimum
/// (sum_i |gamma_i| sigma_i)^2 / total.
ShotAllocation optimal_allocation(const GammaVector& gamma, std::span<const double> sigmas,
                                  std::uint64_t total);

}  // namespace zne
