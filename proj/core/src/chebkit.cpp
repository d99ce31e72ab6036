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

#include "zne/chebkit.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "zne/error.hpp"

namespace zne {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::InvalidInterval: return "InvalidInterval";
    case ErrorCode::DegenerateNodeCount: return "DegenerateNodeCount";
    case ErrorCode::DegenerateNodes: return "DegenerateNodes";
    case ErrorCode::DegreeExceedsNodes: return "DegreeExceedsNodes";
    case ErrorCode::SchemeMismatch: return "SchemeMismatch";
    case ErrorCode::AlignmentError: return "AlignmentError";
    case ErrorCode::ZeroVarianceInput: return "ZeroVarianceInput";
    case ErrorCode::ConditionViolated: return "ConditionViolated";
    case ErrorCode::InvalidChannel: return "InvalidChannel";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NumericalFailure: return "NumericalFailure";
    case ErrorCode::ScheduleViolation: return "ScheduleViolation";
    case ErrorCode::ConfigError: return "ConfigError";
  }
  return "Unknown";
}

Interval::Interval(double b_max) : b_max_(b_max) {
  if (!(b_max > 1.0) || !std::isfinite(b_max)) {
    throw Error(ErrorCode::InvalidInterval, "B must be finite and > 1, got " + std::to_string(b_max));
  }
}

std::string_view to_string(NodeScheme scheme) noexcept {
  switch (scheme) {
    case NodeScheme::Equidistant: return "equidistant";
    case NodeScheme::Chebyshev: return "chebyshev";
    case NodeScheme::Custom: return "custom";
  }
  return "custom";
}

NodeScheme parse_node_scheme(std::string_view name) {
  if (name == "equidistant") return NodeScheme::Equidistant;
  if (name == "chebyshev") return NodeScheme::Chebyshev;
  if (name == "custom") return NodeScheme::Custom;
  throw Error(ErrorCode::InvalidArgument, "unknown node scheme '" + std::string(name) + "'");
}

NodeSet equidistant_nodes(std::size_t n, Interval interval) {
  if (n == 0) {
    throw Error(ErrorCode::DegenerateNodeCount,
                "equidistant nodes need n >= 1; use custom_nodes for a single node");
  }
  std::vector<double> x(n + 1);
  const double b = interval.b_max();
  const double h = interval.width() / static_cast<double>(n);
  for (std::size_t j = 0; j <= n; ++j) {
    x[j] = 1.0 + static_cast<double>(j) * h;
  }
  x.back() = b;
  return NodeSet(std::move(x), NodeScheme::Equidistant, interval);
}

NodeSet chebyshev_nodes(std::size_t n, Interval interval) {
  const std::size_t count = n + 1;
  std::vector<double> x(count);
  for (std::size_t k = 0; k < count; ++k) {
    const double angle = static_cast<double>(2 * k + 1) * std::numbers::pi /
                         (2.0 * static_cast<double>(count));
    // Root k is decreasing in k; store index count-1-k to sort increasing.
    x[count - 1 - k] = interval.from_reference(std::cos(angle));
  }
  if (count % 2 == 1) {
    x[count / 2] = interval.from_reference(0.0);
  }
  return NodeSet(std::move(x), NodeScheme::Chebyshev, interval);
}

NodeSet custom_nodes(std::vector<double> nodes, Interval interval) {
  if (nodes.empty()) {
    throw Error(ErrorCode::DegenerateNodeCount, "custom node set is empty");
  }
  std::sort(nodes.begin(), nodes.end());
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (!std::isfinite(nodes[i]) || !interval.contains(nodes[i])) {
      throw Error(ErrorCode::InvalidArgument,
                  "node " + std::to_string(nodes[i]) + " outside [1, B]");
    }
    if (i > 0 && nodes[i] == nodes[i - 1]) {
      throw Error(ErrorCode::DegenerateNodes, "duplicate node " + std::to_string(nodes[i]));
    }
  }
  return NodeSet(std::move(nodes), NodeScheme::Custom, interval);
}

double kappa(const Interval& interval) noexcept {
  const double s = std::sqrt(interval.b_max());
  return (s + 1.0) / (s - 1.0);
}

double kappa(double b_max) { return kappa(Interval(b_max)); }

double chebyshev_t(std::size_t k, double y) noexcept {
  if (k == 0) return 1.0;
  if (std::abs(y) <= 1.0) {
    return std::cos(static_cast<double>(k) * std::acos(y));
  }
  // |r| >= 1 branch of y +- sqrt(y^2 - 1); the r^{-k} term is the small one.
  const double a = std::abs(y);
  const double r = a + std::sqrt((a - 1.0) * (a + 1.0));
  const double rk = std::pow(r, static_cast<double>(k));
  const double value = 0.5 * (rk + 1.0 / rk);
  return (y < 0.0 && (k % 2 == 1)) ? -value : value;
}

double shifted_chebyshev_t(std::size_t k, double x, const Interval& interval) noexcept {
  return chebyshev_t(k, interval.to_reference(x));
}

double rescaled_tau(std::size_t k, double x, std::size_t n, const Interval& interval) noexcept {
  const double count = static_cast<double>(n + 1);
  const double scale = (k == 0) ? std::sqrt(1.0 / count) : std::sqrt(2.0 / count);
  return scale * shifted_chebyshev_t(k, x, interval);
}

}  // namespace zne
