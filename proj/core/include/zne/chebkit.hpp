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
#include <span>
#include <string_view>
#include <vector>

namespace zne {

/// Noise-amplification range [1, B].
class Interval {
 public:
  explicit Interval(double b_max);

  double b_max() const noexcept { return b_max_; }
  double width() const noexcept { return b_max_ - 1.0; }
  bool contains(double x) const noexcept { return x >= 1.0 && x <= b_max_; }

  /// phi : [-1, 1] -> [1, B].
  double from_reference(double y) const noexcept {
    return 0.5 * width() * y + 0.5 * (b_max_ + 1.0);
  }
  /// phi^{-1} : [1, B] -> [-1, 1], extended affinely to all of R.
  double to_reference(double x) const noexcept {
    return 2.0 * (x - 1.0) / width() - 1.0;
  }

  friend bool operator==(const Interval&, const Interval&) = default;

 private:
  double b_max_;
};

enum class NodeScheme { Equidistant, Chebyshev, Custom };

std::string_view to_string(NodeScheme scheme) noexcept;
NodeScheme parse_node_scheme(std::string_view name);

/// Strictly increasing abscissas x_0 < ... < x_n inside [1, B], tagged with the
/// scheme that produced them. Chebyshev sets are stored in increasing order,
/// i.e. reversed relative to the root index k.
class NodeSet {
 public:
  std::span<const double> nodes() const noexcept { return nodes_; }
  std::size_t size() const noexcept { return nodes_.size(); }
  /// Index n of the last node (size() - 1).
  std::size_t degree() const noexcept { return nodes_.size() - 1; }
  double operator[](std::size_t i) const { return nodes_[i]; }
  NodeScheme scheme() const noexcept { return scheme_; }
  const Interval& interval() const noexcept { return interval_; }

 private:
  NodeSet(std::vector<double> nodes, NodeScheme scheme, Interval interval)
      : nodes_(std::move(nodes)), scheme_(scheme), interval_(interval) {}

  friend NodeSet equidistant_nodes(std::size_t, Interval);
  friend NodeSet chebyshev_nodes(std::size_t, Interval);
  friend NodeSet custom_nodes(std::vector<double>, Interval);

  std::vector<double> nodes_;
  NodeScheme scheme_;
  Interval interval_;
};

/// x_j = 1 + j (B - 1) / n, j = 0..n. Requires n >= 1.
NodeSet equidistant_nodes(std::size_t n, Interval interval);

/// The n + 1 roots of T_{n+1} mapped onto [1, B], sorted increasing.
NodeSet chebyshev_nodes(std::size_t n, Interval interval);

/// Arbitrary nodes in [1, B]; sorted on construction, duplicates rejected.
NodeSet custom_nodes(std::vector<double> nodes, Interval interval);

/// kappa = (sqrt(B) + 1) / (sqrt(B) - 1).
double kappa(const Interval& interval) noexcept;
double kappa(double b_max);

/// First-kind Chebyshev polynomial T_k(y) for any real y. Uses cos(k acos y)
/// on [-1, 1] and the closed form (r^k + r^{-k}) / 2 with r = |y| + sqrt(y^2-1)
/// outside.
double chebyshev_t(std::size_t k, double y) noexcept;

/// T~_k(x) = T_k(2 (x - 1) / (B - 1) - 1).
double shifted_chebyshev_t(std::size_t k, double x, const Interval& interval) noexcept;

/// Rescaled basis tau~_k(x): sqrt(1/(n+1)) T~_0 for k = 0 and
/// sqrt(2/(n+1)) T~_k otherwise. Orthonormal over the n + 1 Chebyshev nodes
/// for k <= n.
double rescaled_tau(std::size_t k, double x, std::size_t n, const Interval& interval) noexcept;

}  // namespace zne
