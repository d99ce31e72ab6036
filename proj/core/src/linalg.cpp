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

#include "zne/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "zne/error.hpp"

namespace zne::linalg {

SymmetricEigen jacobi_eigen(std::vector<double> a, std::size_t dim, double tolerance,
                            int max_sweeps) {
  if (a.size() != dim * dim) {
    throw Error(ErrorCode::DimensionMismatch, "matrix is not dim x dim");
  }
  std::vector<double> v(dim * dim, 0.0);
  for (std::size_t i = 0; i < dim; ++i) v[i * dim + i] = 1.0;
  auto at = [&](std::size_t i, std::size_t j) -> double& { return a[i * dim + j]; };

  double total = 0.0;
  for (double x : a) total += x * x;
  const double scale = std::sqrt(total);

  bool converged = dim <= 1 || scale == 0.0;
  for (int sweep = 0; sweep < max_sweeps && !converged; ++sweep) {
    double off = 0.0;
    for (std::size_t i = 0; i < dim; ++i) {
      for (std::size_t j = i + 1; j < dim; ++j) off += 2.0 * at(i, j) * at(i, j);
    }
    if (std::sqrt(off) <= tolerance * scale) {
      converged = true;
      break;
    }
    for (std::size_t p = 0; p + 1 < dim; ++p) {
      for (std::size_t q = p + 1; q < dim; ++q) {
        const double apq = at(p, q);
        if (apq == 0.0) continue;
        const double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
        const double t = std::copysign(1.0, theta) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < dim; ++k) {
          const double akp = at(k, p);
          const double akq = at(k, q);
          at(k, p) = c * akp - s * akq;
          at(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < dim; ++k) {
          const double apk = at(p, k);
          const double aqk = at(q, k);
          at(p, k) = c * apk - s * aqk;
          at(q, k) = s * apk + c * aqk;
        }
        at(p, q) = 0.0;
        at(q, p) = 0.0;
        for (std::size_t k = 0; k < dim; ++k) {
          const double vkp = v[k * dim + p];
          const double vkq = v[k * dim + q];
          v[k * dim + p] = c * vkp - s * vkq;
          v[k * dim + q] = s * vkp + c * vkq;
        }
      }
    }
  }
  if (!converged) {
    double off = 0.0;
    for (std::size_t i = 0; i < dim; ++i) {
      for (std::size_t j = i + 1; j < dim; ++j) off += 2.0 * at(i, j) * at(i, j);
    }
    if (std::sqrt(off) > tolerance * scale) {
      throw Error(ErrorCode::NumericalFailure, "Jacobi iteration did not converge");
    }
  }

  std::vector<std::size_t> order(dim);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t x, std::size_t y) { return at(x, x) < at(y, y); });
  SymmetricEigen out;
  out.dim = dim;
  out.values.resize(dim);
  out.vectors.resize(dim * dim);
  for (std::size_t k = 0; k < dim; ++k) {
    out.values[k] = at(order[k], order[k]);
    for (std::size_t r = 0; r < dim; ++r) out.vectors[r * dim + k] = v[r * dim + order[k]];
  }
  return out;
}

}  // namespace zne::linalg
