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
#include <vector>

namespace zne::linalg {

/// Eigenpairs of a dense real symmetric matrix. `vectors` is row-major with
/// eigenvector k stored in column k; values are sorted ascending.
struct SymmetricEigen {
  std::size_t dim = 0;
  std::vector<double> values;
  std::vector<double> vectors;

  double vector_entry(std::size_t row, std::size_t k) const { return vectors[row * dim + k]; }
};

/// Cyclic Jacobi rotations on a row-major symmetric matrix. Sweeps until the
/// off-diagonal Frobenius norm falls below `tolerance` times the matrix norm;
/// throws NumericalFailure after `max_sweeps`.
SymmetricEigen jacobi_eigen(std::vector<double> matrix, std::size_t dim,
                            double tolerance = 1e-15, int max_sweeps = 100);

}  // namespace zne::linalg
