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
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "zne/error.hpp"
#include "zne/linalg.hpp"

namespace zne::linalg {
namespace {

std::vector<double> random_symmetric(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::normal_distribution<double> d;
  std::vector<double> a(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) a[i * n + j] = a[j * n + i] = d(gen);
  }
  return a;
}

TEST(Jacobi, DiagonalMatrixIsSorted) {
  const SymmetricEigen e = jacobi_eigen({3.0, 0.0, 0.0, 0.0, -1.0, 0.0, 0.0, 0.0, 2.0}, 3);
  EXPECT_EQ(e.values, (std::vector<double>{-1.0, 2.0, 3.0}));
  EXPECT_EQ(std::fabs(e.vector_entry(1, 0)), 1.0);
}

TEST(Jacobi, TwoByTwoClosedForm) {
  const SymmetricEigen e = jacobi_eigen({2.0, 1.0, 1.0, 2.0}, 2);
  EXPECT_NEAR(e.values[0], 1.0, 1e-15);
  EXPECT_NEAR(e.values[1], 3.0, 1e-15);
  EXPECT_NEAR(std::fabs(e.vector_entry(0, 1)), std::sqrt(0.5), 1e-15);
}

TEST(Jacobi, ReconstructsRandomMatrices) {
  for (std::size_t n : {1u, 4u, 13u, 32u}) {
    const std::vector<double> a = random_symmetric(n, n);
    const SymmetricEigen e = jacobi_eigen(a, n);
    double trace = 0.0;
    for (std::size_t i = 0; i < n; ++i) trace += a[i * n + i];
    double vsum = 0.0;
    for (double v : e.values) vsum += v;
    EXPECT_NEAR(trace, vsum, 1e-12 * n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        double rec = 0.0, orth = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
          rec += e.vector_entry(i, k) * e.values[k] * e.vector_entry(j, k);
          orth += e.vector_entry(k, i) * e.vector_entry(k, j);
        }
        EXPECT_NEAR(rec, a[i * n + j], 1e-12);
        EXPECT_NEAR(orth, i == j ? 1.0 : 0.0, 1e-12);
      }
    }
    for (std::size_t k = 1; k < n; ++k) EXPECT_LE(e.values[k - 1], e.values[k]);
  }
}

TEST(Jacobi, NonConvergenceIsReported) {
  try {
    jacobi_eigen(random_symmetric(20, 3), 20, 1e-15, 1);
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), ErrorCode::NumericalFailure);
  }
}

}  // namespace
}  // namespace zne::linalg
