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

// Dense density-matrix simulator for the open-chain transverse-field Ising
// model H = -J sum_i Z_i Z_{i+1} - h sum_i X_i, evolved from |0...0> by
// symmetric second-order Trotter steps interleaved with a global
// depolarizing channel.
//
// Basis convention: qubit 0 is the most significant bit of the basis index
// (Kronecker order q0 (x) q1 (x) ...).

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "zne/chebkit.hpp"
#include "zne/extrap.hpp"

namespace zne {

inline constexpr std::size_t kMaxQubits = 12;

struct TfimConfig {
  std::size_t num_qubits = 5;
  double coupling = 1.0;
  double field = 1.0;

  void validate() const;
  std::size_t dim() const noexcept { return std::size_t{1} << num_qubits; }
};

/// How the channel strength lambda = x * lambda0 enters each Trotter step.
enum class NoiseModel {
  /// Depolarize with parameter lambda after every step (lambda <= 1).
  PerStep,
  /// lambda is a dissipation rate: parameter 1 - exp(-lambda tau) per step, so
  /// the accumulated damping exp(-lambda T) is independent of the step count.
  Rate,
};

std::string_view to_string(NoiseModel model) noexcept;
NoiseModel parse_noise_model(std::string_view name);

struct EvolutionSpec {
  TfimConfig tfim;
  double t_final = 1.0;
  std::size_t trotter_steps = 1;
  double noise_base = 0.0;
  double noise_scale = 1.0;
  NoiseModel noise_model = NoiseModel::PerStep;

  double tau() const noexcept { return t_final / static_cast<double>(trotter_steps); }
  double noise_strength() const noexcept { return noise_base * noise_scale; }
  /// Depolarizing parameter applied after each step.
  double step_channel_parameter() const noexcept;
  /// Factor multiplying every traceless expectation after the full evolution.
  double damping_factor() const noexcept;
  bool noiseless() const noexcept { return noise_strength() == 0.0; }

  void validate() const;
};

enum class Pauli { X, Y, Z };

std::string_view to_string(Pauli p) noexcept;
Pauli parse_pauli(std::string_view name);

struct PauliObservable {
  Pauli which = Pauli::X;
  std::size_t qubit = 0;
};

class DensityMatrix {
 public:
  using Complex = std::complex<double>;

  static DensityMatrix zero_state(std::size_t num_qubits);
  static DensityMatrix maximally_mixed(std::size_t num_qubits);
  static DensityMatrix from_pure(std::span<const Complex> amplitudes);

  std::size_t num_qubits() const noexcept { return num_qubits_; }
  std::size_t dim() const noexcept { return dim_; }
  Complex& operator()(std::size_t r, std::size_t c) noexcept { return data_[r * dim_ + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const noexcept {
    return data_[r * dim_ + c];
  }
  std::span<Complex> data() noexcept { return data_; }
  std::span<const Complex> data() const noexcept { return data_; }

  Complex trace() const noexcept;
  double purity() const noexcept;

 private:
  DensityMatrix(std::size_t num_qubits);

  std::size_t num_qubits_;
  std::size_t dim_;
  std::vector<Complex> data_;
};

struct PhysicalityReport {
  double hermiticity_error = 0.0;
  double trace_error = 0.0;
  double min_eigenvalue = 0.0;

  bool ok(double herm_tol = 1e-12, double trace_tol = 1e-12, double eig_tol = 1e-10) const noexcept {
    return hermiticity_error <= herm_tol && trace_error <= trace_tol && min_eigenvalue >= -eig_tol;
  }
};

PhysicalityReport check_physical(const DensityMatrix& rho);

/// Dense real-symmetric TFIM Hamiltonian, row-major.
std::vector<double> tfim_hamiltonian(const TfimConfig& config);

/// <psi(T)|A|psi(T)> with psi(T) = exp(-i H T)|0...0> via Jacobi
/// eigendecomposition of H. Requires a noiseless evo.
double exact_expectation(const EvolutionSpec& evo, const PauliObservable& obs);

/// N_T symmetric steps exp(-i H_ZZ tau/2) exp(-i H_X tau) exp(-i H_ZZ tau/2),
/// each followed by the depolarizing channel.
DensityMatrix trotter2_evolve(const EvolutionSpec& evo);

/// (1 - lambda) rho + lambda I / 2^L, lambda in [0, 1].
DensityMatrix depolarize(DensityMatrix rho, double lam);
void depolarize_in_place(DensityMatrix& rho, double lam);

/// Re Tr(A rho); throws NumericalFailure if the imaginary part exceeds 1e-10.
double expectation(const DensityMatrix& rho, const PauliObservable& obs);

/// Sample mean of `shots` +-1 outcomes with P(+1) = (1 + E) / 2.
Measurement sample_shots(double true_expectation, std::uint64_t shots, std::uint64_t seed);

/// Noise-free expectations E(x_j) at each node (noise_scale = x_j).
std::vector<double> scan_noise_exact(const EvolutionSpec& base, const NodeSet& nodes,
                                     const PauliObservable& obs);

/// One sampled measurement per node with child seed derive_seed(seed, j).
std::vector<Measurement> scan_noise(const EvolutionSpec& base, const NodeSet& nodes,
                                    const PauliObservable& obs, std::uint64_t shots,
                                    std::uint64_t seed);

}  // namespace zne
