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

#include "zne/qsim.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "zne/error.hpp"
#include "zne/linalg.hpp"
#include "zne/rng.hpp"

namespace zne {
namespace {

using Complex = std::complex<double>;

std::size_t qubit_mask(std::size_t num_qubits, std::size_t qubit) {
  return std::size_t{1} << (num_qubits - 1 - qubit);
}

void check_observable(const PauliObservable& obs, std::size_t num_qubits) {
  if (obs.qubit >= num_qubits) {
    throw Error(ErrorCode::DimensionMismatch, "observable qubit " + std::to_string(obs.qubit) +
                                                  " outside a " + std::to_string(num_qubits) +
                                                  "-qubit register");
  }
}

// Diagonal of H_ZZ = -J sum_i Z_i Z_{i+1}.
std::vector<double> zz_diagonal(const TfimConfig& cfg) {
  const std::size_t dim = cfg.dim();
  std::vector<double> d(dim, 0.0);
  for (std::size_t s = 0; s < dim; ++s) {
    double e = 0.0;
    for (std::size_t i = 0; i + 1 < cfg.num_qubits; ++i) {
      const bool a = (s & qubit_mask(cfg.num_qubits, i)) != 0;
      const bool b = (s & qubit_mask(cfg.num_qubits, i + 1)) != 0;
      e += (a == b) ? 1.0 : -1.0;
    }
    d[s] = -cfg.coupling * e;
  }
  return d;
}

// rho <- U rho U^dagger for a single-qubit U acting on `mask`.
void apply_one_qubit(DensityMatrix& rho, std::size_t mask, const Complex u[2][2]) {
  const std::size_t dim = rho.dim();
  for (std::size_t r = 0; r < dim; ++r) {
    if (r & mask) continue;
    const std::size_t r1 = r | mask;
    for (std::size_t c = 0; c < dim; ++c) {
      const Complex a = rho(r, c);
      const Complex b = rho(r1, c);
      rho(r, c) = u[0][0] * a + u[0][1] * b;
      rho(r1, c) = u[1][0] * a + u[1][1] * b;
    }
  }
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t c = 0; c < dim; ++c) {
      if (c & mask) continue;
      const std::size_t c1 = c | mask;
      const Complex a = rho(r, c);
      const Complex b = rho(r, c1);
      rho(r, c) = a * std::conj(u[0][0]) + b * std::conj(u[0][1]);
      rho(r, c1) = a * std::conj(u[1][0]) + b * std::conj(u[1][1]);
    }
  }
}

void apply_diagonal_phase(DensityMatrix& rho, const std::vector<Complex>& phase) {
  const std::size_t dim = rho.dim();
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t c = 0; c < dim; ++c) rho(r, c) *= phase[r] * std::conj(phase[c]);
  }
}

}  // namespace

void TfimConfig::validate() const {
  if (num_qubits < 2 || num_qubits > kMaxQubits) {
    throw Error(ErrorCode::InvalidArgument,
                "num_qubits must lie in [2, " + std::to_string(kMaxQubits) + "]");
  }
  if (!std::isfinite(coupling) || !std::isfinite(field)) {
    throw Error(ErrorCode::InvalidArgument, "J and h must be finite");
  }
}

std::string_view to_string(NoiseModel model) noexcept {
  return model == NoiseModel::Rate ? "rate" : "per_step";
}

NoiseModel parse_noise_model(std::string_view name) {
  if (name == "per_step") return NoiseModel::PerStep;
  if (name == "rate") return NoiseModel::Rate;
  throw Error(ErrorCode::InvalidArgument, "unknown noise model '" + std::string(name) + "'");
}

double EvolutionSpec::step_channel_parameter() const noexcept {
  const double lam = noise_strength();
  if (noise_model == NoiseModel::Rate) return -std::expm1(-lam * tau());
  return lam;
}

double EvolutionSpec::damping_factor() const noexcept {
  if (noise_model == NoiseModel::Rate) return std::exp(-noise_strength() * t_final);
  return std::pow(1.0 - step_channel_parameter(), static_cast<double>(trotter_steps));
}

void EvolutionSpec::validate() const {
  tfim.validate();
  if (!(std::isfinite(t_final) && t_final >= 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "t_final must be finite and non-negative");
  }
  if (trotter_steps == 0) {
    throw Error(ErrorCode::InvalidArgument, "trotter_steps must be at least 1");
  }
  if (!(std::isfinite(noise_base) && noise_base >= 0.0) ||
      !(std::isfinite(noise_scale) && noise_scale >= 0.0)) {
    throw Error(ErrorCode::InvalidChannel, "noise base and scale must be non-negative");
  }
  const double p = step_channel_parameter();
  if (!(p >= 0.0 && p <= 1.0)) {
    throw Error(ErrorCode::InvalidChannel,
                "per-step depolarizing parameter " + std::to_string(p) + " is outside [0, 1]");
  }
}

std::string_view to_string(Pauli p) noexcept {
  switch (p) {
    case Pauli::X: return "X";
    case Pauli::Y: return "Y";
    case Pauli::Z: return "Z";
  }
  return "X";
}

Pauli parse_pauli(std::string_view name) {
  if (name == "X" || name == "x") return Pauli::X;
  if (name == "Y" || name == "y") return Pauli::Y;
  if (name == "Z" || name == "z") return Pauli::Z;
  throw Error(ErrorCode::InvalidArgument, "unknown Pauli '" + std::string(name) + "'");
}

DensityMatrix::DensityMatrix(std::size_t num_qubits)
    : num_qubits_(num_qubits), dim_(std::size_t{1} << num_qubits), data_(dim_ * dim_) {}

DensityMatrix DensityMatrix::zero_state(std::size_t num_qubits) {
  if (num_qubits == 0 || num_qubits > kMaxQubits) {
    throw Error(ErrorCode::InvalidArgument, "unsupported qubit count");
  }
  DensityMatrix rho(num_qubits);
  rho(0, 0) = 1.0;
  return rho;
}

DensityMatrix DensityMatrix::maximally_mixed(std::size_t num_qubits) {
  if (num_qubits == 0 || num_qubits > kMaxQubits) {
    throw Error(ErrorCode::InvalidArgument, "unsupported qubit count");
  }
  DensityMatrix rho(num_qubits);
  const double v = 1.0 / static_cast<double>(rho.dim());
  for (std::size_t i = 0; i < rho.dim(); ++i) rho(i, i) = v;
  return rho;
}

DensityMatrix DensityMatrix::from_pure(std::span<const Complex> amplitudes) {
  const std::size_t dim = amplitudes.size();
  if (dim < 2 || (dim & (dim - 1)) != 0) {
    throw Error(ErrorCode::DimensionMismatch, "state length must be a power of two");
  }
  std::size_t l = 0;
  while ((std::size_t{1} << l) < dim) ++l;
  if (l > kMaxQubits) throw Error(ErrorCode::InvalidArgument, "unsupported qubit count");
  double norm = 0.0;
  for (const Complex& a : amplitudes) norm += std::norm(a);
  if (!(norm > 0.0)) throw Error(ErrorCode::InvalidArgument, "zero state vector");
  DensityMatrix rho(l);
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t c = 0; c < dim; ++c) {
      rho(r, c) = amplitudes[r] * std::conj(amplitudes[c]) / norm;
    }
  }
  return rho;
}

Complex DensityMatrix::trace() const noexcept {
  Complex t = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

double DensityMatrix::purity() const noexcept {
  // Tr(rho^2) = sum_{rc} rho_rc rho_cr = sum |rho_rc|^2 for Hermitian rho.
  double p = 0.0;
  for (std::size_t r = 0; r < dim_; ++r) {
    for (std::size_t c = 0; c < dim_; ++c) p += ((*this)(r, c) * (*this)(c, r)).real();
  }
  return p;
}

PhysicalityReport check_physical(const DensityMatrix& rho) {
  const std::size_t d = rho.dim();
  PhysicalityReport rep;
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t c = r; c < d; ++c) {
      rep.hermiticity_error =
          std::max(rep.hermiticity_error, std::abs(rho(r, c) - std::conj(rho(c, r))));
    }
  }
  rep.trace_error = std::abs(rho.trace() - 1.0);
  // The real embedding [[Re, -Im], [Im, Re]] has each eigenvalue of rho twice.
  const std::size_t n = 2 * d;
  std::vector<double> m(n * n);
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t c = 0; c < d; ++c) {
      const Complex h = 0.5 * (rho(r, c) + std::conj(rho(c, r)));
      m[r * n + c] = h.real();
      m[r * n + c + d] = -h.imag();
      m[(r + d) * n + c] = h.imag();
      m[(r + d) * n + c + d] = h.real();
    }
  }
  rep.min_eigenvalue = linalg::jacobi_eigen(std::move(m), n, 1e-14).values.front();
  return rep;
}

std::vector<double> tfim_hamiltonian(const TfimConfig& config) {
  config.validate();
  const std::size_t dim = config.dim();
  std::vector<double> h(dim * dim, 0.0);
  const std::vector<double> diag = zz_diagonal(config);
  for (std::size_t s = 0; s < dim; ++s) {
    h[s * dim + s] = diag[s];
    for (std::size_t q = 0; q < config.num_qubits; ++q) {
      h[s * dim + (s ^ qubit_mask(config.num_qubits, q))] -= config.field;
    }
  }
  return h;
}

double exact_expectation(const EvolutionSpec& evo, const PauliObservable& obs) {
  evo.validate();
  if (!evo.noiseless()) {
    throw Error(ErrorCode::InvalidArgument, "exact evolution needs a noiseless evo");
  }
  const std::size_t l = evo.tfim.num_qubits;
  check_observable(obs, l);
  const std::size_t dim = evo.tfim.dim();
  const linalg::SymmetricEigen eig = linalg::jacobi_eigen(tfim_hamiltonian(evo.tfim), dim);

  // psi(T) = V exp(-i E T) V^T e_0.
  std::vector<Complex> psi(dim, 0.0);
  for (std::size_t k = 0; k < dim; ++k) {
    const Complex w =
        std::polar(eig.vector_entry(0, k), -eig.values[k] * evo.t_final);
    for (std::size_t s = 0; s < dim; ++s) psi[s] += eig.vector_entry(s, k) * w;
  }
  const std::size_t mask = qubit_mask(l, obs.qubit);
  Complex e = 0.0;
  for (std::size_t s = 0; s < dim; ++s) {
    const bool one = (s & mask) != 0;
    switch (obs.which) {
      case Pauli::X: e += std::conj(psi[s]) * psi[s ^ mask]; break;
      case Pauli::Y:
        e += std::conj(psi[s]) * (one ? Complex(0, 1) : Complex(0, -1)) * psi[s ^ mask];
        break;
      case Pauli::Z: e += std::norm(psi[s]) * (one ? -1.0 : 1.0); break;
    }
  }
  return std::clamp(e.real(), -1.0, 1.0);
}

DensityMatrix depolarize(DensityMatrix rho, double lam) {
  depolarize_in_place(rho, lam);
  return rho;
}

void depolarize_in_place(DensityMatrix& rho, double lam) {
  if (!(lam >= 0.0 && lam <= 1.0)) {
    throw Error(ErrorCode::InvalidChannel,
                "depolarizing parameter " + std::to_string(lam) + " is outside [0, 1]");
  }
  if (lam == 0.0) return;
  const double keep = 1.0 - lam;
  for (Complex& v : rho.data()) v *= keep;
  const double mix = lam / static_cast<double>(rho.dim());
  for (std::size_t i = 0; i < rho.dim(); ++i) rho(i, i) += mix;
}

DensityMatrix trotter2_evolve(const EvolutionSpec& evo) {
  evo.validate();
  const TfimConfig& cfg = evo.tfim;
  const double tau = evo.tau();
  const double p = evo.step_channel_parameter();

  const std::vector<double> diag = zz_diagonal(cfg);
  std::vector<Complex> half_phase(diag.size());
  for (std::size_t s = 0; s < diag.size(); ++s) {
    half_phase[s] = std::polar(1.0, -diag[s] * tau / 2.0);
  }
  // exp(-i (-h X) tau) = cos(h tau) I + i sin(h tau) X.
  const double theta = cfg.field * tau;
  const Complex rot[2][2] = {{std::cos(theta), Complex(0, std::sin(theta))},
                             {Complex(0, std::sin(theta)), std::cos(theta)}};

  DensityMatrix rho = DensityMatrix::zero_state(cfg.num_qubits);
  for (std::size_t step = 0; step < evo.trotter_steps; ++step) {
    apply_diagonal_phase(rho, half_phase);
    for (std::size_t q = 0; q < cfg.num_qubits; ++q) {
      apply_one_qubit(rho, qubit_mask(cfg.num_qubits, q), rot);
    }
    apply_diagonal_phase(rho, half_phase);
    depolarize_in_place(rho, p);
  }
  return rho;
}

double expectation(const DensityMatrix& rho, const PauliObservable& obs) {
  check_observable(obs, rho.num_qubits());
  const std::size_t mask = qubit_mask(rho.num_qubits(), obs.qubit);
  Complex e = 0.0;
  for (std::size_t c = 0; c < rho.dim(); ++c) {
    const bool one = (c & mask) != 0;
    switch (obs.which) {
      case Pauli::X: e += rho(c ^ mask, c); break;
      case Pauli::Y: e += (one ? Complex(0, 1) : Complex(0, -1)) * rho(c ^ mask, c); break;
      case Pauli::Z: e += one ? -rho(c, c) : rho(c, c); break;
    }
  }
  if (std::abs(e.imag()) > 1e-10) {
    throw Error(ErrorCode::NumericalFailure, "expectation has imaginary part " +
                                                 std::to_string(e.imag()));
  }
  return e.real();
}

Measurement sample_shots(double true_expectation, std::uint64_t shots, std::uint64_t seed) {
  if (shots == 0) throw Error(ErrorCode::InvalidArgument, "shots must be at least 1");
  if (!(true_expectation >= -1.0 - 1e-12 && true_expectation <= 1.0 + 1e-12)) {
    throw Error(ErrorCode::InvalidArgument, "expectation outside [-1, 1]");
  }
  Philox4x32 rng(seed);
  const double p_plus = std::clamp((1.0 + true_expectation) / 2.0, 0.0, 1.0);
  const std::uint64_t k = sample_binomial(rng, shots, p_plus);
  Measurement m;
  m.shots = shots;
  m.seed = seed;
  m.estimate = 2.0 * static_cast<double>(k) / static_cast<double>(shots) - 1.0;
  m.sigma = std::sqrt(std::max(0.0, 1.0 - m.estimate * m.estimate));
  return m;
}

std::vector<double> scan_noise_exact(const EvolutionSpec& base, const NodeSet& nodes,
                                     const PauliObservable& obs) {
  check_observable(obs, base.tfim.num_qubits);
  std::vector<double> out;
  out.reserve(nodes.size());
  for (double x : nodes.nodes()) {
    EvolutionSpec evo = base;
    evo.noise_scale = x;
    out.push_back(expectation(trotter2_evolve(evo), obs));
  }
  return out;
}

std::vector<Measurement> scan_noise(const EvolutionSpec& base, const NodeSet& nodes,
                                    const PauliObservable& obs, std::uint64_t shots,
                                    std::uint64_t seed) {
  const std::vector<double> exact = scan_noise_exact(base, nodes, obs);
  std::vector<Measurement> out;
  out.reserve(exact.size());
  for (std::size_t j = 0; j < exact.size(); ++j) {
    Measurement m = sample_shots(exact[j], shots, derive_seed(seed, j));
    m.node = nodes[j];
    out.push_back(m);
  }
  return out;
}

}  // namespace zne
