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

#include <vector>

#include <benchmark/benchmark.h>

#include "zne/chebkit.hpp"
#include "zne/extrap.hpp"
#include "zne/qsim.hpp"
#include "zne/rng.hpp"

namespace {

using namespace zne;

void BM_RichardsonGamma(benchmark::State& state) {
  const NodeSet ns = chebyshev_nodes(static_cast<std::size_t>(state.range(0)), Interval(10.0));
  for (auto _ : state) benchmark::DoNotOptimize(richardson_gamma(ns));
}
BENCHMARK(BM_RichardsonGamma)->Arg(4)->Arg(10)->Arg(20);

void BM_LsqGamma(benchmark::State& state) {
  const NodeSet ns = chebyshev_nodes(19, Interval(30.0));
  const auto m = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(lsq_gamma(ns, m));
}
BENCHMARK(BM_LsqGamma)->Arg(3)->Arg(11);

void BM_LsqGammaGeneral(benchmark::State& state) {
  const NodeSet ns = equidistant_nodes(38, Interval(20.0));
  for (auto _ : state) benchmark::DoNotOptimize(lsq_gamma_general(ns, 5));
}
BENCHMARK(BM_LsqGammaGeneral);

void BM_TrotterEvolve(benchmark::State& state) {
  EvolutionSpec s;
  s.tfim = {static_cast<std::size_t>(state.range(0)), 3.0, 2.0};
  s.t_final = 2.0;
  s.trotter_steps = 20;
  s.noise_base = 0.01;
  for (auto _ : state) benchmark::DoNotOptimize(trotter2_evolve(s));
}
BENCHMARK(BM_TrotterEvolve)->Arg(3)->Arg(5)->Arg(7);

void BM_ExactExpectation(benchmark::State& state) {
  EvolutionSpec s;
  s.tfim = {5, 3.0, 2.0};
  s.t_final = 2.0;
  for (auto _ : state) benchmark::DoNotOptimize(exact_expectation(s, {Pauli::X, 0}));
}
BENCHMARK(BM_ExactExpectation);

void BM_SampleBinomial(benchmark::State& state) {
  Philox4x32 rng(1);
  const auto trials = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sample_binomial(rng, trials, 0.6));
}
BENCHMARK(BM_SampleBinomial)->Arg(8)->Arg(1000000);

}  // namespace

BENCHMARK_MAIN();
