// Copyright 2026 The g41 Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include <random>

#include "g41/dirac.hpp"
#include "g41/hermitian_eigen.hpp"
#include "g41/matrix_rep.hpp"
#include "g41/monogenic.hpp"
#include "g41/multivector.hpp"
#include "g41/verify.hpp"

namespace {

g41::Multivector random_multivector(std::mt19937_64& gen) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  g41::Multivector m;
  for (unsigned b = 0; b < g41::kBlades; ++b) m += g41::Multivector::blade(g41::BladeIndex(b), u(gen));
  return m;
}

void BM_GeometricProduct(benchmark::State& state) {
  std::mt19937_64 gen(1);
  const g41::Multivector a = random_multivector(gen);
  const g41::Multivector b = random_multivector(gen);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_GeometricProduct);

void BM_Phi(benchmark::State& state) {
  std::mt19937_64 gen(2);
  const g41::Multivector a = random_multivector(gen);
  for (auto _ : state) benchmark::DoNotOptimize(g41::phi(a));
}
BENCHMARK(BM_Phi);

void BM_PhiInverse(benchmark::State& state) {
  std::mt19937_64 gen(3);
  const g41::ComplexMatrix4 m = g41::phi(random_multivector(gen));
  for (auto _ : state) benchmark::DoNotOptimize(g41::phi_inv(m));
}
BENCHMARK(BM_PhiInverse);

void BM_Eigendecompose(benchmark::State& state) {
  const auto k = g41::MomentumVector::from_momentum({1.0, -2.0, 0.5}, 1.5);
  const g41::ComplexMatrix4 a = g41::build_dirac_operator(k);
  for (auto _ : state) benchmark::DoNotOptimize(g41::eigendecompose(a));
}
BENCHMARK(BM_Eigendecompose);

void BM_DiracSystem(benchmark::State& state) {
  const auto k = g41::MomentumVector::from_momentum({1.0, -2.0, 0.5}, 1.5);
  for (auto _ : state) benchmark::DoNotOptimize(g41::dirac_system(k));
}
BENCHMARK(BM_DiracSystem);

void BM_VectorDerivative(benchmark::State& state) {
  const auto field = g41::plane_wave(g41::MomentumVector::from_momentum({1.0, 0.5, 0.0}, 2.0));
  const g41::Point5 x{0.1, 0.2, 0.3, 0.4, 0.5};
  const auto mode = state.range(0) == 0 ? g41::Differentiation::analytic() : g41::Differentiation::richardson(1e-3);
  for (auto _ : state) benchmark::DoNotOptimize(g41::vector_derivative(field, x, mode));
}
BENCHMARK(BM_VectorDerivative)->Arg(0)->Arg(1);

void BM_VerifySuite(benchmark::State& state) {
  const g41::RunConfig config;
  for (auto _ : state) benchmark::DoNotOptimize(g41::run_suite(config));
}
BENCHMARK(BM_VerifySuite)->Unit(benchmark::kMillisecond)->Iterations(3);

}  // namespace

BENCHMARK_MAIN();
