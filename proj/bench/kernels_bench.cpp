// SPDX-License-Identifier: Apache-2.0
// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include <vector>

#include "lqi/correlation.hpp"
#include "lqi/invariants.hpp"
#include "lqi/states.hpp"

namespace {

using namespace lqi;

template <bool Parallel>
void BM_Matmul(benchmark::State& state) {
  const auto dim = static_cast<std::size_t>(state.range(0));
  Rng rng(1);
  const ComplexMatrix a = ginibre(dim, rng);
  const ComplexMatrix b = ginibre(dim, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(Parallel ? matmul(a, b) : matmul_serial(a, b));
  }
}
BENCHMARK(BM_Matmul<false>)->Arg(64)->Arg(256);
BENCHMARK(BM_Matmul<true>)->Arg(64)->Arg(256);

template <bool Parallel>
void BM_PartialTrace(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const QubitState s = random_state(n, StateKind::Mixed, 7);
  const std::vector<int> keep = {1, 3};
  for (auto _ : state) {
    benchmark::DoNotOptimize(Parallel ? partial_trace(s.rho(), n, keep)
                                      : partial_trace_serial(s.rho(), n, keep));
  }
}
BENCHMARK(BM_PartialTrace<false>)->Arg(6)->Arg(8);
BENCHMARK(BM_PartialTrace<true>)->Arg(6)->Arg(8);

template <bool Parallel>
void BM_SubsetSum(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const QubitState s = random_state(n, StateKind::Mixed, 11);
  for (auto _ : state) {
    benchmark::DoNotOptimize(Parallel ? linear_mutual_info_subsets(s)
                                      : linear_mutual_info_subsets_serial(s));
  }
}
BENCHMARK(BM_SubsetSum<false>)->Arg(5)->Arg(6);
BENCHMARK(BM_SubsetSum<true>)->Arg(5)->Arg(6);

template <bool Parallel>
void BM_Twirl(benchmark::State& state) {
  const long samples = state.range(0);
  const ComplexMatrix& z = pauli(3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(Parallel ? haar_twirl_mc(z, z, samples, 3)
                                      : haar_twirl_mc_serial(z, z, samples, 3));
  }
}
BENCHMARK(BM_Twirl<false>)->Arg(20000);
BENCHMARK(BM_Twirl<true>)->Arg(20000);

}  // namespace

BENCHMARK_MAIN();
