// Copyright 2026 The Authors.
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

#include <benchmark/benchmark.h>

#include "blockdm/decompose.hpp"
#include "blockdm/oracle.hpp"
#include "fixtures.hpp"

namespace {

using blockdm::FieldSpec;
using blockdm::PartitionedMatrix;

PartitionedMatrix Square(std::size_t blocks, const FieldSpec& field, double zero_probability) {
  blockdm::testing::Rng rng(blocks * 7919);
  const std::vector<std::size_t> sizes(blocks, 2);
  return blockdm::testing::RandomRank1Matrix(rng, field, sizes, sizes, zero_probability);
}

void BM_DecomposeGf2(benchmark::State& state) {
  PartitionedMatrix a = Square(static_cast<std::size_t>(state.range(0)), FieldSpec::Prime(2), 0.5);
  for (auto _ : state) benchmark::DoNotOptimize(blockdm::DmDecompose(a));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_DecomposeGf2)->RangeMultiplier(2)->Range(4, 64)->Complexity();

void BM_DecomposeSparseGf2(benchmark::State& state) {
  PartitionedMatrix a = Square(static_cast<std::size_t>(state.range(0)), FieldSpec::Prime(2), 0.9);
  for (auto _ : state) benchmark::DoNotOptimize(blockdm::DmDecompose(a));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_DecomposeSparseGf2)->RangeMultiplier(2)->Range(4, 64)->Complexity();

void BM_DecomposeRational(benchmark::State& state) {
  PartitionedMatrix a = Square(static_cast<std::size_t>(state.range(0)), FieldSpec::Rationals(), 0.5);
  for (auto _ : state) benchmark::DoNotOptimize(blockdm::DmDecompose(a));
}
BENCHMARK(BM_DecomposeRational)->RangeMultiplier(2)->Range(4, 32);

void BM_MaxIndependentMatching(benchmark::State& state) {
  PartitionedMatrix a = Square(static_cast<std::size_t>(state.range(0)), FieldSpec::Prime(3), 0.7);
  blockdm::StabilityGraph g = blockdm::BuildStabilityGraph(a);
  for (auto _ : state) benchmark::DoNotOptimize(blockdm::MaxIndependentMatching(g));
}
BENCHMARK(BM_MaxIndependentMatching)->RangeMultiplier(2)->Range(4, 64);

void BM_BruteForceOracle(benchmark::State& state) {
  PartitionedMatrix a = blockdm::testing::ReferenceInstance();
  for (auto _ : state) benchmark::DoNotOptimize(blockdm::oracle::BruteForceMaxStable(a));
}
BENCHMARK(BM_BruteForceOracle);

}  // namespace

BENCHMARK_MAIN();
