// Copyright 2026 The chordspace Authors
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

#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "chordspace/chordspace.hpp"

namespace cs = chordspace;

namespace {

const cs::CircleConfig kUnit(1.0);

std::vector<cs::Chord> random_chords(std::size_t n) {
  std::mt19937_64 gen(42);
  std::uniform_real_distribution<double> u(0.0, 6.283185307179586);
  std::vector<cs::Chord> out;
  out.reserve(n);
  while (out.size() < n) {
    const double a = u(gen);
    const double b = u(gen);
    if (a != b) {
      out.emplace_back(a, b);
    }
  }
  return out;
}

void BM_HausdorffDistance(benchmark::State& state) {
  const auto chords = random_chords(1024);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(cs::hausdorff_distance(chords[i & 1023], chords[(i + 1) & 1023], kUnit));
    ++i;
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_HausdorffDistance);

void BM_McProbability(benchmark::State& state) {
  const auto event = cs::membership(cs::BertrandSet{}, kUnit);
  const auto kind = static_cast<cs::SamplerKind>(state.range(1));
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(cs::mc_probability(kind, event, n, 1).hits);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_McProbability)
    ->ArgsProduct({{100000}, {static_cast<long>(cs::SamplerKind::H2Uniform),
                              static_cast<long>(cs::SamplerKind::RandomMidpoint),
                              static_cast<long>(cs::SamplerKind::RandomRadius)}})
    ->Unit(benchmark::kMillisecond);

void BM_GridCoverCount(benchmark::State& state) {
  const auto predicate = cs::membership(cs::TubeSet{1.0}, kUnit);
  for (auto _ : state) {
    benchmark::DoNotOptimize(cs::grid_cover_count(predicate, state.range(0), kUnit).cells);
  }
}
BENCHMARK(BM_GridCoverCount)->RangeMultiplier(2)->Range(64, 512)->Unit(benchmark::kMillisecond);

void BM_BertrandInnerCover(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(cs::bertrand_inner_cover(state.range(0), kUnit).tube_count);
  }
}
BENCHMARK(BM_BertrandInnerCover)->Arg(300)->Arg(3000);

}  // namespace

BENCHMARK_MAIN();
