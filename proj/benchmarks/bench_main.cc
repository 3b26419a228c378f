// Copyright 2026 The dmeter Authors
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

// Microbenchmarks for the hot paths: tokenizing, transport, kNN density,
// Vendi score and Zipf fitting.

#include <cstdint>
#include <string>
#include <vector>

#include <benchmark/benchmark.h>

#include "dmeter/density.h"
#include "dmeter/distance.h"
#include "dmeter/diversity.h"
#include "dmeter/tendency.h"
#include "dmeter/tokenizer.h"
#include "support/generators.h"

namespace dmeter {
namespace {

void BM_TokenizeUnicodeWord(benchmark::State& state) {
  testing::Rng rng(1);
  std::string text;
  for (int i = 0; i < state.range(0); ++i) {
    text += testing::RandomSentence(rng, 8, 8, 1000) + ". ";
  }
  const TokenizerConfig config;
  for (auto _ : state) benchmark::DoNotOptimize(Tokenize(text, config));
  state.SetBytesProcessed(state.iterations() *
                          static_cast<std::int64_t>(text.size()));
}
BENCHMARK(BM_TokenizeUnicodeWord)->Arg(100)->Arg(10000);

void BM_EmdDiscrete(benchmark::State& state) {
  testing::Rng rng(2);
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto p = testing::RandomDistribution(rng, n);
  const auto q = testing::RandomDistribution(rng, n);
  RowMajorMatrix cost(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) cost(i, j) = testing::Uniform(rng, 0, 1);
  }
  for (auto _ : state) benchmark::DoNotOptimize(EmdDiscrete(p, q, cost));
}
BENCHMARK(BM_EmdDiscrete)->Arg(16)->Arg(64)->Arg(128);

void BM_KnnDensityCosine(benchmark::State& state) {
  testing::Rng rng(3);
  const EmbeddingMatrix e = testing::RandomEmbeddings(
      rng, static_cast<std::size_t>(state.range(0)), 32);
  for (auto _ : state) {
    benchmark::DoNotOptimize(KnnDensity(e, 5, Similarity::kCosine));
  }
}
BENCHMARK(BM_KnnDensityCosine)->Arg(1000)->Arg(5000)->Unit(benchmark::kMillisecond);

void BM_VendiScoreCosine(benchmark::State& state) {
  testing::Rng rng(4);
  const EmbeddingMatrix e = testing::RandomEmbeddings(
      rng, static_cast<std::size_t>(state.range(0)), 64);
  for (auto _ : state) benchmark::DoNotOptimize(VendiScoreCosine(e));
}
BENCHMARK(BM_VendiScoreCosine)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

void BM_FitZipf(benchmark::State& state) {
  testing::Rng rng(5);
  const auto counts = testing::SampleZipfCounts(
      rng, 1.1, static_cast<std::size_t>(state.range(0)), 1000000);
  for (auto _ : state) {
    benchmark::DoNotOptimize(FitZipf(counts, ZipfMethod::kDiscreteMle));
  }
}
BENCHMARK(BM_FitZipf)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace dmeter

BENCHMARK_MAIN();
