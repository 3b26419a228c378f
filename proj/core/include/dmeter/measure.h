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

#ifndef DMETER_MEASURE_H_
#define DMETER_MEASURE_H_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dmeter/corpus.h"
#include "dmeter/density.h"
#include "dmeter/diversity.h"
#include "dmeter/embedding.h"
#include "dmeter/language_model.h"
#include "dmeter/report.h"
#include "dmeter/tendency.h"

namespace dmeter {

// Knobs for AssembleReport. Pointers are borrowed for the duration of the
// call.
struct MeasureConfig {
  // Family names ("tendency", "diversity", "density", "quality") or
  // measurement names such as "tendency.zipf".
  std::vector<std::string> metrics;

  ZipfMethod zipf_method = ZipfMethod::kDiscreteMle;
  int lm_order = 1;
  double lm_smoothing = 1.0;
  // Token whose recurrence gaps feed burstiness when records lack
  // timestamps; defaults to the most frequent token.
  std::optional<std::string> burstiness_token;

  std::vector<std::size_t> ngram_orders = {1, 2};
  NgramDenominator ngram_denominator = NgramDenominator::kTotalNgrams;
  // Attributes for subset diversity; empty means every attribute present.
  std::vector<std::string> subset_attributes;

  std::size_t knn_k = 5;
  Similarity knn_similarity = Similarity::kCosine;
  VolumeMode volume_mode = VolumeMode::kBoundingBox;

  std::size_t top_duplicates = 10;

  const EmbeddingMatrix* embeddings = nullptr;
  std::string embeddings_source;
  const std::vector<ExternalLogProb>* external_logprobs = nullptr;
  std::string logprobs_source;
};

std::vector<std::string> MetricFamilies();
// Every selectable measurement name.
std::vector<std::string> MetricNames();

// Expands families into measurement names, sorted and unique. Throws
// ArgumentError listing the valid names on an unknown entry, or when the
// selection is empty.
std::vector<std::string> ResolveMetrics(std::span<const std::string> selection);

// Computes every selected measurement. A failing metric becomes an entry
// flagged "error"; embedding metrics without embeddings are flagged
// "skipped". Only an invalid selection throws.
MeasurementReport AssembleReport(const Corpus& corpus,
                                 const MeasureConfig& config,
                                 std::string created_at);

}  // namespace dmeter

#endif  // DMETER_MEASURE_H_
