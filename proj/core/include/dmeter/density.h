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

#ifndef DMETER_DENSITY_H_
#define DMETER_DENSITY_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "dmeter/embedding.h"

namespace dmeter {

enum class Similarity {
  kCosine,
  // 1 / (1 + euclidean distance)
  kInverseEuclidean,
};

std::string_view SimilarityName(Similarity similarity);
Similarity ParseSimilarity(std::string_view name);

struct DensityParams {
  std::size_t k = 0;
  Similarity similarity = Similarity::kCosine;
};

struct DensityReport {
  double global_density = 0;
  // Aligned with the embedding labels. Low values rank outlier candidates.
  std::vector<double> per_point_density;
  DensityParams params;
};

// Exact search is refused above this many rows.
inline constexpr std::size_t kMaxExactNeighborRows = 50000;

// Mean similarity of each point to its k most similar other points; ties at
// rank k resolve to the lower row index. Throws ArgumentError unless
// 1 <= k <= n - 1 and n <= kMaxExactNeighborRows, and UndefinedValueError
// naming the row for a zero-norm row under cosine.
DensityReport KnnDensity(const EmbeddingMatrix& embeddings, std::size_t k,
                         Similarity similarity = Similarity::kCosine);

enum class VolumeMode { kBoundingBox, kUnitHypercube };

std::string_view VolumeModeName(VolumeMode mode);
VolumeMode ParseVolumeMode(std::string_view name);

struct DataDensityResult {
  // n / volume; may overflow to inf or underflow to 0 in high dimension, in
  // which case `raw_out_of_range` is set. `log_density` is always finite.
  double density = 0;
  double log_density = 0;
  bool raw_out_of_range = false;
  // Dimensions whose extent was zero and got replaced by an epsilon-scaled
  // span.
  std::vector<std::size_t> degenerate_dims;
  VolumeMode mode = VolumeMode::kBoundingBox;
};

// Samples per unit volume of the embedding space. Throws
// UndefinedValueError when an extent is non-finite.
DataDensityResult DataDensity(const EmbeddingMatrix& embeddings,
                              VolumeMode mode = VolumeMode::kBoundingBox);

}  // namespace dmeter

#endif  // DMETER_DENSITY_H_
