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

#include "dmeter/density.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "dmeter/errors.h"

namespace dmeter {

std::string_view SimilarityName(Similarity similarity) {
  return similarity == Similarity::kCosine ? "cosine" : "inverse-euclidean";
}

Similarity ParseSimilarity(std::string_view name) {
  if (name == "cosine") return Similarity::kCosine;
  if (name == "inverse-euclidean") return Similarity::kInverseEuclidean;
  throw ArgumentError("unknown similarity '" + std::string(name) +
                      "' (expected cosine or inverse-euclidean)");
}

std::string_view VolumeModeName(VolumeMode mode) {
  return mode == VolumeMode::kBoundingBox ? "bounding-box" : "unit-hypercube";
}

VolumeMode ParseVolumeMode(std::string_view name) {
  if (name == "bounding-box") return VolumeMode::kBoundingBox;
  if (name == "unit-hypercube") return VolumeMode::kUnitHypercube;
  throw ArgumentError("unknown volume mode '" + std::string(name) +
                      "' (expected bounding-box or unit-hypercube)");
}

DensityReport KnnDensity(const EmbeddingMatrix& embeddings, std::size_t k,
                         Similarity similarity) {
  const std::size_t n = embeddings.rows();
  if (n < 2) throw ArgumentError("knn density needs at least 2 rows");
  if (k < 1 || k > n - 1) {
    throw ArgumentError("k must be in [1, " + std::to_string(n - 1) + "]");
  }
  if (n > kMaxExactNeighborRows) {
    throw ArgumentError("knn density is exact only up to " +
                        std::to_string(kMaxExactNeighborRows) +
                        " rows; sample the data first");
  }
  const RowMajorMatrix& x = embeddings.values();
  Eigen::VectorXd norms = x.rowwise().norm();
  if (similarity == Similarity::kCosine) {
    for (std::size_t i = 0; i < n; ++i) {
      if (norms(static_cast<Eigen::Index>(i)) == 0) {
        throw UndefinedValueError("zero-norm row '" + embeddings.labels()[i] +
                                  "' under cosine similarity");
      }
    }
  }

  DensityReport report;
  report.params = {k, similarity};
  report.per_point_density.resize(n);

  // Cosine similarities come from blocked products of the unit rows.
  RowMajorMatrix unit;
  if (similarity == Similarity::kCosine) {
    unit = x;
    for (Eigen::Index i = 0; i < unit.rows(); ++i) unit.row(i) /= norms(i);
  }
  constexpr std::size_t kBlock = 256;
  RowMajorMatrix block_sims;
  std::vector<std::pair<double, std::size_t>> candidates;
  candidates.reserve(n - 1);
  for (std::size_t begin = 0; begin < n; begin += kBlock) {
    const std::size_t len = std::min(kBlock, n - begin);
    if (similarity == Similarity::kCosine) {
      block_sims = unit.middleRows(static_cast<Eigen::Index>(begin),
                                   static_cast<Eigen::Index>(len)) *
                   unit.transpose();
    }
    for (std::size_t i = begin; i < begin + len; ++i) {
      candidates.clear();
      auto u = embeddings.Row(i);
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i) continue;
        double s;
        if (similarity == Similarity::kCosine) {
          s = std::clamp(block_sims(static_cast<Eigen::Index>(i - begin),
                                    static_cast<Eigen::Index>(j)),
                         -1.0, 1.0);
        } else {
          s = 1.0 / (1.0 + Euclidean(u, embeddings.Row(j)));
        }
        candidates.emplace_back(s, j);
      }
      auto by_rank = [](const auto& a, const auto& b) {
        return a.first != b.first ? a.first > b.first : a.second < b.second;
      };
      std::partial_sort(candidates.begin(),
                        candidates.begin() + static_cast<std::ptrdiff_t>(k),
                        candidates.end(), by_rank);
      double sum = 0;
      for (std::size_t r = 0; r < k; ++r) sum += candidates[r].first;
      report.per_point_density[i] = sum / static_cast<double>(k);
    }
  }
  report.global_density =
      std::accumulate(report.per_point_density.begin(),
                      report.per_point_density.end(), 0.0) /
      static_cast<double>(n);
  return report;
}

DataDensityResult DataDensity(const EmbeddingMatrix& embeddings,
                              VolumeMode mode) {
  DataDensityResult result;
  result.mode = mode;
  const double n = static_cast<double>(embeddings.rows());
  double log_volume = 0;
  double volume = 1;
  if (mode == VolumeMode::kBoundingBox) {
    const RowMajorMatrix& x = embeddings.values();
    for (Eigen::Index j = 0; j < x.cols(); ++j) {
      const double lo = x.col(j).minCoeff();
      const double hi = x.col(j).maxCoeff();
      double extent = hi - lo;
      if (!std::isfinite(extent)) {
        throw UndefinedValueError("extent of dimension " + std::to_string(j) +
                                  " is not finite");
      }
      if (extent == 0) {
        extent = std::numeric_limits<double>::epsilon() *
                 std::max(1.0, std::abs(lo));
        result.degenerate_dims.push_back(static_cast<std::size_t>(j));
      }
      log_volume += std::log(extent);
      volume *= extent;
    }
  }
  result.log_density = std::log(n) - log_volume;
  // The direct quotient is exact for moderate d; the log form survives
  // overflow of the extent product.
  result.density = std::isfinite(volume) && volume > 0
                       ? n / volume
                       : std::exp(result.log_density);
  result.raw_out_of_range =
      !std::isfinite(result.density) || result.density == 0;
  return result;
}

}  // namespace dmeter
