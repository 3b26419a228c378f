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

#ifndef DMETER_TENDENCY_H_
#define DMETER_TENDENCY_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dmeter/corpus.h"
#include "dmeter/frequency_table.h"

namespace dmeter {

struct SummaryStats {
  std::size_t count = 0;
  double mean = 0;
  double median = 0;
  // All tied modes, ascending.
  std::vector<double> modes;
  double min = 0;
  double max = 0;
  // Unbiased (n - 1) variance; needs count >= 2.
  std::optional<double> variance;
  std::optional<double> std_dev;
  // Adjusted Fisher-Pearson G1; needs count >= 3 and nonzero variance.
  std::optional<double> skewness;
  // Adjusted sample excess kurtosis G2; needs count >= 4 and nonzero
  // variance.
  std::optional<double> excess_kurtosis;
};

// Throws ArgumentError on empty input or non-finite values.
SummaryStats Summarize(std::span<const double> values);

// B = (sigma - mu) / (sigma + mu) over inter-event gaps, with sigma the
// population standard deviation: -1 periodic, ~0 Poisson, -> 1 bursty.
// Throws ArgumentError for fewer than 2 gaps or negative gaps, and
// UndefinedValueError when all gaps are zero.
double Burstiness(std::span<const double> gaps);

// Differences between consecutive sorted timestamps of the records that
// carry one.
std::vector<double> TimestampGaps(std::span<const Record> records);

// Distances between consecutive occurrences of `token` in the corpus token
// stream (records concatenated in order).
std::vector<double> TokenRecurrenceGaps(const Corpus& corpus,
                                        std::string_view token);

enum class ZipfMethod { kDiscreteMle, kLogLogRegression };

std::string_view ZipfMethodName(ZipfMethod method);
ZipfMethod ParseZipfMethod(std::string_view name);

// Smallest exponent reported; fits that want to go lower are pinned here and
// flagged.
inline constexpr double kMinZipfAlpha = 1e-6;
// Fewer distinct items than this flags the fit low-confidence.
inline constexpr std::size_t kZipfMinConfidentRanks = 10;

struct ZipfFit {
  double alpha = 0;
  // Sup-norm gap between the observed and fitted rank CDFs.
  double ks_distance = 0;
  std::size_t n_ranks = 0;
  ZipfMethod method = ZipfMethod::kDiscreteMle;
  bool low_confidence = false;
  bool alpha_at_boundary = false;
};

// Fits frequency ~ rank^-alpha to items ranked by descending count.
// Discrete MLE treats ranks 1..N as a truncated power law; log-log
// regression is ordinary least squares of ln count on ln rank. Throws
// UndefinedValueError with fewer than 2 distinct items.
ZipfFit FitZipf(const FrequencyTable& table,
                ZipfMethod method = ZipfMethod::kDiscreteMle);
ZipfFit FitZipf(std::span<const std::uint64_t> counts,
                ZipfMethod method = ZipfMethod::kDiscreteMle);

// KS distance between the observed rank CDF of `sorted_counts` (descending)
// and a truncated power law with exponent `alpha` over the same ranks.
double ZipfKsDistance(std::span<const std::uint64_t> sorted_counts,
                      double alpha);

}  // namespace dmeter

#endif  // DMETER_TENDENCY_H_
