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

#ifndef DMETER_QUALITY_H_
#define DMETER_QUALITY_H_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dmeter/corpus.h"
#include "dmeter/tendency.h"

namespace dmeter {

// The two duplicate "types": byte-identical text, and text equal after case
// folding, collapsing whitespace runs and stripping both ends.
enum class Normalization { kExact, kFoldAndCollapse };

std::string_view NormalizationName(Normalization normalization);
Normalization ParseNormalization(std::string_view name);
std::string NormalizeForDedup(std::string_view text,
                              Normalization normalization);

struct DuplicateCluster {
  std::string fingerprint;  // SHA-256 of the normalized text
  std::size_t count = 0;
  std::string sample_text;  // first record of the cluster, as ingested
  std::vector<std::string> record_ids;
};

struct RedundancyReport {
  std::size_t n_records = 0;
  std::size_t n_distinct = 0;
  std::size_t duplicate_clusters = 0;
  std::size_t excess_duplicates = 0;
  // Clusters of size >= 2 by descending size, then fingerprint; capped.
  std::vector<DuplicateCluster> top_clusters;
  // Sizes of every group (singletons included), descending.
  std::vector<std::size_t> cluster_sizes;
  Normalization normalization = Normalization::kExact;
};

RedundancyReport FindDuplicates(const Corpus& corpus,
                                Normalization normalization,
                                std::size_t max_clusters = 10);

struct RedundancyEntropyResult {
  // Cluster-size entropy / ln(n_records): 1 = all unique, -> 0 as one
  // cluster dominates.
  double value = 0;
  // A single-record corpus is reported as 1.
  bool by_convention = false;
};

// Throws ArgumentError when the report covers no records.
RedundancyEntropyResult RedundancyEntropy(const RedundancyReport& report);

struct ReadabilityCounts {
  std::size_t words = 0;
  std::size_t sentences = 0;
  std::size_t syllables = 0;
};

// Vowel-group syllable estimate: count runs of [aeiouy], drop a trailing
// silent "e" after a consonant, at least 1. English-biased.
std::size_t CountSyllables(std::string_view word);

// Sentences end at '.', '!' or '?' followed by whitespace or end of text;
// only segments containing a word count.
ReadabilityCounts CountReadability(std::string_view text);

// 206.835 - 1.015 (words / sentences) - 84.6 (syllables / words); nullopt
// when the text has no word or no sentence.
std::optional<double> FleschReadingEase(std::string_view text);

struct ReadabilityReport {
  SummaryStats stats;
  std::vector<std::optional<double>> per_record;
  std::size_t n_skipped = 0;
};

// Throws UndefinedValueError when no record is scoreable.
ReadabilityReport FleschReadingEase(const Corpus& corpus);

}  // namespace dmeter

#endif  // DMETER_QUALITY_H_
