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

#include "dmeter/quality.h"

#include <algorithm>
#include <cmath>
#include <unordered_map>

#include "dmeter/diversity.h"
#include "dmeter/errors.h"
#include "dmeter/tokenizer.h"
#include "unicode_util.h"

namespace dmeter {

std::string_view NormalizationName(Normalization normalization) {
  return normalization == Normalization::kExact ? "exact" : "fold-and-collapse";
}

Normalization ParseNormalization(std::string_view name) {
  if (name == "exact") return Normalization::kExact;
  if (name == "fold-and-collapse") return Normalization::kFoldAndCollapse;
  throw ArgumentError("unknown normalization '" + std::string(name) +
                      "' (expected exact or fold-and-collapse)");
}

std::string NormalizeForDedup(std::string_view text,
                              Normalization normalization) {
  if (normalization == Normalization::kExact) return std::string(text);
  return internal::CollapseWhitespace(internal::FoldCase(text));
}

RedundancyReport FindDuplicates(const Corpus& corpus,
                                Normalization normalization,
                                std::size_t max_clusters) {
  RedundancyReport report;
  report.normalization = normalization;
  report.n_records = corpus.size();

  std::unordered_map<std::string, std::size_t> group_of;
  std::vector<DuplicateCluster> groups;
  for (const Record& r : corpus.records()) {
    std::string key = NormalizeForDedup(r.text, normalization);
    auto [it, inserted] = group_of.emplace(std::move(key), groups.size());
    if (inserted) {
      groups.push_back({internal::Sha256Hex(it->first), 0, r.text, {}});
    }
    DuplicateCluster& g = groups[it->second];
    ++g.count;
    g.record_ids.push_back(r.id);
  }
  std::sort(groups.begin(), groups.end(),
            [](const DuplicateCluster& a, const DuplicateCluster& b) {
              if (a.count != b.count) return a.count > b.count;
              return a.fingerprint < b.fingerprint;
            });

  report.n_distinct = groups.size();
  for (const DuplicateCluster& g : groups) {
    report.cluster_sizes.push_back(g.count);
    if (g.count < 2) continue;
    ++report.duplicate_clusters;
    report.excess_duplicates += g.count - 1;
    if (report.top_clusters.size() < max_clusters) {
      report.top_clusters.push_back(g);
    }
  }
  return report;
}

RedundancyEntropyResult RedundancyEntropy(const RedundancyReport& report) {
  if (report.n_records == 0) {
    throw ArgumentError("redundancy entropy of an empty corpus");
  }
  if (report.n_records == 1) return {1.0, true};
  std::vector<double> sizes(report.cluster_sizes.begin(),
                            report.cluster_sizes.end());
  const double h = ShannonEntropy(sizes);
  return {std::clamp(h / std::log(static_cast<double>(report.n_records)), 0.0,
                     1.0),
          false};
}

std::size_t CountSyllables(std::string_view word) {
  auto is_vowel = [](char c) {
    switch (c) {
      case 'a': case 'e': case 'i': case 'o': case 'u': case 'y':
      case 'A': case 'E': case 'I': case 'O': case 'U': case 'Y':
        return true;
      default:
        return false;
    }
  };
  std::size_t groups = 0;
  bool in_group = false;
  for (char c : word) {
    const bool vowel = is_vowel(c);
    if (vowel && !in_group) ++groups;
    in_group = vowel;
  }
  const std::size_t n = word.size();
  // Silent final e, except the consonant + "le" ending ("table").
  const bool consonant_le = n >= 3 &&
                            (word[n - 2] == 'l' || word[n - 2] == 'L') &&
                            !is_vowel(word[n - 3]);
  if (n >= 2 && (word[n - 1] == 'e' || word[n - 1] == 'E') &&
      !is_vowel(word[n - 2]) && !consonant_le && groups > 0) {
    --groups;
  }
  return std::max<std::size_t>(groups, 1);
}

ReadabilityCounts CountReadability(std::string_view text) {
  static const TokenizerConfig kWords{TokenizerMode::kUnicodeWord, true};
  ReadabilityCounts counts;
  std::size_t start = 0;
  auto close_segment = [&](std::size_t end) {
    const auto words = Tokenize(text.substr(start, end - start), kWords);
    if (!words.empty()) ++counts.sentences;
    counts.words += words.size();
    for (const std::string& w : words) counts.syllables += CountSyllables(w);
    start = end;
  };
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c != '.' && c != '!' && c != '?') continue;
    const bool at_boundary =
        i + 1 == text.size() ||
        std::isspace(static_cast<unsigned char>(text[i + 1]));
    if (at_boundary) close_segment(i + 1);
  }
  if (start < text.size()) close_segment(text.size());
  return counts;
}

std::optional<double> FleschReadingEase(std::string_view text) {
  const ReadabilityCounts c = CountReadability(text);
  if (c.words == 0 || c.sentences == 0) return std::nullopt;
  const double words = static_cast<double>(c.words);
  return 206.835 - 1.015 * (words / static_cast<double>(c.sentences)) -
         84.6 * (static_cast<double>(c.syllables) / words);
}

ReadabilityReport FleschReadingEase(const Corpus& corpus) {
  ReadabilityReport report;
  std::vector<double> scores;
  for (const Record& r : corpus.records()) {
    auto score = FleschReadingEase(r.text);
    report.per_record.push_back(score);
    if (score) {
      scores.push_back(*score);
    } else {
      ++report.n_skipped;
    }
  }
  if (scores.empty()) {
    throw UndefinedValueError("no record has a word and a sentence to score");
  }
  report.stats = Summarize(scores);
  return report;
}

}  // namespace dmeter
