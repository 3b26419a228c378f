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

#ifndef DMETER_ASSOCIATION_H_
#define DMETER_ASSOCIATION_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "dmeter/corpus.h"
#include "dmeter/frequency_table.h"

namespace dmeter {

enum class ContextMode { kDocument, kWindow };

struct ContextSpec {
  ContextMode mode = ContextMode::kDocument;
  // Window width in tokens; window mode only.
  std::size_t window = 0;
  // Adds each record attribute as a pseudo-token "@key=value" to every
  // context of that record, so labels can be associated with terms.
  bool attribute_tokens = false;

  // "document" or "window(<w>)", suffixed "+attributes" when enabled.
  std::string ToString() const;
};

enum class CountMode {
  // A term counts once per context that contains it.
  kBinary,
  // Term counts are occurrences; a pair counts min(occurrences) per context
  // and n_contexts is the number of token positions.
  kFrequency,
};

class CooccurrenceTable {
 public:
  std::uint64_t PairCount(std::string_view x, std::string_view y) const;
  std::uint64_t TermCount(std::string_view term) const {
    return term_counts_.Count(term);
  }
  std::uint64_t n_contexts() const { return n_contexts_; }
  const FrequencyTable& term_counts() const { return term_counts_; }
  const ContextSpec& context() const { return context_; }
  CountMode count_mode() const { return count_mode_; }

  // Terms with a nonzero pair count with `term`, ascending.
  std::vector<std::pair<std::string, std::uint64_t>> CoTerms(
      std::string_view term) const;
  // Number of stored unordered pairs.
  std::size_t pair_size() const;

 private:
  friend CooccurrenceTable BuildCooccurrence(
      const Corpus&, const std::optional<std::vector<std::string>>&,
      const ContextSpec&, CountMode);

  void AddPair(const std::string& x, const std::string& y, std::uint64_t n);

  FrequencyTable term_counts_;
  // Symmetric adjacency: pairs_[x][y] == pairs_[y][x]; never x == y.
  std::unordered_map<std::string, std::unordered_map<std::string, std::uint64_t>>
      pairs_;
  std::uint64_t n_contexts_ = 0;
  ContextSpec context_;
  CountMode count_mode_ = CountMode::kBinary;
};

// Counts contexts (documents, or every width-w sliding window; a record
// shorter than w is one window) containing each term and each term pair.
// With `targets`, only pairs involving a target term are stored; term counts
// always cover the whole vocabulary. Throws ArgumentError for an empty
// target set or a zero window width.
CooccurrenceTable BuildCooccurrence(
    const Corpus& corpus,
    const std::optional<std::vector<std::string>>& targets = std::nullopt,
    const ContextSpec& context = {}, CountMode count_mode = CountMode::kBinary);

// Pseudo-token for an attribute label: "@key=value".
std::string AttributeToken(std::string_view key, std::string_view value);

struct AssociationScore {
  double value = 0;
  // PMI is -inf: the pair never co-occurs and smoothing is 0. NPMI reports
  // -1 in this case.
  bool negative_infinite = false;
  // NPMI with p(x, y) = 1: defined as 1 by continuity.
  bool degenerate = false;
};

// ln p(x,y) - ln p(x) - ln p(y), with every probability estimated as
// (count + alpha) / (n_contexts + 2 alpha): presence in a context is a
// Bernoulli event smoothed on both outcomes. Throws ArgumentError when x or
// y is absent from the table or alpha < 0.
AssociationScore Pmi(const CooccurrenceTable& table, std::string_view x,
                     std::string_view y, double alpha = 0);

// PMI / -ln p(x,y), in [-1, 1].
AssociationScore Npmi(const CooccurrenceTable& table, std::string_view x,
                      std::string_view y, double alpha = 0);

struct RankedAssociation {
  std::string term;
  std::uint64_t pair_count = 0;
  AssociationScore npmi;
};

// Co-terms of `target` ordered by descending nPMI (ties by term), at most k.
// Empty when the target never occurs.
std::vector<RankedAssociation> TopAssociations(const CooccurrenceTable& table,
                                               std::string_view target,
                                               std::size_t k, double alpha = 0);

// Sample Pearson coefficient, clamped to [-1, 1]. Throws ArgumentError on
// unequal lengths or fewer than 2 points, UndefinedValueError on zero
// variance.
double Pearson(std::span<const double> xs, std::span<const double> ys);

// 1-based ranks; ties share their average rank.
std::vector<double> FractionalRanks(std::span<const double> values);

// Pearson coefficient of fractional ranks.
double Spearman(std::span<const double> xs, std::span<const double> ys);

}  // namespace dmeter

#endif  // DMETER_ASSOCIATION_H_
