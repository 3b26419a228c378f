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

#ifndef DMETER_LANGUAGE_MODEL_H_
#define DMETER_LANGUAGE_MODEL_H_

#include <cstdint>
#include <filesystem>
#include <istream>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "dmeter/corpus.h"
#include "dmeter/frequency_table.h"
#include "dmeter/tokenizer.h"

namespace dmeter {

// Additively smoothed unigram or bigram model with an explicit
// out-of-vocabulary symbol.
//
//   unigram: p(w)     = (c(w) + a) / (T + a (V + 1))
//   bigram:  p(w | h) = (c(h, w) + a) / (c(h) + a (V + 1))
//
// V is the training vocabulary size; the +1 is the OOV symbol. A bigram
// context never seen in training falls back to the unigram distribution.
// Each record starts in the context kBos.
class NgramLm {
 public:
  static constexpr std::string_view kUnknown = "<unk>";
  static constexpr std::string_view kBos = "<s>";

  int order() const { return order_; }
  double smoothing() const { return smoothing_; }
  std::size_t vocab_size() const { return vocabulary_.size(); }
  const TokenizerConfig& tokenizer() const { return tokenizer_; }
  bool InVocabulary(std::string_view token) const;

  // p(token) for unigram models (context ignored), p(token | context) for
  // bigram models. Unknown tokens and contexts map to kUnknown.
  double Probability(std::string_view token,
                     std::string_view context = kBos) const;

 private:
  friend NgramLm TrainLm(const Corpus&, int, double);

  double Unigram(std::string_view token) const;

  int order_ = 1;
  double smoothing_ = 0;
  TokenizerConfig tokenizer_;
  std::unordered_set<std::string> vocabulary_;
  FrequencyTable unigrams_;
  std::unordered_map<std::string, FrequencyTable> bigrams_;
};

// Throws ArgumentError when the corpus has no tokens, order is not 1 or 2,
// or smoothing is negative.
NgramLm TrainLm(const Corpus& corpus, int order = 1, double smoothing = 1.0);

struct PerplexityResult {
  // +inf when `infinite`.
  double perplexity = 0;
  bool infinite = false;
  // Natural-log probability of the whole corpus.
  double total_log_prob = 0;
  std::uint64_t n_tokens = 0;
  // Per record; nullopt for records without tokens.
  std::vector<std::optional<double>> per_record;
};

// exp(-(1/N) sum ln p). A zero-probability token makes the result infinite
// instead of failing. Throws ArgumentError when the model and corpus use
// different tokenizer configs or the corpus has no tokens.
PerplexityResult Perplexity(const NgramLm& model, const Corpus& corpus);

// One line of an external log-probability file:
// {"id": ..., "logprob": <total natural-log probability>, "n_tokens": <int>}
struct ExternalLogProb {
  std::string id;
  double logprob = 0;
  std::uint64_t n_tokens = 0;
};

// Throws FormatError naming the line on malformed input.
std::vector<ExternalLogProb> ReadExternalLogProbs(std::istream& in);
std::vector<ExternalLogProb> LoadExternalLogProbs(
    const std::filesystem::path& path);

PerplexityResult PerplexityFromLogProbs(
    std::span<const ExternalLogProb> entries);

}  // namespace dmeter

#endif  // DMETER_LANGUAGE_MODEL_H_
