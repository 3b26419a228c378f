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

#include "dmeter/language_model.h"

#include <cmath>
#include <fstream>
#include <limits>

#include <nlohmann/json.hpp>

#include "dmeter/errors.h"

namespace dmeter {

bool NgramLm::InVocabulary(std::string_view token) const {
  return vocabulary_.contains(std::string(token));
}

double NgramLm::Unigram(std::string_view token) const {
  const double v1 = static_cast<double>(vocabulary_.size() + 1);
  const double count = static_cast<double>(unigrams_.Count(token));
  const double denom = static_cast<double>(unigrams_.total()) + smoothing_ * v1;
  return (count + smoothing_) / denom;
}

double NgramLm::Probability(std::string_view token,
                            std::string_view context) const {
  if (!InVocabulary(token)) token = kUnknown;
  if (order_ == 1) return Unigram(token);
  if (context != kBos && !InVocabulary(context)) context = kUnknown;
  auto it = bigrams_.find(std::string(context));
  if (it == bigrams_.end()) return Unigram(token);
  const FrequencyTable& next = it->second;
  const double v1 = static_cast<double>(vocabulary_.size() + 1);
  return (static_cast<double>(next.Count(token)) + smoothing_) /
         (static_cast<double>(next.total()) + smoothing_ * v1);
}

NgramLm TrainLm(const Corpus& corpus, int order, double smoothing) {
  if (order != 1 && order != 2) {
    throw ArgumentError("language model order must be 1 or 2");
  }
  if (!(smoothing >= 0) || !std::isfinite(smoothing)) {
    throw ArgumentError("smoothing must be finite and >= 0");
  }
  if (corpus.total_tokens() == 0) {
    throw ArgumentError("cannot train a language model on an empty corpus");
  }
  NgramLm lm;
  lm.order_ = order;
  lm.smoothing_ = smoothing;
  lm.tokenizer_ = corpus.tokenizer();
  lm.unigrams_ = corpus.token_counts();
  lm.vocabulary_.insert(corpus.vocabulary().begin(), corpus.vocabulary().end());
  if (order == 2) {
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      std::string_view context = NgramLm::kBos;
      for (const std::string& token : corpus.tokens(i)) {
        lm.bigrams_[std::string(context)].Add(token);
        context = token;
      }
    }
  }
  return lm;
}

PerplexityResult Perplexity(const NgramLm& model, const Corpus& corpus) {
  if (!(model.tokenizer() == corpus.tokenizer())) {
    throw ArgumentError("model tokenizer " + model.tokenizer().ToString() +
                        " differs from corpus tokenizer " +
                        corpus.tokenizer().ToString());
  }
  if (corpus.total_tokens() == 0) {
    throw ArgumentError("perplexity of a corpus without tokens");
  }
  constexpr double kInf = std::numeric_limits<double>::infinity();
  PerplexityResult result;
  result.per_record.reserve(corpus.size());
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const auto tokens = corpus.tokens(i);
    if (tokens.empty()) {
      result.per_record.push_back(std::nullopt);
      continue;
    }
    double log_prob = 0;
    std::string_view context = NgramLm::kBos;
    for (const std::string& token : tokens) {
      const double p = model.Probability(token, context);
      log_prob += p > 0 ? std::log(p) : -kInf;
      context = token;
    }
    result.total_log_prob += log_prob;
    result.n_tokens += tokens.size();
    result.per_record.push_back(
        std::exp(-log_prob / static_cast<double>(tokens.size())));
  }
  result.infinite = std::isinf(result.total_log_prob);
  result.perplexity =
      result.infinite
          ? kInf
          : std::exp(-result.total_log_prob /
                     static_cast<double>(result.n_tokens));
  return result;
}

std::vector<ExternalLogProb> ReadExternalLogProbs(std::istream& in) {
  std::vector<ExternalLogProb> entries;
  std::string line;
  for (std::size_t number = 1; std::getline(in, line); ++number) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const std::string where = "line " + std::to_string(number) + ": ";
    auto object = nlohmann::json::parse(line, nullptr, false);
    if (object.is_discarded() || !object.is_object()) {
      throw FormatError(where + "not a JSON object");
    }
    ExternalLogProb entry;
    auto id = object.find("id");
    auto logprob = object.find("logprob");
    auto n_tokens = object.find("n_tokens");
    if (id == object.end() || !(id->is_string() || id->is_number_integer())) {
      throw FormatError(where + "missing id");
    }
    if (logprob == object.end() || !logprob->is_number() ||
        logprob->get<double>() > 0) {
      throw FormatError(where + "logprob must be a number <= 0");
    }
    if (n_tokens == object.end() || !n_tokens->is_number_unsigned()) {
      throw FormatError(where + "n_tokens must be a non-negative integer");
    }
    entry.id = id->is_string() ? id->get<std::string>() : id->dump();
    entry.logprob = logprob->get<double>();
    entry.n_tokens = n_tokens->get<std::uint64_t>();
    entries.push_back(std::move(entry));
  }
  return entries;
}

std::vector<ExternalLogProb> LoadExternalLogProbs(
    const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path.string() + "'");
  try {
    return ReadExternalLogProbs(in);
  } catch (const FormatError& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
}

PerplexityResult PerplexityFromLogProbs(
    std::span<const ExternalLogProb> entries) {
  PerplexityResult result;
  for (const ExternalLogProb& e : entries) {
    result.total_log_prob += e.logprob;
    result.n_tokens += e.n_tokens;
    if (e.n_tokens == 0) {
      result.per_record.push_back(std::nullopt);
    } else {
      result.per_record.push_back(
          std::exp(-e.logprob / static_cast<double>(e.n_tokens)));
    }
  }
  if (result.n_tokens == 0) {
    throw ArgumentError("external log-probabilities cover no tokens");
  }
  result.infinite = std::isinf(result.total_log_prob);
  result.perplexity = std::exp(-result.total_log_prob /
                               static_cast<double>(result.n_tokens));
  return result;
}

}  // namespace dmeter
