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

#include <gtest/gtest.h>

#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "dmeter/errors.h"
#include "support/generators.h"

namespace dmeter {
namespace {

using testing::CorpusOf;

TEST(LanguageModelTest, UniformModelPerplexityIsVocabularySize) {
  for (std::size_t v : {2, 10, 100}) {
    std::string text;
    for (std::size_t i = 0; i < v; ++i) text += "t" + std::to_string(i) + " ";
    const Corpus corpus = CorpusOf({text, text});
    const NgramLm model = TrainLm(corpus, 1, 0.0);
    const PerplexityResult r = Perplexity(model, corpus);
    EXPECT_NEAR(r.perplexity, static_cast<double>(v),
                1e-12 * static_cast<double>(v));
    EXPECT_EQ(r.n_tokens, 2 * v);
  }
}

TEST(LanguageModelTest, AabSelfPerplexity) {
  const Corpus corpus = CorpusOf({"a a b"});
  const PerplexityResult r = Perplexity(TrainLm(corpus, 1, 0.0), corpus);
  EXPECT_NEAR(r.perplexity, std::cbrt(27.0 / 4.0), 1e-12);
  EXPECT_NEAR(r.perplexity, 1.8899, 1e-3);
}

TEST(LanguageModelTest, SmoothedUnigramProbabilities) {
  const Corpus corpus = CorpusOf({"a a b"});
  const NgramLm model = TrainLm(corpus, 1, 1.0);
  // V = 2 plus the unknown slot: denominators are 3 + 3.
  EXPECT_DOUBLE_EQ(model.Probability("a"), 3.0 / 6.0);
  EXPECT_DOUBLE_EQ(model.Probability("b"), 2.0 / 6.0);
  EXPECT_DOUBLE_EQ(model.Probability("zebra"), 1.0 / 6.0);
  EXPECT_DOUBLE_EQ(model.Probability(NgramLm::kUnknown), 1.0 / 6.0);
  EXPECT_EQ(model.vocab_size(), 2u);
}

TEST(LanguageModelTest, BigramProbabilitiesAndBackoff) {
  const Corpus corpus = CorpusOf({"a b", "a c"});
  const NgramLm model = TrainLm(corpus, 2, 0.0);
  EXPECT_DOUBLE_EQ(model.Probability("a", NgramLm::kBos), 1.0);
  EXPECT_DOUBLE_EQ(model.Probability("b", "a"), 0.5);
  EXPECT_DOUBLE_EQ(model.Probability("a", "a"), 0.0);
  // "b" never starts a bigram: back off to the unigram estimate.
  EXPECT_DOUBLE_EQ(model.Probability("a", "b"), 0.5);
  const PerplexityResult r = Perplexity(model, corpus);
  EXPECT_NEAR(r.perplexity, std::sqrt(2.0), 1e-12);
}

TEST(LanguageModelTest, UnseenTokenWithoutSmoothingIsInfinite) {
  const NgramLm model = TrainLm(CorpusOf({"a b"}), 1, 0.0);
  const PerplexityResult r = Perplexity(model, CorpusOf({"a c"}));
  EXPECT_TRUE(r.infinite);
  EXPECT_TRUE(std::isinf(r.perplexity));
}

TEST(LanguageModelTest, Validation) {
  const Corpus corpus = CorpusOf({"a"});
  EXPECT_THROW(TrainLm(corpus, 3, 1.0), ArgumentError);
  EXPECT_THROW(TrainLm(corpus, 1, -1.0), ArgumentError);
  EXPECT_THROW(TrainLm(CorpusOf({""}), 1, 1.0), ArgumentError);
  const NgramLm model = TrainLm(corpus, 1, 1.0);
  const Corpus other =
      CorpusOf({"a"}, {TokenizerMode::kWhitespace, true});
  EXPECT_THROW(Perplexity(model, other), ArgumentError);
}

TEST(LanguageModelTest, InDomainBeatsOutOfDomain) {
  testing::Rng rng(101);
  for (int seed = 0; seed < 20; ++seed) {
    std::vector<std::string> a, b;
    for (int i = 0; i < 40; ++i) {
      // A draws mostly from a 10-word slice; B is uniform over 200 words.
      std::string text;
      for (int t = 0; t < 12; ++t) {
        text += "w" + std::to_string(testing::UniformIndex(rng, 0, 9)) + " ";
      }
      a.push_back(text);
      b.push_back(testing::RandomSentence(rng, 12, 12, 200));
    }
    const Corpus ca = CorpusOf(a);
    const NgramLm model = TrainLm(ca, 1, 1.0);
    EXPECT_LT(Perplexity(model, ca).perplexity,
              Perplexity(model, CorpusOf(b)).perplexity);
  }
}

TEST(ExternalLogProbTest, ParseAndAggregate) {
  std::istringstream in(
      "{\"id\": \"r1\", \"logprob\": -4.0, \"n_tokens\": 2}\n"
      "\n"
      "{\"id\": \"r2\", \"logprob\": -2.0, \"n_tokens\": 2}\n");
  const auto entries = ReadExternalLogProbs(in);
  ASSERT_EQ(entries.size(), 2u);
  const PerplexityResult r = PerplexityFromLogProbs(entries);
  EXPECT_NEAR(r.perplexity, std::exp(1.5), 1e-12);
  EXPECT_NEAR(*r.per_record[0], std::exp(2.0), 1e-12);

  std::istringstream bad("{\"id\": \"r1\", \"logprob\": 1.0}\n");
  try {
    ReadExternalLogProbs(bad);
    FAIL() << "expected FormatError";
  } catch (const FormatError& e) {
    EXPECT_NE(std::string(e.what()).find("line 1"), std::string::npos);
  }
}

}  // namespace
}  // namespace dmeter
