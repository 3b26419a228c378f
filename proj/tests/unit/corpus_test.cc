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

#include "dmeter/corpus.h"

#include <gtest/gtest.h>

#include <map>
#include <string>
#include <vector>

#include "dmeter/errors.h"
#include "support/generators.h"
#include "support/oracles.h"

namespace dmeter {
namespace {

using testing::CorpusOf;

TEST(CorpusTest, DuplicateIdsRejected) {
  std::vector<Record> records = {{"a", "x", {}, {}}, {"a", "y", {}, {}}};
  EXPECT_THROW(Corpus::FromRecords(records, {}), ArgumentError);
}

TEST(CorpusTest, TokenStatistics) {
  const Corpus corpus = CorpusOf({"a a b", "", "b c"});
  EXPECT_EQ(corpus.size(), 3u);
  EXPECT_EQ(corpus.total_tokens(), 5u);
  EXPECT_EQ(corpus.tokens(1).size(), 0u);
  EXPECT_EQ(corpus.token_counts().Count("b"), 2u);
  EXPECT_EQ(corpus.vocabulary(), (std::vector<std::string>{"a", "b", "c"}));
}

TEST(CorpusTest, FingerprintIgnoresIdsTrailingSpaceAndNormalization) {
  std::vector<Record> a = {{"1", "café", {}, {}}, {"2", "x", {}, {}}};
  std::vector<Record> b = {{"p", "café  \n", {}, {}},
                           {"q", "x", {{"k", "v"}}, 5}};
  EXPECT_EQ(FingerprintRecords(a), FingerprintRecords(b));
  EXPECT_EQ(FingerprintRecords(a).size(), 64u);
}

TEST(CorpusTest, FingerprintSeesOrderAndBoundaries) {
  std::vector<Record> ab = {{"1", "a", {}, {}}, {"2", "b", {}, {}}};
  std::vector<Record> ba = {{"1", "b", {}, {}}, {"2", "a", {}, {}}};
  std::vector<Record> joined = {{"1", "ab", {}, {}}};
  EXPECT_NE(FingerprintRecords(ab), FingerprintRecords(ba));
  EXPECT_NE(FingerprintRecords(ab), FingerprintRecords(joined));
}

TEST(CorpusTest, NgramsStayInsideRecords) {
  const Corpus corpus = CorpusOf({"a b", "c d"});
  const FrequencyTable bigrams = Ngrams(corpus, 2);
  EXPECT_EQ(bigrams.total(), 2u);
  EXPECT_FALSE(bigrams.Contains("b c"));
  EXPECT_THROW(Ngrams(corpus, 0), ArgumentError);
  EXPECT_EQ(Ngrams(corpus, 3).total(), 0u);
}

TEST(CorpusPropertyTest, NgramsMatchSlidingWindowRecount) {
  testing::Rng rng(21);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<std::string> texts;
    const std::size_t n_records = testing::UniformIndex(rng, 1, 12);
    for (std::size_t i = 0; i < n_records; ++i) {
      texts.push_back(testing::RandomSentence(rng, 0, 15, 6));
    }
    const Corpus corpus = CorpusOf(texts);
    std::vector<std::vector<std::string>> docs;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      docs.emplace_back(corpus.tokens(i).begin(), corpus.tokens(i).end());
    }
    for (std::size_t n = 1; n <= 4; ++n) {
      const auto expected = testing::SlidingWindowNgrams(docs, n);
      const FrequencyTable actual = Ngrams(corpus, n);
      ASSERT_EQ(actual.size(), expected.size());
      for (const auto& [gram, count] : expected) {
        EXPECT_EQ(actual.Count(gram), count) << gram;
      }
    }
  }
}

TEST(CorpusPropertyTest, TokenCountsMatchRecount) {
  testing::Rng rng(22);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<std::string> texts;
    for (std::size_t i = 0; i < 10; ++i) {
      texts.push_back(testing::RandomSentence(rng, 0, 10, 20));
    }
    const Corpus corpus = CorpusOf(texts);
    std::map<std::string, std::uint64_t> recount;
    std::uint64_t total = 0;
    for (const std::string& text : texts) {
      std::size_t start = 0;
      while (start < text.size()) {
        std::size_t end = text.find(' ', start);
        if (end == std::string::npos) end = text.size();
        if (end > start) {
          ++recount[text.substr(start, end - start)];
          ++total;
        }
        start = end + 1;
      }
    }
    EXPECT_EQ(corpus.total_tokens(), total);
    EXPECT_EQ(corpus.token_counts().size(), recount.size());
    for (const auto& [token, count] : recount) {
      EXPECT_EQ(corpus.token_counts().Count(token), count);
    }
  }
}

}  // namespace
}  // namespace dmeter
