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

#include <unordered_set>

#include "dmeter/errors.h"
#include "unicode_util.h"

namespace dmeter {

Corpus::Corpus() : data_(std::make_shared<const Data>()) {}

Corpus Corpus::FromRecords(std::vector<Record> records,
                           const TokenizerConfig& tokenizer) {
  auto data = std::make_shared<Data>();
  std::unordered_set<std::string> ids;
  for (const Record& r : records) {
    if (!ids.insert(r.id).second) {
      throw ArgumentError("duplicate record id '" + r.id + "'");
    }
  }
  data->tokenizer = tokenizer;
  data->tokens.reserve(records.size());
  for (const Record& r : records) {
    data->tokens.push_back(Tokenize(r.text, tokenizer));
    for (const std::string& token : data->tokens.back()) {
      data->token_counts.Add(token);
    }
  }
  data->vocabulary = data->token_counts.Items();
  data->fingerprint = FingerprintRecords(records);
  data->records = std::move(records);
  return Corpus(std::move(data));
}

std::string FingerprintRecords(std::span<const Record> records) {
  internal::Sha256 hasher;
  for (const Record& r : records) {
    hasher.UpdateFramed(
        internal::TrimTrailingWhitespace(internal::NormalizeNfc(r.text)));
  }
  return hasher.HexDigest();
}

FrequencyTable Ngrams(const Corpus& corpus, std::size_t n) {
  if (n < 1) throw ArgumentError("n-gram order must be >= 1");
  FrequencyTable table;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    std::span<const std::string> tokens = corpus.tokens(i);
    if (tokens.size() < n) continue;
    for (std::size_t start = 0; start + n <= tokens.size(); ++start) {
      table.Add(JoinNgram(tokens, start, n));
    }
  }
  return table;
}

}  // namespace dmeter
