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

#ifndef DMETER_CORPUS_H_
#define DMETER_CORPUS_H_

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dmeter/frequency_table.h"
#include "dmeter/tokenizer.h"

namespace dmeter {

// The document-level unit. Character, token and n-gram units derive from
// `text` through the corpus tokenizer.
struct Record {
  std::string id;
  std::string text;
  // Categorical labels, e.g. {"gender": "F"}; used by subset diversity.
  std::map<std::string, std::string> attributes;
  // Seconds; used for burstiness gaps.
  std::optional<std::int64_t> timestamp;
};

// Immutable, tokenized snapshot of a record sequence. Copies share state and
// are safe to read from several threads.
class Corpus {
 public:
  // Tokenizes every record. Throws ArgumentError on duplicate record ids.
  static Corpus FromRecords(std::vector<Record> records,
                            const TokenizerConfig& tokenizer = {});

  Corpus();

  const std::vector<Record>& records() const { return data_->records; }
  const Record& record(std::size_t i) const { return data_->records[i]; }
  std::span<const std::string> tokens(std::size_t i) const {
    return data_->tokens[i];
  }
  std::size_t size() const { return data_->records.size(); }
  bool empty() const { return data_->records.empty(); }

  const TokenizerConfig& tokenizer() const { return data_->tokenizer; }
  const FrequencyTable& token_counts() const { return data_->token_counts; }
  std::uint64_t total_tokens() const { return data_->token_counts.total(); }
  // Distinct tokens in ascending byte order.
  const std::vector<std::string>& vocabulary() const {
    return data_->vocabulary;
  }
  // SHA-256 over NFC-normalized, right-trimmed record texts in order.
  const std::string& fingerprint() const { return data_->fingerprint; }

 private:
  struct Data {
    std::vector<Record> records;
    std::vector<std::vector<std::string>> tokens;
    TokenizerConfig tokenizer;
    FrequencyTable token_counts;
    std::vector<std::string> vocabulary;
    std::string fingerprint;
  };
  explicit Corpus(std::shared_ptr<const Data> data) : data_(std::move(data)) {}

  std::shared_ptr<const Data> data_;
};

// Content fingerprint of a record sequence; order-sensitive.
std::string FingerprintRecords(std::span<const Record> records);

// N-gram counts within record boundaries. Throws ArgumentError when n < 1.
FrequencyTable Ngrams(const Corpus& corpus, std::size_t n);

}  // namespace dmeter

#endif  // DMETER_CORPUS_H_
