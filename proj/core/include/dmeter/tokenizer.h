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

#ifndef DMETER_TOKENIZER_H_
#define DMETER_TOKENIZER_H_

#include <string>
#include <string_view>
#include <vector>

namespace dmeter {

enum class TokenizerMode {
  // Unicode word boundaries (UAX #29); tokens without any letter, digit,
  // kana or ideograph are dropped.
  kUnicodeWord,
  // Maximal runs of non-whitespace scalars.
  kWhitespace,
  // One token per non-whitespace scalar value.
  kCharacter,
};

struct TokenizerConfig {
  TokenizerMode mode = TokenizerMode::kUnicodeWord;
  bool case_fold = true;

  // Canonical form, e.g. "unicode-word+fold" or "whitespace+nofold". This
  // string is stamped into reports and gates comparability.
  std::string ToString() const;

  // Accepts "<mode>" or "<mode>+fold" / "<mode>+nofold", where mode is one of
  // unicode-word, whitespace, character. Throws ArgumentError otherwise.
  static TokenizerConfig Parse(std::string_view spec);

  friend bool operator==(const TokenizerConfig&,
                         const TokenizerConfig&) = default;
};

std::string_view ModeName(TokenizerMode mode);

// Splits `text` into tokens. Deterministic; empty text yields no tokens.
std::vector<std::string> Tokenize(std::string_view text,
                                  const TokenizerConfig& config);

}  // namespace dmeter

#endif  // DMETER_TOKENIZER_H_
