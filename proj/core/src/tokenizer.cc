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

#include "dmeter/tokenizer.h"

#include <unicode/brkiter.h>
#include <unicode/locid.h>
#include <unicode/unistr.h>

#include <memory>

#include "dmeter/errors.h"
#include "unicode_util.h"

namespace dmeter {
namespace {

std::string ToUtf8(const icu::UnicodeString& s) {
  std::string out;
  s.toUTF8String(out);
  return out;
}

// Break iterators are expensive to create; keep one per thread.
icu::BreakIterator& WordIterator() {
  thread_local std::unique_ptr<icu::BreakIterator> iterator = [] {
    UErrorCode status = U_ZERO_ERROR;
    std::unique_ptr<icu::BreakIterator> it(
        icu::BreakIterator::createWordInstance(icu::Locale::getRoot(),
                                               status));
    if (U_FAILURE(status)) throw Error("ICU word break iterator unavailable");
    return it;
  }();
  return *iterator;
}

std::vector<std::string> UnicodeWords(const icu::UnicodeString& text) {
  std::vector<std::string> tokens;
  icu::BreakIterator& it = WordIterator();
  it.setText(text);
  std::int32_t start = it.first();
  for (std::int32_t end = it.next(); end != icu::BreakIterator::DONE;
       start = end, end = it.next()) {
    if (it.getRuleStatus() < UBRK_WORD_NONE_LIMIT) continue;
    tokens.push_back(ToUtf8(text.tempSubStringBetween(start, end)));
  }
  return tokens;
}

}  // namespace

std::string_view ModeName(TokenizerMode mode) {
  switch (mode) {
    case TokenizerMode::kUnicodeWord:
      return "unicode-word";
    case TokenizerMode::kWhitespace:
      return "whitespace";
    case TokenizerMode::kCharacter:
      return "character";
  }
  return "unknown";
}

std::string TokenizerConfig::ToString() const {
  std::string out(ModeName(mode));
  out += case_fold ? "+fold" : "+nofold";
  return out;
}

TokenizerConfig TokenizerConfig::Parse(std::string_view spec) {
  TokenizerConfig config;
  std::string_view mode = spec;
  if (auto plus = spec.find('+'); plus != std::string_view::npos) {
    mode = spec.substr(0, plus);
    std::string_view fold = spec.substr(plus + 1);
    if (fold == "fold") {
      config.case_fold = true;
    } else if (fold == "nofold") {
      config.case_fold = false;
    } else {
      throw ArgumentError("unknown case-folding option '" + std::string(fold) +
                          "' (expected fold or nofold)");
    }
  }
  if (mode == "unicode-word") {
    config.mode = TokenizerMode::kUnicodeWord;
  } else if (mode == "whitespace") {
    config.mode = TokenizerMode::kWhitespace;
  } else if (mode == "character") {
    config.mode = TokenizerMode::kCharacter;
  } else {
    throw ArgumentError("unknown tokenizer mode '" + std::string(mode) +
                        "' (expected unicode-word, whitespace or character)");
  }
  return config;
}

std::vector<std::string> Tokenize(std::string_view text,
                                  const TokenizerConfig& config) {
  if (text.empty()) return {};
  if (config.mode == TokenizerMode::kUnicodeWord) {
    icu::UnicodeString s = icu::UnicodeString::fromUTF8(
        icu::StringPiece(text.data(), static_cast<std::int32_t>(text.size())));
    if (config.case_fold) s.foldCase();
    return UnicodeWords(s);
  }

  const std::string folded =
      config.case_fold ? internal::FoldCase(text) : std::string(text);
  std::vector<std::string> tokens;
  std::string current;
  for (char32_t c : internal::DecodeUtf8(folded)) {
    if (internal::IsWhitespace(c)) {
      if (!current.empty()) tokens.push_back(std::move(current));
      current.clear();
      continue;
    }
    icu::UnicodeString one(static_cast<UChar32>(c));
    if (config.mode == TokenizerMode::kCharacter) {
      tokens.push_back(ToUtf8(one));
    } else {
      one.toUTF8String(current);
    }
  }
  if (!current.empty()) tokens.push_back(std::move(current));
  return tokens;
}

}  // namespace dmeter
