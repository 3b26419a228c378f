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

// Internal text helpers backed by ICU and OpenSSL. Not part of the installed
// interface.

#ifndef DMETER_SRC_UNICODE_UTIL_H_
#define DMETER_SRC_UNICODE_UTIL_H_

#include <memory>
#include <string>
#include <string_view>

namespace dmeter::internal {

bool IsValidUtf8(std::string_view text);

// Decodes UTF-8 into scalar values; ill-formed sequences become U+FFFD.
std::u32string DecodeUtf8(std::string_view text);

bool IsWhitespace(char32_t c);

std::string NormalizeNfc(std::string_view text);
// Full Unicode case folding (e.g. "Straße" -> "strasse").
std::string FoldCase(std::string_view text);
std::string TrimTrailingWhitespace(std::string_view text);
// Collapses whitespace runs to one U+0020 and strips both ends.
std::string CollapseWhitespace(std::string_view text);

// Incremental SHA-256.
class Sha256 {
 public:
  Sha256();
  ~Sha256();
  Sha256(const Sha256&) = delete;
  Sha256& operator=(const Sha256&) = delete;

  void Update(std::string_view bytes);
  // Appends an 8-byte little-endian length, then the bytes.
  void UpdateFramed(std::string_view bytes);
  std::string HexDigest();

 private:
  struct State;
  std::unique_ptr<State> state_;
};

std::string Sha256Hex(std::string_view bytes);

}  // namespace dmeter::internal

#endif  // DMETER_SRC_UNICODE_UTIL_H_
