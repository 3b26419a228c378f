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

#ifndef DMETER_INGEST_H_
#define DMETER_INGEST_H_

#include <cstddef>
#include <filesystem>
#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "dmeter/corpus.h"
#include "dmeter/tokenizer.h"

namespace dmeter {

enum class InputFormat { kJsonl, kPlaintext, kCsv };

// "jsonl", "plaintext" (alias "text"), "csv". Throws ArgumentError.
InputFormat ParseInputFormat(std::string_view name);
std::string_view FormatName(InputFormat format);

struct IngestOptions {
  InputFormat format = InputFormat::kJsonl;
  TokenizerConfig tokenizer;
  // JSONL keys / CSV header names.
  std::string text_field = "text";
  std::string id_field = "id";
  std::string timestamp_field = "timestamp";
  // JSONL only: object of string -> string labels.
  std::string attributes_field = "attributes";
};

// A record that was skipped. `line` is 1-based and names the line the record
// starts on.
struct IngestError {
  std::size_t line = 0;
  std::string message;
};

struct IngestResult {
  Corpus corpus;
  std::vector<IngestError> errors;
};

// Reads records in source order. Malformed records are skipped and listed in
// `errors`; they never abort the ingest. Records without an id get "L<line>".
//
// CSV input must have a header row. Columns other than the text, id and
// timestamp columns become record attributes (empty cells are omitted).
//
// Throws IoError naming the path when the source cannot be read, and
// ArgumentError when a CSV header lacks the text column.
IngestResult Ingest(const std::filesystem::path& path,
                    const IngestOptions& options);
IngestResult Ingest(std::istream& in, const IngestOptions& options);

}  // namespace dmeter

#endif  // DMETER_INGEST_H_
