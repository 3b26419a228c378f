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

#include "dmeter/ingest.h"

#include <charconv>
#include <fstream>
#include <iterator>
#include <optional>
#include <unordered_set>

#include <nlohmann/json.hpp>

#include "dmeter/errors.h"
#include "unicode_util.h"

namespace dmeter {
namespace {

using nlohmann::json;

class RecordCollector {
 public:
  explicit RecordCollector(std::vector<IngestError>& errors)
      : errors_(errors) {}

  void Add(Record record, std::size_t line) {
    if (record.id.empty()) record.id = "L" + std::to_string(line);
    if (!internal::IsValidUtf8(record.text)) {
      Fail(line, "text is not valid UTF-8");
      return;
    }
    if (!ids_.insert(record.id).second) {
      Fail(line, "duplicate record id '" + record.id + "'");
      return;
    }
    records_.push_back(std::move(record));
  }

  void Fail(std::size_t line, std::string message) {
    errors_.push_back({line, std::move(message)});
  }

  std::vector<Record> Take() { return std::move(records_); }

 private:
  std::vector<IngestError>& errors_;
  std::vector<Record> records_;
  std::unordered_set<std::string> ids_;
};

std::optional<std::int64_t> ParseInt64(std::string_view s) {
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return value;
}

void StripCarriageReturn(std::string& line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
}

void ReadJsonl(std::istream& in, const IngestOptions& options,
               RecordCollector& out) {
  std::string line;
  for (std::size_t number = 1; std::getline(in, line); ++number) {
    StripCarriageReturn(line);
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    json object = json::parse(line, nullptr, /*allow_exceptions=*/false);
    if (object.is_discarded()) {
      out.Fail(number, "invalid JSON");
      continue;
    }
    if (!object.is_object()) {
      out.Fail(number, "record is not a JSON object");
      continue;
    }
    Record record;
    auto text = object.find(options.text_field);
    if (text == object.end() || !text->is_string()) {
      out.Fail(number, "missing string field '" + options.text_field + "'");
      continue;
    }
    record.text = text->get<std::string>();
    if (auto id = object.find(options.id_field); id != object.end()) {
      if (id->is_string()) {
        record.id = id->get<std::string>();
      } else if (id->is_number_integer()) {
        record.id = id->dump();
      } else {
        out.Fail(number, "field '" + options.id_field +
                             "' must be a string or integer");
        continue;
      }
    }
    if (auto ts = object.find(options.timestamp_field); ts != object.end()) {
      if (!ts->is_number_integer()) {
        out.Fail(number,
                 "field '" + options.timestamp_field + "' must be an integer");
        continue;
      }
      record.timestamp = ts->get<std::int64_t>();
    }
    if (auto attrs = object.find(options.attributes_field);
        attrs != object.end()) {
      bool valid = attrs->is_object();
      if (valid) {
        for (const auto& [key, value] : attrs->items()) {
          if (!value.is_string()) {
            valid = false;
            break;
          }
          record.attributes[key] = value.get<std::string>();
        }
      }
      if (!valid) {
        out.Fail(number, "field '" + options.attributes_field +
                             "' must be an object of strings");
        continue;
      }
    }
    out.Add(std::move(record), number);
  }
}

void ReadPlaintext(std::istream& in, RecordCollector& out) {
  std::string line;
  for (std::size_t number = 1; std::getline(in, line); ++number) {
    StripCarriageReturn(line);
    out.Add(Record{.id = {}, .text = line, .attributes = {}, .timestamp = {}},
            number);
  }
}

struct CsvRow {
  std::size_t line = 0;
  std::vector<std::string> fields;
  std::string error;
};

// RFC 4180 reader: quoted fields may span lines and escape quotes as "".
class CsvReader {
 public:
  explicit CsvReader(std::string data) : data_(std::move(data)) {}

  bool Next(CsvRow& row) {
    if (pos_ >= data_.size()) return false;
    row = CsvRow{.line = line_, .fields = {}, .error = {}};
    std::string field;
    bool quoted = false;
    bool field_was_quoted = false;
    while (pos_ < data_.size()) {
      const char c = data_[pos_++];
      if (quoted) {
        if (c == '"') {
          if (pos_ < data_.size() && data_[pos_] == '"') {
            field.push_back('"');
            ++pos_;
          } else {
            quoted = false;
          }
        } else {
          if (c == '\n') ++line_;
          field.push_back(c);
        }
        continue;
      }
      if (c == '"' && field.empty() && !field_was_quoted) {
        quoted = true;
        field_was_quoted = true;
      } else if (c == ',') {
        row.fields.push_back(std::move(field));
        field.clear();
        field_was_quoted = false;
      } else if (c == '\n' || c == '\r') {
        if (c == '\r' && pos_ < data_.size() && data_[pos_] == '\n') ++pos_;
        ++line_;
        row.fields.push_back(std::move(field));
        return true;
      } else if (field_was_quoted) {
        row.error = "unexpected character after closing quote";
        field.push_back(c);
      } else {
        field.push_back(c);
      }
    }
    if (quoted) row.error = "unterminated quoted field";
    row.fields.push_back(std::move(field));
    return true;
  }

 private:
  std::string data_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
};

void ReadCsv(std::istream& in, const IngestOptions& options,
             RecordCollector& out) {
  CsvReader reader(std::string(std::istreambuf_iterator<char>(in), {}));
  CsvRow header;
  if (!reader.Next(header)) return;
  if (!header.error.empty()) {
    throw FormatError("CSV header: " + header.error);
  }
  std::optional<std::size_t> text_col, id_col, ts_col;
  for (std::size_t i = 0; i < header.fields.size(); ++i) {
    const std::string& name = header.fields[i];
    if (name == options.text_field) text_col = i;
    if (name == options.id_field) id_col = i;
    if (name == options.timestamp_field) ts_col = i;
  }
  if (!text_col) {
    throw ArgumentError("CSV header has no text column '" +
                        options.text_field + "'");
  }
  CsvRow row;
  while (reader.Next(row)) {
    if (row.fields.size() == 1 && row.fields[0].empty() && row.error.empty()) {
      continue;  // blank line
    }
    if (!row.error.empty()) {
      out.Fail(row.line, row.error);
      continue;
    }
    if (row.fields.size() != header.fields.size()) {
      out.Fail(row.line, "expected " + std::to_string(header.fields.size()) +
                             " fields, found " +
                             std::to_string(row.fields.size()));
      continue;
    }
    Record record;
    record.text = row.fields[*text_col];
    if (id_col) record.id = row.fields[*id_col];
    if (ts_col && !row.fields[*ts_col].empty()) {
      record.timestamp = ParseInt64(row.fields[*ts_col]);
      if (!record.timestamp) {
        out.Fail(row.line, "timestamp '" + row.fields[*ts_col] +
                               "' is not an integer");
        continue;
      }
    }
    for (std::size_t i = 0; i < header.fields.size(); ++i) {
      if (i == *text_col || (id_col && i == *id_col) ||
          (ts_col && i == *ts_col) || row.fields[i].empty()) {
        continue;
      }
      record.attributes[header.fields[i]] = row.fields[i];
    }
    out.Add(std::move(record), row.line);
  }
}

}  // namespace

InputFormat ParseInputFormat(std::string_view name) {
  if (name == "jsonl") return InputFormat::kJsonl;
  if (name == "plaintext" || name == "text") return InputFormat::kPlaintext;
  if (name == "csv") return InputFormat::kCsv;
  throw ArgumentError("unknown input format '" + std::string(name) +
                      "' (expected jsonl, plaintext or csv)");
}

std::string_view FormatName(InputFormat format) {
  switch (format) {
    case InputFormat::kJsonl:
      return "jsonl";
    case InputFormat::kPlaintext:
      return "plaintext";
    case InputFormat::kCsv:
      return "csv";
  }
  return "unknown";
}

IngestResult Ingest(std::istream& in, const IngestOptions& options) {
  IngestResult result;
  RecordCollector collector(result.errors);
  switch (options.format) {
    case InputFormat::kJsonl:
      ReadJsonl(in, options, collector);
      break;
    case InputFormat::kPlaintext:
      ReadPlaintext(in, collector);
      break;
    case InputFormat::kCsv:
      ReadCsv(in, options, collector);
      break;
  }
  if (in.bad()) throw IoError("read failure while ingesting");
  result.corpus = Corpus::FromRecords(collector.Take(), options.tokenizer);
  return result;
}

IngestResult Ingest(const std::filesystem::path& path,
                    const IngestOptions& options) {
  std::error_code ec;
  if (std::filesystem::is_directory(path, ec)) {
    throw IoError("cannot read '" + path.string() + "': is a directory");
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "'");
  try {
    return Ingest(in, options);
  } catch (const IoError&) {
    throw IoError("read failure on '" + path.string() + "'");
  }
}

}  // namespace dmeter
