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

#ifndef DMETER_REPORT_H_
#define DMETER_REPORT_H_

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

namespace dmeter {

inline constexpr std::string_view kSchemaVersion = "1.0";

// Flag vocabulary used in measurement entries.
namespace flags {
inline constexpr std::string_view kInfinite = "infinite";
inline constexpr std::string_view kUndefined = "undefined";
inline constexpr std::string_view kLowConfidence = "low-confidence";
inline constexpr std::string_view kSkipped = "skipped";
inline constexpr std::string_view kError = "error";
}  // namespace flags

enum class Provenance { kSelfContained, kExternalModel };

std::string_view ProvenanceName(Provenance provenance);

// Rounds to 12 significant digits, the precision reports are written with.
double RoundSignificant(double value);

struct Measurement {
  // Numbers (rounded to 12 significant digits), marker strings "inf",
  // "-inf" and "undefined", or arrays of numbers.
  std::map<std::string, nlohmann::json> values;
  std::map<std::string, std::string> params;
  std::string unit;
  std::set<std::string> flags;
  Provenance provenance = Provenance::kSelfContained;
  // Reason for skipped or failed entries.
  std::string note;

  // Stores a rounded number; non-finite values become markers and raise the
  // infinite / undefined flag.
  void SetNumber(const std::string& key, double value);
  // nullopt is stored as "undefined" and flagged.
  void SetOptional(const std::string& key, std::optional<double> value);
  void SetList(const std::string& key, const std::vector<double>& values);

  bool HasFlag(std::string_view flag) const {
    return flags.contains(std::string(flag));
  }
  // Numeric value, if the key holds a finite number.
  std::optional<double> Number(const std::string& key) const;

  static Measurement Skipped(std::string unit, std::string reason);
  static Measurement Failed(std::string unit, std::string reason);
};

struct MeasurementReport {
  std::string schema_version{kSchemaVersion};
  std::string corpus_fingerprint;
  std::string tokenizer_config;
  std::string created_at;
  std::map<std::string, Measurement> measurements;
};

nlohmann::json ReportToJson(const MeasurementReport& report);
// Throws FormatError on structurally invalid reports.
MeasurementReport ReportFromJson(const nlohmann::json& json);

// Sorted keys, two-space indent, trailing newline. Byte-stable.
std::string SerializeReport(const MeasurementReport& report);
MeasurementReport ParseReport(std::string_view text);
MeasurementReport LoadReport(const std::filesystem::path& path);
void SaveReport(const std::filesystem::path& path,
                const MeasurementReport& report);

struct DeltaEntry {
  std::string measurement;
  std::string key;  // value key; empty when the whole entry is incomparable
  std::optional<double> baseline;
  std::optional<double> candidate;
  // candidate - baseline, rounded like report values.
  std::optional<double> abs_delta;
  // abs_delta / |baseline| when baseline != 0.
  std::optional<double> rel_delta;
  bool comparable = false;
  std::string reason;
};

struct BatchDelta {
  std::string baseline_ref;
  std::string candidate_ref;
  std::vector<DeltaEntry> entries;
  std::size_t n_comparable = 0;
  std::size_t n_incomparable = 0;
};

// Per-value deltas for every scalar numeric value. Entries are comparable
// only when both sides are finite numbers, neither entry was skipped or
// failed, and their params (including the tokenizer) are identical. Throws
// SchemaError when schema major versions differ.
BatchDelta Compare(const MeasurementReport& baseline,
                   const MeasurementReport& candidate);

nlohmann::json DeltaToJson(const BatchDelta& delta);
std::string SerializeDelta(const BatchDelta& delta);
// Aligned, human-readable table.
std::string FormatDeltaTable(const BatchDelta& delta);

}  // namespace dmeter

#endif  // DMETER_REPORT_H_
