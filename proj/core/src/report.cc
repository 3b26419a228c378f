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

#include "dmeter/report.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "dmeter/errors.h"

namespace dmeter {
namespace {

using nlohmann::json;

std::string FormatNumber(double value) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.12g", value);
  return buf;
}

int SchemaMajor(const std::string& version) {
  const std::size_t dot = version.find('.');
  const std::string major = version.substr(0, dot);
  char* end = nullptr;
  const long value = std::strtol(major.c_str(), &end, 10);
  if (major.empty() || *end != '\0') {
    throw SchemaError("invalid schema_version '" + version + "'");
  }
  return static_cast<int>(value);
}

const json& Require(const json& object, const char* key) {
  auto it = object.find(key);
  if (it == object.end()) {
    throw FormatError(std::string("report is missing '") + key + "'");
  }
  return *it;
}

std::string RequireString(const json& object, const char* key) {
  const json& value = Require(object, key);
  if (!value.is_string()) {
    throw FormatError(std::string("'") + key + "' must be a string");
  }
  return value.get<std::string>();
}

}  // namespace

std::string_view ProvenanceName(Provenance provenance) {
  return provenance == Provenance::kSelfContained ? "self-contained"
                                                  : "external-model";
}

double RoundSignificant(double value) {
  if (!std::isfinite(value)) return value;
  const double rounded = std::strtod(FormatNumber(value).c_str(), nullptr);
  return rounded == 0 ? 0.0 : rounded;  // no negative zero
}

void Measurement::SetNumber(const std::string& key, double value) {
  if (std::isnan(value)) {
    values[key] = "undefined";
    flags.insert(std::string(flags::kUndefined));
  } else if (std::isinf(value)) {
    values[key] = value > 0 ? "inf" : "-inf";
    flags.insert(std::string(flags::kInfinite));
  } else {
    values[key] = RoundSignificant(value);
  }
}

void Measurement::SetOptional(const std::string& key,
                              std::optional<double> value) {
  if (value) {
    SetNumber(key, *value);
  } else {
    values[key] = "undefined";
    flags.insert(std::string(flags::kUndefined));
  }
}

void Measurement::SetList(const std::string& key,
                          const std::vector<double>& list) {
  json array = json::array();
  for (double v : list) {
    if (std::isfinite(v)) {
      array.push_back(RoundSignificant(v));
    } else {
      array.push_back(std::isnan(v) ? "undefined" : (v > 0 ? "inf" : "-inf"));
    }
  }
  values[key] = std::move(array);
}

std::optional<double> Measurement::Number(const std::string& key) const {
  auto it = values.find(key);
  if (it == values.end() || !it->second.is_number()) return std::nullopt;
  return it->second.get<double>();
}

Measurement Measurement::Skipped(std::string unit, std::string reason) {
  Measurement m;
  m.unit = std::move(unit);
  m.flags.insert(std::string(flags::kSkipped));
  m.note = std::move(reason);
  return m;
}

Measurement Measurement::Failed(std::string unit, std::string reason) {
  Measurement m;
  m.unit = std::move(unit);
  m.flags.insert(std::string(flags::kError));
  m.note = std::move(reason);
  return m;
}

json ReportToJson(const MeasurementReport& report) {
  json measurements = json::object();
  for (const auto& [name, m] : report.measurements) {
    json entry = {
        {"values", m.values},
        {"params", m.params},
        {"unit", m.unit},
        {"flags", json(std::vector<std::string>(m.flags.begin(), m.flags.end()))},
        {"provenance", std::string(ProvenanceName(m.provenance))},
    };
    if (!m.note.empty()) entry["note"] = m.note;
    measurements[name] = std::move(entry);
  }
  return {
      {"schema_version", report.schema_version},
      {"corpus_fingerprint", report.corpus_fingerprint},
      {"tokenizer_config", report.tokenizer_config},
      {"created_at", report.created_at},
      {"measurements", std::move(measurements)},
  };
}

MeasurementReport ReportFromJson(const json& j) {
  if (!j.is_object()) throw FormatError("report must be a JSON object");
  MeasurementReport report;
  report.schema_version = RequireString(j, "schema_version");
  SchemaMajor(report.schema_version);
  report.corpus_fingerprint = RequireString(j, "corpus_fingerprint");
  report.tokenizer_config = RequireString(j, "tokenizer_config");
  report.created_at = RequireString(j, "created_at");
  const json& measurements = Require(j, "measurements");
  if (!measurements.is_object()) {
    throw FormatError("'measurements' must be an object");
  }
  for (const auto& [name, entry] : measurements.items()) {
    if (!entry.is_object()) {
      throw FormatError("measurement '" + name + "' must be an object");
    }
    Measurement m;
    const json& values = Require(entry, "values");
    const json& params = Require(entry, "params");
    const json& entry_flags = Require(entry, "flags");
    if (!values.is_object() || !params.is_object() || !entry_flags.is_array()) {
      throw FormatError("measurement '" + name + "' is malformed");
    }
    for (const auto& [key, value] : values.items()) m.values[key] = value;
    for (const auto& [key, value] : params.items()) {
      if (!value.is_string()) {
        throw FormatError("param '" + key + "' of '" + name +
                          "' must be a string");
      }
      m.params[key] = value.get<std::string>();
    }
    for (const json& f : entry_flags) {
      if (!f.is_string()) throw FormatError("flags must be strings");
      m.flags.insert(f.get<std::string>());
    }
    m.unit = RequireString(entry, "unit");
    const std::string provenance = RequireString(entry, "provenance");
    if (provenance == "self-contained") {
      m.provenance = Provenance::kSelfContained;
    } else if (provenance == "external-model") {
      m.provenance = Provenance::kExternalModel;
    } else {
      throw FormatError("unknown provenance '" + provenance + "'");
    }
    if (auto note = entry.find("note"); note != entry.end()) {
      if (!note->is_string()) throw FormatError("note must be a string");
      m.note = note->get<std::string>();
    }
    report.measurements[name] = std::move(m);
  }
  return report;
}

std::string SerializeReport(const MeasurementReport& report) {
  return ReportToJson(report).dump(2) + "\n";
}

MeasurementReport ParseReport(std::string_view text) {
  json j = json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded()) throw FormatError("report is not valid JSON");
  return ReportFromJson(j);
}

MeasurementReport LoadReport(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return ParseReport(buffer.str());
  } catch (const FormatError& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
}

void SaveReport(const std::filesystem::path& path,
                const MeasurementReport& report) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write '" + path.string() + "'");
  out << SerializeReport(report);
  if (!out) throw IoError("write failure on '" + path.string() + "'");
}

namespace {

bool NotComputed(const Measurement& m) {
  return m.HasFlag(flags::kSkipped) || m.HasFlag(flags::kError);
}

std::string ParamDifference(const Measurement& a, const Measurement& b) {
  std::set<std::string> keys;
  for (const auto& [k, v] : a.params) keys.insert(k);
  for (const auto& [k, v] : b.params) keys.insert(k);
  std::string differing;
  for (const std::string& k : keys) {
    auto x = a.params.find(k);
    auto y = b.params.find(k);
    const bool same = x != a.params.end() && y != b.params.end() &&
                      x->second == y->second;
    if (!same) differing += (differing.empty() ? "" : ",") + k;
  }
  return differing;
}

}  // namespace

BatchDelta Compare(const MeasurementReport& baseline,
                   const MeasurementReport& candidate) {
  const int major_a = SchemaMajor(baseline.schema_version);
  const int major_b = SchemaMajor(candidate.schema_version);
  if (major_a != major_b) {
    throw SchemaError("schema major versions differ: " +
                      baseline.schema_version + " vs " +
                      candidate.schema_version);
  }
  BatchDelta delta;
  delta.baseline_ref = baseline.corpus_fingerprint;
  delta.candidate_ref = candidate.corpus_fingerprint;

  std::set<std::string> names;
  for (const auto& [name, m] : baseline.measurements) names.insert(name);
  for (const auto& [name, m] : candidate.measurements) names.insert(name);

  auto incomparable = [&](const std::string& name, const std::string& key,
                          std::string reason) {
    DeltaEntry e;
    e.measurement = name;
    e.key = key;
    e.reason = std::move(reason);
    delta.entries.push_back(std::move(e));
  };

  for (const std::string& name : names) {
    auto a = baseline.measurements.find(name);
    auto b = candidate.measurements.find(name);
    if (a == baseline.measurements.end()) {
      incomparable(name, "", "missing in baseline");
      continue;
    }
    if (b == candidate.measurements.end()) {
      incomparable(name, "", "missing in candidate");
      continue;
    }
    const Measurement& ma = a->second;
    const Measurement& mb = b->second;
    if (NotComputed(ma) || NotComputed(mb)) {
      incomparable(name, "", "not computed in both reports");
      continue;
    }
    const std::string param_diff = ParamDifference(ma, mb);

    std::set<std::string> keys;
    for (const auto& [k, v] : ma.values) {
      if (!v.is_array()) keys.insert(k);
    }
    for (const auto& [k, v] : mb.values) {
      if (!v.is_array()) keys.insert(k);
    }
    for (const std::string& key : keys) {
      DeltaEntry e;
      e.measurement = name;
      e.key = key;
      e.baseline = ma.Number(key);
      e.candidate = mb.Number(key);
      if (!param_diff.empty()) {
        e.reason = "params differ: " + param_diff;
      } else if (!e.baseline || !e.candidate) {
        e.reason = "value missing or not finite";
      } else {
        e.comparable = true;
        e.abs_delta = RoundSignificant(*e.candidate - *e.baseline);
        if (*e.baseline != 0) {
          e.rel_delta = RoundSignificant((*e.candidate - *e.baseline) /
                                         std::abs(*e.baseline));
        }
      }
      delta.entries.push_back(std::move(e));
    }
  }
  for (const DeltaEntry& e : delta.entries) {
    (e.comparable ? delta.n_comparable : delta.n_incomparable)++;
  }
  return delta;
}

json DeltaToJson(const BatchDelta& delta) {
  auto optional = [](const std::optional<double>& v) -> json {
    return v ? json(*v) : json(nullptr);
  };
  json entries = json::array();
  for (const DeltaEntry& e : delta.entries) {
    json entry = {
        {"measurement", e.measurement},
        {"key", e.key},
        {"baseline", optional(e.baseline)},
        {"candidate", optional(e.candidate)},
        {"abs_delta", optional(e.abs_delta)},
        {"rel_delta", optional(e.rel_delta)},
        {"comparable", e.comparable},
    };
    if (!e.reason.empty()) entry["reason"] = e.reason;
    entries.push_back(std::move(entry));
  }
  return {
      {"baseline_ref", delta.baseline_ref},
      {"candidate_ref", delta.candidate_ref},
      {"n_comparable", delta.n_comparable},
      {"n_incomparable", delta.n_incomparable},
      {"entries", std::move(entries)},
  };
}

std::string SerializeDelta(const BatchDelta& delta) {
  return DeltaToJson(delta).dump(2) + "\n";
}

std::string FormatDeltaTable(const BatchDelta& delta) {
  auto cell = [](const std::optional<double>& v) {
    return v ? FormatNumber(*v) : std::string("-");
  };
  std::vector<std::vector<std::string>> rows = {
      {"measurement", "baseline", "candidate", "delta", "rel_delta", "note"}};
  for (const DeltaEntry& e : delta.entries) {
    const std::string name =
        e.key.empty() ? e.measurement : e.measurement + "." + e.key;
    rows.push_back({name, cell(e.baseline), cell(e.candidate),
                    cell(e.abs_delta), cell(e.rel_delta),
                    e.comparable ? "" : "incomparable: " + e.reason});
  }
  std::vector<std::size_t> widths(rows[0].size(), 0);
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      widths[c] = std::max(widths[c], row[c].size());
    }
  }
  std::ostringstream out;
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      line += row[c];
      if (c + 1 < row.size()) line += std::string(widths[c] - row[c].size() + 2, ' ');
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out << line << '\n';
  }
  out << delta.n_comparable << " comparable, " << delta.n_incomparable
      << " incomparable\n";
  return out.str();
}

}  // namespace dmeter
