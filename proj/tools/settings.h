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

#ifndef DMETER_TOOLS_SETTINGS_H_
#define DMETER_TOOLS_SETTINGS_H_

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace dmeter::cli {

// Flat "section.key" -> value store. Keys outside any section are stored
// bare. Later writes win, so flags applied after the config file override
// it.
class Settings {
 public:
  // Reads a "key = value" file with [section] headers. Throws IoError or
  // FormatError.
  void LoadFile(const std::filesystem::path& path);
  // Accepts "key=value" or "section.key=value".
  void SetAssignment(const std::string& assignment);
  void Set(const std::string& key, std::string value);

  std::optional<std::string> Get(const std::string& key) const;
  std::string GetOr(const std::string& key, const std::string& fallback) const;
  std::optional<std::size_t> GetSize(const std::string& key) const;
  std::optional<int> GetInt(const std::string& key) const;
  std::optional<double> GetDouble(const std::string& key) const;
  // Comma-separated, trimmed, empty items dropped.
  std::vector<std::string> GetList(const std::string& key) const;

  // Throws ArgumentError naming the first key not in `known`.
  void RejectUnknown(const std::set<std::string>& known) const;

 private:
  std::map<std::string, std::string> values_;
};

}  // namespace dmeter::cli

#endif  // DMETER_TOOLS_SETTINGS_H_
