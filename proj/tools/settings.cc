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

#include "settings.h"

#include <charconv>
#include <cstdlib>
#include <fstream>

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include "dmeter/errors.h"

namespace dmeter::cli {
namespace {

std::string Trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r\n");
  return s.substr(begin, end - begin + 1);
}

template <typename T>
std::optional<T> ParseInteger(const std::string& key, const std::string& text) {
  T value{};
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw ArgumentError("setting '" + key + "' expects an integer, got '" +
                        text + "'");
  }
  return value;
}

}  // namespace

void Settings::LoadFile(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config file '" + path.string() + "'");
  boost::property_tree::ptree tree;
  try {
    boost::property_tree::ini_parser::read_ini(in, tree);
  } catch (const boost::property_tree::ini_parser_error& e) {
    throw FormatError("config file '" + path.string() + "' line " +
                      std::to_string(e.line()) + ": " + e.message());
  }
  for (const auto& [key, node] : tree) {
    if (node.empty()) {
      Set(key, node.data());
      continue;
    }
    for (const auto& [sub, leaf] : node) {
      if (!leaf.empty()) {
        throw FormatError("config file '" + path.string() +
                          "': nested section under '" + key + "'");
      }
      Set(key + "." + sub, leaf.data());
    }
  }
}

void Settings::SetAssignment(const std::string& assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string::npos || eq == 0) {
    throw ArgumentError("expected key=value, got '" + assignment + "'");
  }
  Set(Trim(assignment.substr(0, eq)), assignment.substr(eq + 1));
}

void Settings::Set(const std::string& key, std::string value) {
  values_[key] = Trim(value);
}

std::optional<std::string> Settings::Get(const std::string& key) const {
  auto it = values_.find(key);
  if (it == values_.end()) return std::nullopt;
  return it->second;
}

std::string Settings::GetOr(const std::string& key,
                            const std::string& fallback) const {
  return Get(key).value_or(fallback);
}

std::optional<std::size_t> Settings::GetSize(const std::string& key) const {
  auto text = Get(key);
  if (!text) return std::nullopt;
  return ParseInteger<std::size_t>(key, *text);
}

std::optional<int> Settings::GetInt(const std::string& key) const {
  auto text = Get(key);
  if (!text) return std::nullopt;
  return ParseInteger<int>(key, *text);
}

std::optional<double> Settings::GetDouble(const std::string& key) const {
  auto text = Get(key);
  if (!text) return std::nullopt;
  double value = 0;
  const char* end = text->data() + text->size();
  auto [ptr, ec] = std::from_chars(text->data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw ArgumentError("setting '" + key + "' expects a number, got '" +
                        *text + "'");
  }
  return value;
}

std::vector<std::string> Settings::GetList(const std::string& key) const {
  std::vector<std::string> items;
  auto text = Get(key);
  if (!text) return items;
  std::size_t start = 0;
  while (start <= text->size()) {
    std::size_t comma = text->find(',', start);
    if (comma == std::string::npos) comma = text->size();
    std::string item = Trim(text->substr(start, comma - start));
    if (!item.empty()) items.push_back(std::move(item));
    start = comma + 1;
  }
  return items;
}

void Settings::RejectUnknown(const std::set<std::string>& known) const {
  for (const auto& [key, value] : values_) {
    if (!known.contains(key)) {
      throw ArgumentError("unknown setting '" + key + "'");
    }
  }
}

}  // namespace dmeter::cli
