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

#include "dmeter/frequency_table.h"

#include <algorithm>

namespace dmeter {

void FrequencyTable::Add(std::string_view item, std::uint64_t count) {
  if (count == 0) return;
  auto it = counts_.find(std::string(item));
  if (it == counts_.end()) {
    counts_.emplace(std::string(item), count);
  } else {
    it->second += count;
  }
  total_ += count;
}

void FrequencyTable::Merge(const FrequencyTable& other) {
  for (const auto& [item, count] : other.counts_) Add(item, count);
}

std::uint64_t FrequencyTable::Count(std::string_view item) const {
  auto it = counts_.find(std::string(item));
  return it == counts_.end() ? 0 : it->second;
}

std::vector<FrequencyTable::Entry> FrequencyTable::SortedByItem() const {
  std::vector<Entry> entries(counts_.begin(), counts_.end());
  std::sort(entries.begin(), entries.end(),
            [](const Entry& a, const Entry& b) { return a.first < b.first; });
  return entries;
}

std::vector<FrequencyTable::Entry> FrequencyTable::SortedByCount() const {
  std::vector<Entry> entries(counts_.begin(), counts_.end());
  std::sort(entries.begin(), entries.end(),
            [](const Entry& a, const Entry& b) {
              if (a.second != b.second) return a.second > b.second;
              return a.first < b.first;
            });
  return entries;
}

std::vector<std::string> FrequencyTable::Items() const {
  std::vector<std::string> items;
  items.reserve(counts_.size());
  for (const auto& [item, count] : counts_) items.push_back(item);
  std::sort(items.begin(), items.end());
  return items;
}

std::string JoinNgram(std::span<const std::string> tokens,
                      std::size_t begin, std::size_t n) {
  std::string key;
  for (std::size_t i = 0; i < n; ++i) {
    if (i > 0) key.push_back(' ');
    key += tokens[begin + i];
  }
  return key;
}

}  // namespace dmeter
