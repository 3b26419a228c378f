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

#ifndef DMETER_FREQUENCY_TABLE_H_
#define DMETER_FREQUENCY_TABLE_H_

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace dmeter {

// Item -> count map with a running total. Zero counts are never stored, so
// size() is the number of distinct items observed.
//
// N-gram tables key each n-gram by its tokens joined with a single space;
// tokens never contain whitespace, so the encoding is unambiguous.
class FrequencyTable {
 public:
  using Entry = std::pair<std::string, std::uint64_t>;

  FrequencyTable() = default;

  void Add(std::string_view item, std::uint64_t count = 1);
  // Associative and commutative; partial tables merge in any order.
  void Merge(const FrequencyTable& other);

  std::uint64_t Count(std::string_view item) const;
  bool Contains(std::string_view item) const { return Count(item) > 0; }

  std::uint64_t total() const { return total_; }
  std::size_t size() const { return counts_.size(); }
  bool empty() const { return counts_.empty(); }

  // Entries sorted by item, for deterministic iteration.
  std::vector<Entry> SortedByItem() const;
  // Entries sorted by descending count, ties broken by ascending item.
  std::vector<Entry> SortedByCount() const;
  // Keys in ascending order.
  std::vector<std::string> Items() const;

  const std::unordered_map<std::string, std::uint64_t>& counts() const {
    return counts_;
  }

  friend bool operator==(const FrequencyTable& a, const FrequencyTable& b) {
    return a.total_ == b.total_ && a.counts_ == b.counts_;
  }

 private:
  std::unordered_map<std::string, std::uint64_t> counts_;
  std::uint64_t total_ = 0;
};

// Joins n-gram tokens into a FrequencyTable key.
std::string JoinNgram(std::span<const std::string> tokens,
                      std::size_t begin, std::size_t n);

}  // namespace dmeter

#endif  // DMETER_FREQUENCY_TABLE_H_
