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

#include "dmeter/association.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <unordered_set>

#include "dmeter/errors.h"

namespace dmeter {

std::string ContextSpec::ToString() const {
  std::string out = mode == ContextMode::kDocument
                        ? "document"
                        : "window(" + std::to_string(window) + ")";
  return attribute_tokens ? out + "+attributes" : out;
}

std::uint64_t CooccurrenceTable::PairCount(std::string_view x,
                                           std::string_view y) const {
  auto row = pairs_.find(std::string(x));
  if (row == pairs_.end()) return 0;
  auto cell = row->second.find(std::string(y));
  return cell == row->second.end() ? 0 : cell->second;
}

std::vector<std::pair<std::string, std::uint64_t>> CooccurrenceTable::CoTerms(
    std::string_view term) const {
  std::vector<std::pair<std::string, std::uint64_t>> out;
  auto row = pairs_.find(std::string(term));
  if (row == pairs_.end()) return out;
  out.assign(row->second.begin(), row->second.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t CooccurrenceTable::pair_size() const {
  std::size_t n = 0;
  for (const auto& [term, row] : pairs_) n += row.size();
  return n / 2;
}

std::string AttributeToken(std::string_view key, std::string_view value) {
  return "@" + std::string(key) + "=" + std::string(value);
}

void CooccurrenceTable::AddPair(const std::string& x, const std::string& y,
                                std::uint64_t n) {
  pairs_[x][y] += n;
  pairs_[y][x] += n;
}

CooccurrenceTable BuildCooccurrence(
    const Corpus& corpus, const std::optional<std::vector<std::string>>& targets,
    const ContextSpec& context, CountMode count_mode) {
  if (targets && targets->empty()) throw ArgumentError("empty target set");
  if (context.mode == ContextMode::kWindow && context.window < 1) {
    throw ArgumentError("window width must be >= 1");
  }
  std::unordered_set<std::string> target_set;
  if (targets) target_set.insert(targets->begin(), targets->end());

  CooccurrenceTable table;
  table.context_ = context;
  table.count_mode_ = count_mode;

  auto add_context = [&](std::span<const std::string> tokens,
                         std::span<const std::string> labels) {
    // Ordered so pair insertion is deterministic.
    std::map<std::string, std::uint64_t> present;
    for (const std::string& t : tokens) ++present[t];
    for (const std::string& t : labels) ++present[t];
    const bool binary = count_mode == CountMode::kBinary;
    table.n_contexts_ += binary ? 1 : tokens.size() + labels.size();
    for (const auto& [term, n] : present) {
      table.term_counts_.Add(term, binary ? 1 : n);
    }
    for (auto a = present.begin(); a != present.end(); ++a) {
      for (auto b = std::next(a); b != present.end(); ++b) {
        if (!target_set.empty() && !target_set.contains(a->first) &&
            !target_set.contains(b->first)) {
          continue;
        }
        table.AddPair(a->first, b->first,
                      binary ? 1 : std::min(a->second, b->second));
      }
    }
  };

  std::vector<std::string> labels;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const auto tokens = corpus.tokens(i);
    labels.clear();
    if (context.attribute_tokens) {
      for (const auto& [key, value] : corpus.records()[i].attributes) {
        labels.push_back(AttributeToken(key, value));
      }
    }
    if (context.mode == ContextMode::kDocument) {
      add_context(tokens, labels);
    } else if (!tokens.empty()) {
      const std::size_t w = std::min(context.window, tokens.size());
      for (std::size_t start = 0; start + w <= tokens.size(); ++start) {
        add_context(tokens.subspan(start, w), labels);
      }
    }
  }
  return table;
}

namespace {

struct Probabilities {
  double joint, px, py;
};

Probabilities Estimate(const CooccurrenceTable& table, std::string_view x,
                       std::string_view y, double alpha) {
  if (!(alpha >= 0) || !std::isfinite(alpha)) {
    throw ArgumentError("smoothing alpha must be finite and >= 0");
  }
  const std::uint64_t cx = table.TermCount(x), cy = table.TermCount(y);
  if (cx == 0) throw ArgumentError("term '" + std::string(x) + "' is absent");
  if (cy == 0) throw ArgumentError("term '" + std::string(y) + "' is absent");
  const std::uint64_t cxy = x == y ? cx : table.PairCount(x, y);
  const double denom = static_cast<double>(table.n_contexts()) + 2 * alpha;
  return {(static_cast<double>(cxy) + alpha) / denom,
          (static_cast<double>(cx) + alpha) / denom,
          (static_cast<double>(cy) + alpha) / denom};
}

}  // namespace

AssociationScore Pmi(const CooccurrenceTable& table, std::string_view x,
                     std::string_view y, double alpha) {
  const Probabilities p = Estimate(table, x, y, alpha);
  if (p.joint == 0) {
    return {-std::numeric_limits<double>::infinity(), true, false};
  }
  return {std::log(p.joint) - std::log(p.px) - std::log(p.py), false, false};
}

AssociationScore Npmi(const CooccurrenceTable& table, std::string_view x,
                      std::string_view y, double alpha) {
  const Probabilities p = Estimate(table, x, y, alpha);
  if (p.joint == 0) return {-1.0, true, false};
  if (p.joint >= 1) return {1.0, false, true};
  // Summing the marginals in a fixed order keeps the score bitwise symmetric.
  const double lx = std::log(p.px), ly = std::log(p.py);
  const double pmi = std::log(p.joint) - (std::min(lx, ly) + std::max(lx, ly));
  return {std::clamp(pmi / -std::log(p.joint), -1.0, 1.0), false, false};
}

std::vector<RankedAssociation> TopAssociations(const CooccurrenceTable& table,
                                               std::string_view target,
                                               std::size_t k, double alpha) {
  std::vector<RankedAssociation> ranked;
  if (table.TermCount(target) == 0) return ranked;
  for (auto& [term, count] : table.CoTerms(target)) {
    ranked.push_back({term, count, Npmi(table, target, term, alpha)});
  }
  std::sort(ranked.begin(), ranked.end(),
            [](const RankedAssociation& a, const RankedAssociation& b) {
              if (a.npmi.value != b.npmi.value) {
                return a.npmi.value > b.npmi.value;
              }
              return a.term < b.term;
            });
  if (ranked.size() > k) ranked.resize(k);
  return ranked;
}

double Pearson(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size()) {
    throw ArgumentError("correlation inputs differ in length");
  }
  if (xs.size() < 2) throw ArgumentError("correlation needs at least 2 points");
  const double n = static_cast<double>(xs.size());
  const double mx = std::accumulate(xs.begin(), xs.end(), 0.0) / n;
  const double my = std::accumulate(ys.begin(), ys.end(), 0.0) / n;
  double sxy = 0, sxx = 0, syy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double dx = xs[i] - mx, dy = ys[i] - my;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  if (sxx == 0 || syy == 0) {
    throw UndefinedValueError("correlation undefined for zero variance");
  }
  return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

std::vector<double> FractionalRanks(std::span<const double> values) {
  std::vector<std::size_t> order(values.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) {
                     return values[a] < values[b];
                   });
  std::vector<double> ranks(values.size());
  for (std::size_t i = 0; i < order.size();) {
    std::size_t j = i;
    while (j < order.size() && values[order[j]] == values[order[i]]) ++j;
    // Positions i..j-1 share ranks i+1..j.
    const double rank = (static_cast<double>(i + 1) + static_cast<double>(j)) / 2;
    for (std::size_t t = i; t < j; ++t) ranks[order[t]] = rank;
    i = j;
  }
  return ranks;
}

double Spearman(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size()) {
    throw ArgumentError("correlation inputs differ in length");
  }
  const std::vector<double> rx = FractionalRanks(xs);
  const std::vector<double> ry = FractionalRanks(ys);
  return Pearson(rx, ry);
}

}  // namespace dmeter
