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

#include "dmeter/distance.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

#include "dmeter/errors.h"
#include "unicode_util.h"

namespace dmeter {

Distribution::Distribution(std::vector<std::string> support,
                           std::vector<double> probs)
    : support_(std::move(support)), probs_(std::move(probs)) {
  if (support_.size() != probs_.size()) {
    throw ArgumentError("support and probability sizes differ");
  }
  std::unordered_set<std::string_view> seen;
  double sum = 0;
  for (std::size_t i = 0; i < support_.size(); ++i) {
    if (!seen.insert(support_[i]).second) {
      throw ArgumentError("duplicate support item '" + support_[i] + "'");
    }
    if (!(probs_[i] >= 0) || !std::isfinite(probs_[i])) {
      throw ArgumentError("probabilities must be finite and non-negative");
    }
    sum += probs_[i];
  }
  if (std::abs(sum - 1.0) > 1e-9) {
    throw ArgumentError("probabilities sum to " + std::to_string(sum) +
                        ", not 1");
  }
}

Distribution Distribution::FromWeights(std::vector<std::string> support,
                                       std::span<const double> weights) {
  const double total = std::accumulate(weights.begin(), weights.end(), 0.0);
  if (!(total > 0) || !std::isfinite(total)) {
    throw ArgumentError("weights must have a positive finite sum");
  }
  std::vector<double> probs(weights.begin(), weights.end());
  for (double& p : probs) p /= total;
  return Distribution(std::move(support), std::move(probs));
}

Distribution Distribution::FromCounts(const FrequencyTable& table) {
  if (table.total() == 0) throw ArgumentError("empty frequency table");
  std::vector<std::string> support;
  std::vector<double> weights;
  for (const auto& [item, count] : table.SortedByItem()) {
    support.push_back(item);
    weights.push_back(static_cast<double>(count));
  }
  return FromWeights(std::move(support), weights);
}

double Distribution::Prob(std::string_view item) const {
  for (std::size_t i = 0; i < support_.size(); ++i) {
    if (support_[i] == item) return probs_[i];
  }
  return 0;
}

std::size_t Levenshtein(std::string_view a, std::string_view b) {
  const std::u32string s = internal::DecodeUtf8(a);
  const std::u32string t = internal::DecodeUtf8(b);
  std::vector<std::size_t> prev(t.size() + 1), curr(t.size() + 1);
  std::iota(prev.begin(), prev.end(), std::size_t{0});
  for (std::size_t i = 1; i <= s.size(); ++i) {
    curr[0] = i;
    for (std::size_t j = 1; j <= t.size(); ++j) {
      const std::size_t substitute = prev[j - 1] + (s[i - 1] == t[j - 1] ? 0 : 1);
      curr[j] = std::min({prev[j] + 1, curr[j - 1] + 1, substitute});
    }
    std::swap(prev, curr);
  }
  return prev[t.size()];
}

Divergence KlDivergence(std::span<const double> p, std::span<const double> q,
                        double epsilon) {
  if (p.size() != q.size()) {
    throw ArgumentError("KL inputs must be aligned on the same support");
  }
  if (!(epsilon >= 0)) throw ArgumentError("smoothing epsilon must be >= 0");
  const double q_total = std::accumulate(q.begin(), q.end(), 0.0) +
                         epsilon * static_cast<double>(q.size());
  double sum = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] == 0) continue;
    const double qi = (q[i] + epsilon) / q_total;
    if (qi == 0) {
      return {std::numeric_limits<double>::infinity(), true};
    }
    sum += p[i] * std::log(p[i] / qi);
  }
  // Gibbs' inequality; only rounding can push the sum below zero.
  return {std::max(0.0, sum), false};
}

Divergence KlDivergence(const Distribution& p, const Distribution& q,
                        double epsilon) {
  std::map<std::string, std::pair<double, double>> joint;
  for (std::size_t i = 0; i < p.size(); ++i) {
    joint[p.support()[i]].first = p.probs()[i];
  }
  for (std::size_t i = 0; i < q.size(); ++i) {
    joint[q.support()[i]].second = q.probs()[i];
  }
  std::vector<double> pv, qv;
  pv.reserve(joint.size());
  qv.reserve(joint.size());
  for (const auto& [item, probs] : joint) {
    pv.push_back(probs.first);
    qv.push_back(probs.second);
  }
  return KlDivergence(pv, qv, epsilon);
}

double Emd1d(std::span<const double> xs, std::span<const double> ys) {
  if (xs.empty() || ys.empty()) throw ArgumentError("empty sample");
  if (xs.size() != ys.size()) {
    throw ArgumentError("emd_1d requires equal-size samples");
  }
  std::vector<double> a(xs.begin(), xs.end()), b(ys.begin(), ys.end());
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  double sum = 0;
  for (std::size_t i = 0; i < a.size(); ++i) sum += std::abs(a[i] - b[i]);
  return sum / static_cast<double>(a.size());
}

double EmdDiscrete(std::span<const double> p, std::span<const double> q,
                   const RowMajorMatrix& cost,
                   const TransportOptions& options) {
  return SolveTransport(p, q, cost, options).cost;
}

double EmdDiscrete(const Distribution& p, const Distribution& q,
                   const GroundCost& cost, const TransportOptions& options) {
  if (p.size() > options.max_support || q.size() > options.max_support) {
    throw ArgumentError("transport support exceeds cap of " +
                        std::to_string(options.max_support) + " points");
  }
  RowMajorMatrix c(static_cast<Eigen::Index>(p.size()),
                   static_cast<Eigen::Index>(q.size()));
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = 0; j < q.size(); ++j) {
      const double value = cost(p.support()[i], q.support()[j]);
      if (!std::isfinite(value) || value < 0) {
        throw ArgumentError("ground cost(" + p.support()[i] + ", " +
                            q.support()[j] + ") is negative or non-finite");
      }
      c(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = value;
    }
  }
  return EmdDiscrete(p.probs(), q.probs(), c, options);
}

namespace {

struct Bag {
  std::vector<std::size_t> rows;  // embedding rows, ascending
  std::vector<double> weights;
  std::size_t dropped = 0;
};

Bag MakeBag(std::span<const std::string> doc, const EmbeddingMatrix& emb) {
  std::map<std::size_t, double> counts;
  Bag bag;
  for (const std::string& token : doc) {
    if (auto row = emb.Find(token)) {
      counts[*row] += 1;
    } else {
      ++bag.dropped;
    }
  }
  const double total = static_cast<double>(doc.size() - bag.dropped);
  for (const auto& [row, count] : counts) {
    bag.rows.push_back(row);
    bag.weights.push_back(count / total);
  }
  return bag;
}

}  // namespace

WmdResult WordMoversDistance(std::span<const std::string> doc_a,
                             std::span<const std::string> doc_b,
                             const EmbeddingMatrix& embeddings, WordCost cost,
                             const TransportOptions& options) {
  Bag a = MakeBag(doc_a, embeddings);
  Bag b = MakeBag(doc_b, embeddings);
  if (a.rows.empty() || b.rows.empty()) {
    throw UndefinedValueError(
        "word mover's distance: a document has no embedded tokens");
  }
  RowMajorMatrix c(static_cast<Eigen::Index>(a.rows.size()),
                   static_cast<Eigen::Index>(b.rows.size()));
  for (std::size_t i = 0; i < a.rows.size(); ++i) {
    for (std::size_t j = 0; j < b.rows.size(); ++j) {
      auto u = embeddings.Row(a.rows[i]);
      auto v = embeddings.Row(b.rows[j]);
      double value = 0;
      if (a.rows[i] != b.rows[j]) {
        value = cost == WordCost::kEuclidean ? Euclidean(u, v)
                                             : 1.0 - CosineSimilarity(u, v);
      }
      c(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = value;
    }
  }
  return {SolveTransport(a.weights, b.weights, c, options).cost, a.dropped,
          b.dropped};
}

}  // namespace dmeter
