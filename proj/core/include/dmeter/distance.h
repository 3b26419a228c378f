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

#ifndef DMETER_DISTANCE_H_
#define DMETER_DISTANCE_H_

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dmeter/embedding.h"
#include "dmeter/frequency_table.h"
#include "dmeter/transport.h"

namespace dmeter {

// Discrete probability distribution over unique items.
class Distribution {
 public:
  // Throws ArgumentError unless sizes match, support items are unique,
  // probabilities are non-negative and sum to 1 within 1e-9.
  Distribution(std::vector<std::string> support, std::vector<double> probs);

  // Normalizes non-negative weights with a positive sum.
  static Distribution FromWeights(std::vector<std::string> support,
                                  std::span<const double> weights);
  static Distribution FromCounts(const FrequencyTable& table);

  const std::vector<std::string>& support() const { return support_; }
  const std::vector<double>& probs() const { return probs_; }
  std::size_t size() const { return support_.size(); }
  // 0 for items outside the support.
  double Prob(std::string_view item) const;

 private:
  std::vector<std::string> support_;
  std::vector<double> probs_;
};

// Minimum single-scalar insertions, deletions and substitutions turning `a`
// into `b`, counted over Unicode scalar values.
std::size_t Levenshtein(std::string_view a, std::string_view b);

struct Divergence {
  double nats = 0;  // +inf when `infinite`
  bool infinite = false;
};

// KL(p || q) in nats over the union of supports. `epsilon` is added to every
// q mass on the union before renormalizing q; with epsilon = 0 a zero q mass
// under positive p mass yields an infinite divergence.
Divergence KlDivergence(const Distribution& p, const Distribution& q,
                        double epsilon = 1e-9);
// Positionally aligned probability vectors of equal length.
Divergence KlDivergence(std::span<const double> p, std::span<const double> q,
                        double epsilon = 1e-9);

// 1-D optimal transport between equal-size samples: mean |x_(i) - y_(i)|
// over sorted samples. Throws ArgumentError on empty or unequal samples.
double Emd1d(std::span<const double> xs, std::span<const double> ys);

using GroundCost = std::function<double(const std::string&, const std::string&)>;

// Exact earth mover's distance between two distributions under `cost`.
// Throws ArgumentError when a cost is negative or non-finite.
double EmdDiscrete(const Distribution& p, const Distribution& q,
                   const GroundCost& cost, const TransportOptions& options = {});
double EmdDiscrete(std::span<const double> p, std::span<const double> q,
                   const RowMajorMatrix& cost,
                   const TransportOptions& options = {});

enum class WordCost { kEuclidean, kCosine };

struct WmdResult {
  double distance = 0;
  // Tokens (with multiplicity) that had no embedding row.
  std::size_t dropped_a = 0;
  std::size_t dropped_b = 0;
};

// EMD between the normalized bag-of-words of two token lists, with ground
// cost between word embeddings (Euclidean, or 1 - cosine). Tokens without
// an embedding are dropped and counted. Throws UndefinedValueError when a
// document is empty after filtering.
WmdResult WordMoversDistance(std::span<const std::string> doc_a,
                             std::span<const std::string> doc_b,
                             const EmbeddingMatrix& embeddings,
                             WordCost cost = WordCost::kEuclidean,
                             const TransportOptions& options = {});

}  // namespace dmeter

#endif  // DMETER_DISTANCE_H_
