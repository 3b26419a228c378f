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

#ifndef DMETER_DIVERSITY_H_
#define DMETER_DIVERSITY_H_

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <string_view>

#include "dmeter/corpus.h"
#include "dmeter/embedding.h"
#include "dmeter/frequency_table.h"

namespace dmeter {

// 1 - sum p_i^2. Throws ArgumentError on an empty table.
double GiniDiversity(const FrequencyTable& table);

// -sum p_i ln p_i in nats, with 0 ln 0 = 0. Throws ArgumentError on an
// empty table.
double ShannonEntropy(const FrequencyTable& table);
// Same over non-negative weights (normalized internally).
double ShannonEntropy(std::span<const double> weights);

inline double NatsToBits(double nats) { return nats / 0.69314718055994530942; }

// Symmetric n x n similarity matrix with unit diagonal and entries in
// [-1, 1].
class SimilarityKernel {
 public:
  // Throws ArgumentError when the matrix is not square, not symmetric within
  // 1e-9, has a non-unit diagonal, or has entries outside [-1, 1].
  SimilarityKernel(RowMajorMatrix matrix, std::string source);

  // Cosine similarity between embedding rows.
  static SimilarityKernel Cosine(const EmbeddingMatrix& embeddings);

  const RowMajorMatrix& matrix() const { return matrix_; }
  std::size_t size() const { return static_cast<std::size_t>(matrix_.rows()); }
  const std::string& source() const { return source_; }

 private:
  RowMajorMatrix matrix_;
  std::string source_;
};

// exp of the Shannon entropy of the eigenvalues of kernel / n; an effective
// number of distinct items in [1, n].
//
// Eigenvalues of the kernel below -1e-8 * n raise KernelInvalidError; smaller
// negatives and values under 1e-10 of the trace are treated as zero.
double VendiScore(const SimilarityKernel& kernel);

// VendiScore of the cosine kernel of `embeddings`, computed from the d x d
// Gram matrix of the unit rows, which has the same nonzero eigenvalues. Cost
// is O(n d^2) instead of O(n^3) with no n x n matrix.
double VendiScoreCosine(const EmbeddingMatrix& embeddings);

enum class NgramDenominator {
  // distinct n-grams / total n-grams (distinct-n)
  kTotalNgrams,
  // distinct n-grams / token vocabulary size
  kVocabulary,
};

// Throws ArgumentError when n < 1 and UndefinedValueError when the corpus has
// no n-grams of that order.
double NgramDiversity(const Corpus& corpus, std::size_t n,
                      NgramDenominator denominator =
                          NgramDenominator::kTotalNgrams);

// Mean Euclidean distance of rows to their centroid. Throws ArgumentError
// when there are fewer than 2 rows.
double EmbeddingDispersion(const EmbeddingMatrix& embeddings);

struct SubsetDiversityReport {
  std::string attribute;
  std::map<std::string, double> proportions;
  double entropy = 0;  // nats
  std::size_t n_labeled = 0;
  std::size_t n_unlabeled = 0;
};

// Label distribution of `attribute` over the records that carry it.
// Unlabeled records are counted, never imputed. Throws ArgumentError if no
// record carries the attribute.
SubsetDiversityReport SubsetDiversity(std::span<const Record> records,
                                      std::string_view attribute);

}  // namespace dmeter

#endif  // DMETER_DIVERSITY_H_
