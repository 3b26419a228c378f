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

#include "dmeter/diversity.h"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <numeric>
#include <unordered_set>
#include <vector>

#include "dmeter/errors.h"

namespace dmeter {
namespace {

void RequireNonEmpty(const FrequencyTable& table) {
  if (table.total() == 0) throw ArgumentError("empty frequency table");
}

}  // namespace

double GiniDiversity(const FrequencyTable& table) {
  RequireNonEmpty(table);
  const double total = static_cast<double>(table.total());
  double sum_sq = 0;
  for (const auto& [item, count] : table.SortedByItem()) {
    const double p = static_cast<double>(count) / total;
    sum_sq += p * p;
  }
  return 1.0 - sum_sq;
}

double ShannonEntropy(std::span<const double> weights) {
  const double total = std::accumulate(weights.begin(), weights.end(), 0.0);
  if (!(total > 0)) throw ArgumentError("entropy of an empty distribution");
  double h = 0;
  for (double w : weights) {
    if (w < 0) throw ArgumentError("negative weight");
    if (w == 0) continue;
    const double p = w / total;
    h -= p * std::log(p);
  }
  return std::max(0.0, h);
}

double ShannonEntropy(const FrequencyTable& table) {
  RequireNonEmpty(table);
  std::vector<double> weights;
  weights.reserve(table.size());
  for (const auto& [item, count] : table.SortedByItem()) {
    weights.push_back(static_cast<double>(count));
  }
  return ShannonEntropy(weights);
}

SimilarityKernel::SimilarityKernel(RowMajorMatrix matrix, std::string source)
    : matrix_(std::move(matrix)), source_(std::move(source)) {
  constexpr double kTol = 1e-9;
  if (matrix_.rows() != matrix_.cols() || matrix_.rows() == 0) {
    throw ArgumentError("kernel must be a non-empty square matrix");
  }
  if (!matrix_.allFinite()) throw ArgumentError("kernel has non-finite entries");
  const Eigen::Index n = matrix_.rows();
  for (Eigen::Index i = 0; i < n; ++i) {
    if (std::abs(matrix_(i, i) - 1.0) > kTol) {
      throw ArgumentError("kernel diagonal must be 1");
    }
    for (Eigen::Index j = 0; j < n; ++j) {
      if (std::abs(matrix_(i, j) - matrix_(j, i)) > kTol) {
        throw ArgumentError("kernel is not symmetric");
      }
      if (std::abs(matrix_(i, j)) > 1.0 + kTol) {
        throw ArgumentError("kernel entries must lie in [-1, 1]");
      }
    }
  }
}

SimilarityKernel SimilarityKernel::Cosine(const EmbeddingMatrix& embeddings) {
  const std::size_t n = embeddings.rows();
  RowMajorMatrix k(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < n; ++i) {
    const auto a = static_cast<Eigen::Index>(i);
    k(a, a) = 1.0;
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto b = static_cast<Eigen::Index>(j);
      k(a, b) = k(b, a) = CosineSimilarity(embeddings.Row(i), embeddings.Row(j));
    }
  }
  return SimilarityKernel(std::move(k), "cosine");
}

namespace {

// exp(entropy) of eig / n, where `matrix` shares its nonzero spectrum with an
// n x n kernel of unit diagonal.
double VendiFromSpectrum(const Eigen::MatrixXd& matrix, double n) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(
      matrix, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw KernelInvalidError("eigendecomposition failed");
  }
  const Eigen::VectorXd& eigenvalues = solver.eigenvalues();
  // The normalized kernel has unit trace.
  const double floor = 1e-10;
  std::vector<double> lambdas;
  lambdas.reserve(static_cast<std::size_t>(eigenvalues.size()));
  for (Eigen::Index i = 0; i < eigenvalues.size(); ++i) {
    const double value = eigenvalues(i);
    if (value < -1e-8 * n) {
      throw KernelInvalidError("kernel is not positive semidefinite (eigenvalue " +
                               std::to_string(value) + ")");
    }
    const double lambda = value / n;
    lambdas.push_back(lambda < floor ? 0.0 : lambda);
  }
  return std::exp(ShannonEntropy(lambdas));
}

}  // namespace

double VendiScore(const SimilarityKernel& kernel) {
  return VendiFromSpectrum(kernel.matrix(), static_cast<double>(kernel.size()));
}

double VendiScoreCosine(const EmbeddingMatrix& embeddings) {
  const std::size_t n = embeddings.rows();
  if (embeddings.dims() >= n) {
    return VendiScore(SimilarityKernel::Cosine(embeddings));
  }
  RowMajorMatrix unit = embeddings.values();
  for (Eigen::Index i = 0; i < unit.rows(); ++i) {
    const double norm = unit.row(i).norm();
    if (norm == 0) {
      throw UndefinedValueError("cosine similarity of a zero-norm vector");
    }
    unit.row(i) /= norm;
  }
  // U^T U is d x d and has the same nonzero eigenvalues as U U^T.
  const Eigen::MatrixXd gram = unit.transpose() * unit;
  return VendiFromSpectrum(gram, static_cast<double>(n));
}

double NgramDiversity(const Corpus& corpus, std::size_t n,
                      NgramDenominator denominator) {
  const FrequencyTable ngrams = Ngrams(corpus, n);
  if (ngrams.total() == 0) {
    throw UndefinedValueError("corpus has no " + std::to_string(n) + "-grams");
  }
  const double distinct = static_cast<double>(ngrams.size());
  if (denominator == NgramDenominator::kVocabulary) {
    return distinct / static_cast<double>(corpus.vocabulary().size());
  }
  return distinct / static_cast<double>(ngrams.total());
}

double EmbeddingDispersion(const EmbeddingMatrix& embeddings) {
  if (embeddings.rows() < 2) {
    throw ArgumentError("embedding dispersion needs at least 2 rows");
  }
  const RowMajorMatrix& x = embeddings.values();
  const Eigen::RowVectorXd centroid = x.colwise().mean();
  return (x.rowwise() - centroid).rowwise().norm().mean();
}

SubsetDiversityReport SubsetDiversity(std::span<const Record> records,
                                      std::string_view attribute) {
  SubsetDiversityReport report;
  report.attribute = std::string(attribute);
  std::map<std::string, std::size_t> counts;
  for (const Record& r : records) {
    auto it = r.attributes.find(report.attribute);
    if (it == r.attributes.end()) {
      ++report.n_unlabeled;
    } else {
      ++counts[it->second];
      ++report.n_labeled;
    }
  }
  if (report.n_labeled == 0) {
    throw ArgumentError("no record carries attribute '" + report.attribute +
                        "'");
  }
  std::vector<double> weights;
  for (const auto& [label, count] : counts) {
    report.proportions[label] =
        static_cast<double>(count) / static_cast<double>(report.n_labeled);
    weights.push_back(static_cast<double>(count));
  }
  report.entropy = ShannonEntropy(weights);
  return report;
}

}  // namespace dmeter
