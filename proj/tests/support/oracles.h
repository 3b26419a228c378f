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

#ifndef DMETER_TESTS_SUPPORT_ORACLES_H_
#define DMETER_TESTS_SUPPORT_ORACLES_H_

// Slow, direct reimplementations used as references in tests. None of these
// call into the library under test.

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace dmeter::testing {

using Matrix = std::vector<std::vector<double>>;

// Plain three-way recursion, exponential; keep inputs short.
std::size_t LevenshteinRecursive(std::u32string_view a, std::u32string_view b);

// Minimum transport cost over every basic feasible solution, found by
// enumerating all (m + n - 1)-cell bases. Small supports only.
double TransportByEnumeration(const std::vector<double>& supply,
                              const std::vector<double>& demand,
                              const Matrix& cost);

// Per-row mean similarity to the k most similar other rows, from a full sort
// with ties broken by index.
std::vector<double> KnnDensityBruteForce(const Matrix& rows, std::size_t k,
                                         bool cosine);

struct NaiveStats {
  double mean = 0;
  double median = 0;
  double variance = 0;  // n - 1
  double skewness = 0;  // G1
  double excess_kurtosis = 0;  // G2
};

NaiveStats NaiveSummary(std::vector<double> values);

// n-grams by sliding a window over each document; keys are space-joined.
std::map<std::string, std::uint64_t> SlidingWindowNgrams(
    const std::vector<std::vector<std::string>>& docs, std::size_t n);

struct PairwiseDedup {
  std::size_t n_distinct = 0;
  std::size_t duplicate_clusters = 0;
  std::size_t excess_duplicates = 0;
  std::vector<std::size_t> sizes;  // descending
};

// Groups keys by comparing every pair and merging with union-find.
PairwiseDedup PairwiseDuplicates(const std::vector<std::string>& keys);

// ASCII-only fold-and-collapse: lowercase, single spaces, trimmed.
std::string AsciiFoldCollapse(std::string_view text);

// Eigenvalues of a symmetric matrix by cyclic Jacobi rotations.
std::vector<double> JacobiEigenvalues(Matrix a);

// nPMI from raw context counts with additive smoothing on the presence
// probabilities: p = (count + alpha) / (n + 2 alpha).
double NpmiFromCounts(double n_xy, double n_x, double n_y, double n,
                      double alpha);

// Fractional ranks (ties share the mean rank), 1-based.
std::vector<double> NaiveRanks(const std::vector<double>& values);

double NaivePearson(const std::vector<double>& xs,
                    const std::vector<double>& ys);

}  // namespace dmeter::testing

#endif  // DMETER_TESTS_SUPPORT_ORACLES_H_
