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

#ifndef DMETER_EMBEDDING_H_
#define DMETER_EMBEDDING_H_

#include <Eigen/Core>

#include <cstddef>
#include <filesystem>
#include <istream>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace dmeter {

using RowMajorMatrix =
    Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

// n x d matrix of finite reals with unique row labels (tokens or record ids).
class EmbeddingMatrix {
 public:
  // Throws ArgumentError if labels are not unique, their count differs from
  // the row count, the matrix is empty, or any entry is non-finite.
  EmbeddingMatrix(std::vector<std::string> labels, RowMajorMatrix values);

  std::size_t rows() const { return labels_.size(); }
  std::size_t dims() const { return static_cast<std::size_t>(values_.cols()); }
  const std::vector<std::string>& labels() const { return labels_; }
  const RowMajorMatrix& values() const { return values_; }

  std::span<const double> Row(std::size_t i) const {
    return {values_.data() + i * dims(), dims()};
  }
  std::optional<std::size_t> Find(std::string_view label) const;

 private:
  std::vector<std::string> labels_;
  RowMajorMatrix values_;
  std::unordered_map<std::string, std::size_t> index_;
};

// text-vec: first line "<n> <d>", then n lines "<label> <v1> ... <vd>".
// Throws IoError if the file cannot be opened and FormatError (with a 1-based
// row number) on short files, row-length mismatches, duplicate labels or
// non-finite values.
EmbeddingMatrix LoadEmbeddings(const std::filesystem::path& path);
EmbeddingMatrix ReadEmbeddings(std::istream& in);
// Writes shortest round-trip decimal floats, so Read(Write(m)) == m bitwise.
void WriteEmbeddings(std::ostream& out, const EmbeddingMatrix& matrix);

// Throws ArgumentError on dimension mismatch.
double Euclidean(std::span<const double> u, std::span<const double> v);
// Clamped to [-1, 1]. Throws ArgumentError on dimension mismatch and
// UndefinedValueError if either vector has zero norm.
double CosineSimilarity(std::span<const double> u, std::span<const double> v);

}  // namespace dmeter

#endif  // DMETER_EMBEDDING_H_
