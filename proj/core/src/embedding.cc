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

#include "dmeter/embedding.h"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "dmeter/errors.h"

namespace dmeter {
namespace {

void CheckSameDims(std::span<const double> u, std::span<const double> v) {
  if (u.size() != v.size()) {
    throw ArgumentError("dimension mismatch: " + std::to_string(u.size()) +
                        " vs " + std::to_string(v.size()));
  }
}

std::vector<std::string_view> SplitSpaces(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) fields.push_back(line.substr(i, j - i));
    i = j;
  }
  return fields;
}

template <typename T>
bool ParseNumber(std::string_view s, T& value) {
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  return ec == std::errc() && ptr == s.data() + s.size();
}

}  // namespace

EmbeddingMatrix::EmbeddingMatrix(std::vector<std::string> labels,
                                 RowMajorMatrix values)
    : labels_(std::move(labels)), values_(std::move(values)) {
  if (labels_.empty() || values_.cols() == 0) {
    throw ArgumentError("embedding matrix must have n >= 1 and d >= 1");
  }
  if (static_cast<Eigen::Index>(labels_.size()) != values_.rows()) {
    throw ArgumentError("label count does not match row count");
  }
  if (!values_.allFinite()) {
    throw ArgumentError("embedding matrix contains non-finite values");
  }
  index_.reserve(labels_.size());
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (!index_.emplace(labels_[i], i).second) {
      throw ArgumentError("duplicate embedding label '" + labels_[i] + "'");
    }
  }
}

std::optional<std::size_t> EmbeddingMatrix::Find(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

EmbeddingMatrix ReadEmbeddings(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw FormatError("missing '<n> <d>' header");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  auto header = SplitSpaces(line);
  std::size_t n = 0, d = 0;
  if (header.size() != 2 || !ParseNumber(header[0], n) ||
      !ParseNumber(header[1], d) || n == 0 || d == 0) {
    throw FormatError("header must be '<n> <d>' with positive integers");
  }
  std::vector<std::string> labels;
  labels.reserve(n);
  RowMajorMatrix values(static_cast<Eigen::Index>(n),
                        static_cast<Eigen::Index>(d));
  std::unordered_map<std::string, std::size_t> seen;
  for (std::size_t row = 0; row < n; ++row) {
    const std::string where = "row " + std::to_string(row + 1);
    if (!std::getline(in, line)) {
      throw FormatError(where + ": missing (header declares " +
                        std::to_string(n) + " rows)");
    }
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto fields = SplitSpaces(line);
    if (fields.size() != d + 1) {
      throw FormatError(where + ": expected label and " + std::to_string(d) +
                        " values, found " +
                        std::to_string(fields.empty() ? 0 : fields.size() - 1));
    }
    std::string label(fields[0]);
    if (!seen.emplace(label, row).second) {
      throw FormatError(where + ": duplicate label '" + label + "'");
    }
    for (std::size_t j = 0; j < d; ++j) {
      double v = 0;
      if (!ParseNumber(fields[j + 1], v)) {
        throw FormatError(where + ": cannot parse value '" +
                          std::string(fields[j + 1]) + "'");
      }
      if (!std::isfinite(v)) {
        throw FormatError(where + ": non-finite value");
      }
      values(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(j)) = v;
    }
    labels.push_back(std::move(label));
  }
  return EmbeddingMatrix(std::move(labels), std::move(values));
}

EmbeddingMatrix LoadEmbeddings(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path.string() + "'");
  try {
    return ReadEmbeddings(in);
  } catch (const FormatError& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
}

void WriteEmbeddings(std::ostream& out, const EmbeddingMatrix& matrix) {
  out << matrix.rows() << ' ' << matrix.dims() << '\n';
  std::array<char, 32> buf{};
  for (std::size_t i = 0; i < matrix.rows(); ++i) {
    out << matrix.labels()[i];
    for (double v : matrix.Row(i)) {
      auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
      out << ' ' << std::string_view(buf.data(), ptr - buf.data());
    }
    out << '\n';
  }
}

double Euclidean(std::span<const double> u, std::span<const double> v) {
  CheckSameDims(u, v);
  double sum = 0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    const double diff = u[i] - v[i];
    sum += diff * diff;
  }
  return std::sqrt(sum);
}

double CosineSimilarity(std::span<const double> u, std::span<const double> v) {
  CheckSameDims(u, v);
  double dot = 0, uu = 0, vv = 0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    dot += u[i] * v[i];
    uu += u[i] * u[i];
    vv += v[i] * v[i];
  }
  if (uu == 0 || vv == 0) {
    throw UndefinedValueError("cosine similarity of a zero-norm vector");
  }
  return std::clamp(dot / (std::sqrt(uu) * std::sqrt(vv)), -1.0, 1.0);
}

}  // namespace dmeter
