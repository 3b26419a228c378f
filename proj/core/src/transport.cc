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

#include "dmeter/transport.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "dmeter/errors.h"

namespace dmeter {
namespace {

struct BasicCell {
  std::size_t row;
  std::size_t col;
  double flow;
};

// Switch from Dantzig pricing to Bland's rule after this many consecutive
// zero-step pivots.
constexpr int kDegenerateRunLimit = 50;

class TransportSimplex {
 public:
  TransportSimplex(std::vector<double> supply, std::vector<double> demand,
                   RowMajorMatrix cost)
      : m_(supply.size()),
        n_(demand.size()),
        supply_(std::move(supply)),
        demand_(std::move(demand)),
        cost_(std::move(cost)) {
    const double max_cost = cost_.size() > 0 ? cost_.maxCoeff() : 0.0;
    tolerance_ = 1e-12 * std::max(1.0, max_cost);
  }

  std::vector<BasicCell> Solve() {
    NorthwestCorner();
    int degenerate_run = 0;
    const std::size_t max_iterations = 100 * (m_ + n_) * (m_ + n_) + 1000;
    for (std::size_t iter = 0; iter < max_iterations; ++iter) {
      ComputePotentials();
      const bool bland = degenerate_run >= kDegenerateRunLimit;
      std::size_t enter_row = 0, enter_col = 0;
      if (!FindEntering(bland, enter_row, enter_col)) return basis_;
      const double step = Pivot(enter_row, enter_col, bland);
      degenerate_run = step > 0 ? 0 : degenerate_run + 1;
    }
    throw Error("transportation simplex did not converge");
  }

 private:
  void NorthwestCorner() {
    std::vector<double> s = supply_, d = demand_;
    std::size_t i = 0, j = 0;
    basis_.reserve(m_ + n_ - 1);
    while (true) {
      const double f = std::min(s[i], d[j]);
      basis_.push_back({i, j, f});
      s[i] -= f;
      d[j] -= f;
      if (i == m_ - 1 && j == n_ - 1) break;
      // Advance exactly one index per cell so the basis stays a spanning
      // tree of m + n - 1 cells even under degeneracy.
      if (j == n_ - 1 || (i < m_ - 1 && s[i] <= d[j])) {
        ++i;
      } else {
        ++j;
      }
    }
  }

  void BuildAdjacency() {
    adjacency_.assign(m_ + n_, {});
    for (std::size_t k = 0; k < basis_.size(); ++k) {
      adjacency_[basis_[k].row].push_back(k);
      adjacency_[m_ + basis_[k].col].push_back(k);
    }
  }

  std::size_t Other(std::size_t node, const BasicCell& cell) const {
    return node < m_ ? m_ + cell.col : cell.row;
  }

  void ComputePotentials() {
    BuildAdjacency();
    potential_.assign(m_ + n_, 0.0);
    std::vector<bool> seen(m_ + n_, false);
    std::vector<std::size_t> stack = {0};
    seen[0] = true;
    while (!stack.empty()) {
      const std::size_t node = stack.back();
      stack.pop_back();
      for (std::size_t k : adjacency_[node]) {
        const BasicCell& cell = basis_[k];
        const std::size_t next = Other(node, cell);
        if (seen[next]) continue;
        seen[next] = true;
        // u_row + v_col = cost(row, col) on every basic cell.
        potential_[next] = Cost(cell.row, cell.col) - potential_[node];
        stack.push_back(next);
      }
    }
  }

  double Cost(std::size_t i, std::size_t j) const {
    return cost_(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
  }

  bool FindEntering(bool bland, std::size_t& row, std::size_t& col) const {
    double best = -tolerance_;
    bool found = false;
    for (std::size_t i = 0; i < m_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) {
        const double reduced = Cost(i, j) - potential_[i] - potential_[m_ + j];
        if (reduced < best) {
          row = i;
          col = j;
          found = true;
          if (bland) return true;
          best = reduced;
        }
      }
    }
    return found;
  }

  // Adds (row, col) to the basis, pushes flow around the unique cycle, and
  // drops the blocking cell. Returns the step length.
  double Pivot(std::size_t row, std::size_t col, bool bland) {
    // Path in the tree from the entering row node to the entering column.
    std::vector<std::size_t> parent_cell(m_ + n_, kNone);
    std::vector<bool> seen(m_ + n_, false);
    std::vector<std::size_t> stack = {row};
    seen[row] = true;
    const std::size_t target = m_ + col;
    while (!stack.empty() && !seen[target]) {
      const std::size_t node = stack.back();
      stack.pop_back();
      for (std::size_t k : adjacency_[node]) {
        const std::size_t next = Other(node, basis_[k]);
        if (seen[next]) continue;
        seen[next] = true;
        parent_cell[next] = k;
        stack.push_back(next);
      }
    }
    // Walk back from the column: edges alternate -, +, -, ...
    std::vector<std::size_t> minus, plus;
    std::size_t node = target;
    bool is_minus = true;
    while (node != row) {
      const std::size_t k = parent_cell[node];
      (is_minus ? minus : plus).push_back(k);
      is_minus = !is_minus;
      node = Other(node, basis_[k]);
    }

    std::size_t leaving = kNone;
    double theta = std::numeric_limits<double>::infinity();
    for (std::size_t k : minus) {
      const double f = basis_[k].flow;
      const bool better =
          f < theta ||
          (bland && f == theta && CellIndex(basis_[k]) < CellIndex(basis_[leaving]));
      if (better) {
        theta = f;
        leaving = k;
      }
    }
    for (std::size_t k : minus) basis_[k].flow = std::max(0.0, basis_[k].flow - theta);
    for (std::size_t k : plus) basis_[k].flow += theta;
    basis_[leaving] = {row, col, theta};
    return theta;
  }

  std::size_t CellIndex(const BasicCell& c) const { return c.row * n_ + c.col; }

  static constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

  std::size_t m_, n_;
  std::vector<double> supply_, demand_;
  RowMajorMatrix cost_;
  double tolerance_ = 0;
  std::vector<BasicCell> basis_;
  std::vector<std::vector<std::size_t>> adjacency_;
  std::vector<double> potential_;
};

void CheckMasses(std::span<const double> masses, const char* side) {
  for (double v : masses) {
    if (!std::isfinite(v) || v < 0) {
      throw ArgumentError(std::string(side) +
                          " masses must be finite and non-negative");
    }
  }
}

}  // namespace

TransportPlan SolveTransport(std::span<const double> supply,
                             std::span<const double> demand,
                             const RowMajorMatrix& cost,
                             const TransportOptions& options) {
  if (supply.empty() || demand.empty()) {
    throw ArgumentError("transport supports must be non-empty");
  }
  if (supply.size() > options.max_support ||
      demand.size() > options.max_support) {
    throw ArgumentError("transport support exceeds cap of " +
                        std::to_string(options.max_support) + " points");
  }
  if (cost.rows() != static_cast<Eigen::Index>(supply.size()) ||
      cost.cols() != static_cast<Eigen::Index>(demand.size())) {
    throw ArgumentError("cost matrix shape does not match supports");
  }
  CheckMasses(supply, "supply");
  CheckMasses(demand, "demand");
  if (!cost.allFinite() || (cost.array() < 0).any()) {
    throw ArgumentError("ground costs must be finite and non-negative");
  }
  const double total_supply = std::accumulate(supply.begin(), supply.end(), 0.0);
  const double total_demand = std::accumulate(demand.begin(), demand.end(), 0.0);
  if (total_supply <= 0 ||
      std::abs(total_supply - total_demand) >
          1e-9 * std::max(total_supply, total_demand)) {
    throw ArgumentError("supply and demand totals must be equal and positive");
  }

  // Zero-mass points never carry flow; solve on the reduced problem.
  std::vector<std::size_t> rows, cols;
  for (std::size_t i = 0; i < supply.size(); ++i) {
    if (supply[i] > 0) rows.push_back(i);
  }
  for (std::size_t j = 0; j < demand.size(); ++j) {
    if (demand[j] > 0) cols.push_back(j);
  }
  std::vector<double> s(rows.size()), d(cols.size());
  RowMajorMatrix c(static_cast<Eigen::Index>(rows.size()),
                   static_cast<Eigen::Index>(cols.size()));
  for (std::size_t a = 0; a < rows.size(); ++a) {
    s[a] = supply[rows[a]];
    for (std::size_t b = 0; b < cols.size(); ++b) {
      c(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) =
          cost(static_cast<Eigen::Index>(rows[a]),
               static_cast<Eigen::Index>(cols[b]));
    }
  }
  const double scale = total_supply / total_demand;
  for (std::size_t b = 0; b < cols.size(); ++b) d[b] = demand[cols[b]] * scale;

  TransportSimplex simplex(std::move(s), std::move(d), std::move(c));
  TransportPlan plan;
  for (const BasicCell& cell : simplex.Solve()) {
    if (cell.flow <= 0) continue;
    const std::size_t from = rows[cell.row], to = cols[cell.col];
    plan.flows.push_back({from, to, cell.flow});
    plan.cost += cell.flow * cost(static_cast<Eigen::Index>(from),
                                  static_cast<Eigen::Index>(to));
  }
  std::sort(plan.flows.begin(), plan.flows.end(),
            [](const TransportFlow& a, const TransportFlow& b) {
              return a.from != b.from ? a.from < b.from : a.to < b.to;
            });
  return plan;
}

}  // namespace dmeter
