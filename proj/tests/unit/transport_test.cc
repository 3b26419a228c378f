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

#include <gtest/gtest.h>

#include <cmath>
#include <numeric>
#include <vector>

#include "dmeter/errors.h"
#include "support/generators.h"
#include "support/oracles.h"

namespace dmeter {
namespace {

RowMajorMatrix ToEigen(const testing::Matrix& m) {
  RowMajorMatrix out(m.size(), m[0].size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m[i].size(); ++j) out(i, j) = m[i][j];
  }
  return out;
}

// Random mass vector of length n, summing to 1, with some exact zeros.
std::vector<double> RandomMasses(testing::Rng& rng, std::size_t n) {
  std::vector<double> w(n);
  for (double& x : w) {
    x = testing::UniformIndex(rng, 0, 4) == 0 ? 0.0
                                              : testing::Uniform(rng, 0.1, 1);
  }
  if (std::accumulate(w.begin(), w.end(), 0.0) == 0) w[0] = 1;
  const double sum = std::accumulate(w.begin(), w.end(), 0.0);
  for (double& x : w) x /= sum;
  return w;
}

void ExpectFeasible(const TransportPlan& plan, const std::vector<double>& s,
                    const std::vector<double>& d, const RowMajorMatrix& cost) {
  std::vector<double> rows(s.size(), 0.0), cols(d.size(), 0.0);
  double total = 0;
  for (const TransportFlow& f : plan.flows) {
    EXPECT_GE(f.mass, 0.0);
    rows[f.from] += f.mass;
    cols[f.to] += f.mass;
    total += f.mass * cost(f.from, f.to);
  }
  for (std::size_t i = 0; i < s.size(); ++i) EXPECT_NEAR(rows[i], s[i], 1e-9);
  for (std::size_t j = 0; j < d.size(); ++j) EXPECT_NEAR(cols[j], d[j], 1e-9);
  EXPECT_NEAR(total, plan.cost, 1e-9);
}

TEST(TransportTest, MatchesBasisEnumerationOnSmallInstances) {
  testing::Rng rng(61);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t m = testing::UniformIndex(rng, 1, 4);
    const std::size_t n = testing::UniformIndex(rng, 1, 4);
    const auto supply = RandomMasses(rng, m);
    const auto demand = RandomMasses(rng, n);
    testing::Matrix cost(m, std::vector<double>(n));
    for (auto& row : cost) {
      for (double& c : row) {
        // Integer costs create ties and degenerate pivots.
        c = trial % 2 ? testing::Uniform(rng, 0, 10)
                      : static_cast<double>(testing::UniformIndex(rng, 0, 3));
      }
    }
    const RowMajorMatrix eigen_cost = ToEigen(cost);
    const TransportPlan plan = SolveTransport(supply, demand, eigen_cost);
    EXPECT_NEAR(plan.cost,
                testing::TransportByEnumeration(supply, demand, cost), 1e-9)
        << "trial " << trial;
    ExpectFeasible(plan, supply, demand, eigen_cost);
  }
}

// On a line with cost |i - j| the optimum is the L1 distance between CDFs.
TEST(TransportTest, LineCostMatchesCdfDistance) {
  testing::Rng rng(62);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = testing::UniformIndex(rng, 2, 60);
    const auto p = RandomMasses(rng, n);
    const auto q = RandomMasses(rng, n);
    RowMajorMatrix cost(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        cost(i, j) = std::abs(static_cast<double>(i) - static_cast<double>(j));
      }
    }
    double cdf_gap = 0, fp = 0, fq = 0;
    for (std::size_t i = 0; i + 1 < n; ++i) {
      fp += p[i];
      fq += q[i];
      cdf_gap += std::abs(fp - fq);
    }
    const TransportPlan plan = SolveTransport(p, q, cost);
    EXPECT_NEAR(plan.cost, cdf_gap, 1e-9);
    ExpectFeasible(plan, p, q, cost);
  }
}

TEST(TransportTest, Validation) {
  const std::vector<double> a = {0.5, 0.5};
  const std::vector<double> b = {1.0};
  RowMajorMatrix cost(2, 1);
  cost << 1, 2;
  EXPECT_NEAR(SolveTransport(a, b, cost).cost, 1.5, 1e-12);
  EXPECT_THROW(SolveTransport(a, std::vector<double>{0.9}, cost),
               ArgumentError);
  EXPECT_THROW(SolveTransport(b, a, cost), ArgumentError);
  RowMajorMatrix bad = cost;
  bad(0, 0) = -1;
  EXPECT_THROW(SolveTransport(a, b, bad), ArgumentError);
  bad(0, 0) = std::nan("");
  EXPECT_THROW(SolveTransport(a, b, bad), ArgumentError);
  EXPECT_THROW(SolveTransport(std::vector<double>{-0.5, 1.5}, b, cost),
               ArgumentError);
  TransportOptions tight;
  tight.max_support = 1;
  EXPECT_THROW(SolveTransport(a, b, cost, tight), ArgumentError);
}

}  // namespace
}  // namespace dmeter
