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

#ifndef DMETER_TRANSPORT_H_
#define DMETER_TRANSPORT_H_

#include <cstddef>
#include <span>
#include <vector>

#include "dmeter/embedding.h"

namespace dmeter {

struct TransportOptions {
  // Largest support size (per side) solved exactly. Beyond it the solver
  // refuses instead of approximating.
  std::size_t max_support = 2000;
};

struct TransportFlow {
  std::size_t from = 0;
  std::size_t to = 0;
  double mass = 0;
};

struct TransportPlan {
  double cost = 0;
  // Nonzero flows of an optimal basic solution.
  std::vector<TransportFlow> flows;
};

// Exact minimum-cost transportation between `supply` and `demand` under
// `cost` (supply.size() x demand.size()), via the transportation simplex
// (northwest-corner start, MODI potentials, stepping-stone pivots).
//
// Both mass vectors must be non-negative with equal positive totals (within
// 1e-9 relative); entries of zero mass are allowed. Throws ArgumentError on
// shape mismatch, unequal totals, negative or non-finite costs, or supports
// larger than `options.max_support`.
TransportPlan SolveTransport(std::span<const double> supply,
                             std::span<const double> demand,
                             const RowMajorMatrix& cost,
                             const TransportOptions& options = {});

}  // namespace dmeter

#endif  // DMETER_TRANSPORT_H_
