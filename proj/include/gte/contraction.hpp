// Copyright 2026 The gte Authors.
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

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "gte/tensor.hpp"
#include "gte/trace_graph.hpp"

namespace gte {

/// Contract node `left` with node `right`. Vertices are nodes 0..n-1; the
/// result of step s becomes node n + s.
struct ContractionStep {
  int left = 0;
  int right = 0;
};

struct ContractionPlan {
  enum class Strategy { Single, Greedy, Optimal };

  Strategy strategy = Strategy::Single;
  int vertices = 1;
  int dim = 1;
  std::vector<ContractionStep> steps;
  /// Largest number of open legs of any intermediate node.
  int max_rank = 0;
  /// Sum over steps of dim^(legs touched); self-loop traces excluded.
  double cost = 0.0;
};

/// Raised when an intermediate would exceed the element budget.
class PlanTooLarge : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Largest intermediate (in complex elements) a plan may produce.
inline constexpr std::size_t kMaxIntermediate = std::size_t{1} << 24;

/// Greedy pairing: most shared edges, then smaller result rank, then the
/// lexicographically first pair.
ContractionPlan plan_greedy(const TraceGraph& g, int dim);
/// Cost-optimal pairing tree by dynamic programming over vertex subsets (n <= 6).
ContractionPlan plan_optimal(const TraceGraph& g, int dim);
/// plan_optimal for n <= 6, plan_greedy otherwise.
ContractionPlan plan_contraction(const TraceGraph& g, int dim);

/// Executes a plan on a dense tensor (self-loops are traced out first).
/// Throws PlanTooLarge when an intermediate exceeds kMaxIntermediate.
Complex contract(const TraceGraph& g, const DenseTensor& t, const ContractionPlan& plan);

/// Brute-force oracle: sum over one index per edge of the product of entries.
/// Throws std::invalid_argument beyond 2^32 terms.
Complex direct_sum(const TraceGraph& g, const DenseTensor& t);

}  // namespace gte
