// Copyright 2026 The Authors.
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

#ifndef MAXCOV_EXACT_HPP_
#define MAXCOV_EXACT_HPP_

#include <cstdint>

#include "maxcov/graph.hpp"

namespace maxcov {

// Caps for the branch-and-bound search. The node cap refuses instances that
// are too large outright; the time budget turns an overlong search into a
// best-effort answer instead of a hang.
struct OracleLimits {
  int max_x_nodes = 25;
  double time_budget_seconds = 30.0;
};

struct OracleResult {
  CoverSolution solution;
  bool optimal = false;
  std::uint64_t nodes_explored = 0;
};

// Exact optimum by depth-first branch-and-bound over X subsets in ascending
// id order, include branch first. Prunes on the optimistic bound
// (current coverage + weight of Y-nodes still coverable by unbranched X-nodes)
// and on the budget. Among optima, returns the lexicographically smallest
// selected set. Throws std::invalid_argument when n_x exceeds the cap; a
// blown time budget yields the best solution found with optimal = false.
OracleResult exact_solve(const CoverInstance& inst, const OracleLimits& lim = {});

}  // namespace maxcov

#endif  // MAXCOV_EXACT_HPP_
