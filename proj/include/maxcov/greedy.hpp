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

#ifndef MAXCOV_GREEDY_HPP_
#define MAXCOV_GREEDY_HPP_

#include "maxcov/graph.hpp"

namespace maxcov {

// Cost-aware greedy: repeatedly take the remaining X-node maximizing
// (uncovered adjacent y-weight) / cost, keep it only while the budget is
// respected, and drop it from the candidate pool either way. Ties go to the
// lowest node id; zero-cost nodes with positive gain rank as +infinity.
CoverSolution g_greedy(const CoverInstance& inst);

// Same loop ranked by raw uncovered adjacent y-weight, ignoring cost.
CoverSolution simple_greedy(const CoverInstance& inst);

}  // namespace maxcov

#endif  // MAXCOV_GREEDY_HPP_
