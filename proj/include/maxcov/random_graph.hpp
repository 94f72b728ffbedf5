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

#ifndef MAXCOV_RANDOM_GRAPH_HPP_
#define MAXCOV_RANDOM_GRAPH_HPP_

#include <cstdint>
#include <vector>

#include "maxcov/graph.hpp"

namespace maxcov {

// Samples a simple biregular bipartite graph: every X-node has degree deg_x,
// every Y-node degree deg_y. Configuration-model stub matching; duplicate
// edges are repaired by double-edge swaps, with a full resample after 100
// failed repairs. Requires n_x * deg_x == n_y * deg_y, deg_x <= n_y and
// deg_y <= n_x. Deterministic per seed. All weights are initialized to 1.
BipartiteGraph generate_biregular(int n_x, int n_y, int deg_x, int deg_y,
                                  std::uint64_t seed);

// n integer values uniform on {lo, ..., hi}, stored as doubles.
// Deterministic per seed. Throws std::invalid_argument if lo > hi.
std::vector<double> sample_integer_weights(int n, long lo, long hi,
                                           std::uint64_t seed);

}  // namespace maxcov

#endif  // MAXCOV_RANDOM_GRAPH_HPP_
