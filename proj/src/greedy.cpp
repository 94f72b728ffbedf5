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

#include "maxcov/greedy.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <vector>

namespace maxcov {

namespace {

CoverSolution budgeted_greedy(const CoverInstance& inst, bool divide_by_cost) {
  const BipartiteGraph& g = inst.graph;
  if (!(inst.budget >= 0)) throw std::invalid_argument("budget must be nonnegative");

  std::vector<char> remaining(g.n_x, 1);
  std::vector<char> covered(g.n_y, 0);
  CoverSolution sol;

  for (int round = 0; round < g.n_x; ++round) {
    int best = -1;
    double best_key = -std::numeric_limits<double>::infinity();
    for (int i = 0; i < g.n_x; ++i) {
      if (!remaining[i]) continue;
      double gain = 0.0;
      for (int a : g.adj_x[i])
        if (!covered[a]) gain += g.y_weights[a];
      double key = gain;
      if (divide_by_cost) {
        const double c = g.x_weights[i];
        if (c > 0)
          key = gain / c;
        else
          key = gain > 0 ? std::numeric_limits<double>::infinity() : 0.0;
      }
      if (key > best_key) {  // ascending scan keeps the lowest id on ties
        best_key = key;
        best = i;
      }
    }
    if (sol.cost + g.x_weights[best] <= inst.budget) {
      sol.selected.push_back(best);
      sol.cost += g.x_weights[best];
      for (int a : g.adj_x[best]) {
        if (!covered[a]) {
          covered[a] = 1;
          sol.covered_weight += g.y_weights[a];
        }
      }
    }
    remaining[best] = 0;
  }

  std::sort(sol.selected.begin(), sol.selected.end());
  return sol;
}

}  // namespace

CoverSolution g_greedy(const CoverInstance& inst) {
  return budgeted_greedy(inst, /*divide_by_cost=*/true);
}

CoverSolution simple_greedy(const CoverInstance& inst) {
  return budgeted_greedy(inst, /*divide_by_cost=*/false);
}

}  // namespace maxcov
