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

#include "maxcov/exact.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>
#include <string>
#include <vector>

namespace maxcov {

namespace {

using Clock = std::chrono::steady_clock;

class Search {
 public:
  Search(const CoverInstance& inst, const OracleLimits& lim)
      : g_(inst.graph), budget_(inst.budget), deadline_(Clock::now() +
            std::chrono::duration_cast<Clock::duration>(
                std::chrono::duration<double>(lim.time_budget_seconds))) {
    cover_.assign(g_.n_y, 0);
    ys_by_max_.assign(g_.n_x, {});
    for (int a = 0; a < g_.n_y; ++a) {
      if (!g_.adj_y[a].empty()) {
        ys_by_max_[g_.adj_y[a].back()].push_back(a);
        pot_ += g_.y_weights[a];
      }
    }
  }

  OracleResult run() {
    dfs(0);
    OracleResult res;
    res.solution.selected = best_;
    res.solution.cost = best_cost_;
    res.solution.covered_weight = best_value_;
    res.optimal = !timed_out_;
    res.nodes_explored = nodes_;
    return res;
  }

 private:
  // True if some completion of the current prefix (which only appends ids
  // larger than any in it) can be lexicographically smaller than the
  // incumbent. Used to keep exploring ties for the lex-smallest optimum.
  bool lex_can_improve() const {
    const std::size_t n = std::min(path_.size(), best_.size());
    for (std::size_t j = 0; j < n; ++j) {
      if (path_[j] < best_[j]) return true;
      if (path_[j] > best_[j]) return false;
    }
    return path_.size() < best_.size();
  }

  void dfs(int idx) {
    if (timed_out_) return;
    ++nodes_;
    if ((nodes_ & 4095) == 0 && Clock::now() > deadline_) {
      timed_out_ = true;
      return;
    }
    if (value_ > best_value_ ||
        (value_ == best_value_ &&
         std::lexicographical_compare(path_.begin(), path_.end(),
                                      best_.begin(), best_.end()))) {
      best_ = path_;
      best_value_ = value_;
      best_cost_ = cost_;
    }
    if (idx == g_.n_x) return;
    const double bound = value_ + pot_;
    if (bound < best_value_) return;
    if (bound == best_value_ && !lex_can_improve()) return;

    const double c = g_.x_weights[idx];
    if (cost_ + c <= budget_) {
      path_.push_back(idx);
      cost_ += c;
      for (int a : g_.adj_x[idx]) {
        if (cover_[a]++ == 0) {
          value_ += g_.y_weights[a];
          pot_ -= g_.y_weights[a];
        }
      }
      advance(idx);
      dfs(idx + 1);
      retreat(idx);
      for (int a : g_.adj_x[idx]) {
        if (--cover_[a] == 0) {
          value_ -= g_.y_weights[a];
          pot_ += g_.y_weights[a];
        }
      }
      cost_ -= c;
      path_.pop_back();
    }

    advance(idx);
    dfs(idx + 1);
    retreat(idx);
  }

  // Y-nodes whose last chance for coverage is x-node idx drop out of the
  // optimistic potential once branching moves past idx.
  void advance(int idx) {
    for (int a : ys_by_max_[idx])
      if (cover_[a] == 0) pot_ -= g_.y_weights[a];
  }
  void retreat(int idx) {
    for (int a : ys_by_max_[idx])
      if (cover_[a] == 0) pot_ += g_.y_weights[a];
  }

  const BipartiteGraph& g_;
  double budget_;
  Clock::time_point deadline_;
  std::vector<int> cover_;
  std::vector<std::vector<int>> ys_by_max_;
  std::vector<int> path_;
  double cost_ = 0.0;
  double value_ = 0.0;
  double pot_ = 0.0;
  std::vector<int> best_;
  double best_cost_ = 0.0;
  double best_value_ = 0.0;
  std::uint64_t nodes_ = 0;
  bool timed_out_ = false;
};

}  // namespace

OracleResult exact_solve(const CoverInstance& inst, const OracleLimits& lim) {
  if (lim.max_x_nodes < 1 || !(lim.time_budget_seconds > 0))
    throw std::invalid_argument("oracle limits must be positive");
  if (inst.graph.n_x > lim.max_x_nodes)
    throw std::invalid_argument("instance has " + std::to_string(inst.graph.n_x) +
                                " X-nodes, above the oracle cap of " +
                                std::to_string(lim.max_x_nodes));
  if (!(inst.budget >= 0))
    throw std::invalid_argument("budget must be nonnegative");
  return Search(inst, lim).run();
}

}  // namespace maxcov
