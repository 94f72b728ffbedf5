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

#ifndef MAXCOV_GRAPH_HPP_
#define MAXCOV_GRAPH_HPP_

#include <filesystem>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace maxcov {

// Sparse bipartite graph with per-node weights. X-nodes carry a selection
// cost, Y-nodes carry a coverage weight. Node ids are dense and 0-based;
// adjacency lists are kept sorted. Instances are treated as immutable after
// construction and are safe to share across threads.
struct BipartiteGraph {
  int n_x = 0;
  int n_y = 0;
  std::vector<double> x_weights;            // cost per X-node, >= 0
  std::vector<double> y_weights;            // weight per Y-node, >= 0
  std::vector<std::vector<int>> adj_x;      // per X-node, sorted Y neighbors
  std::vector<std::vector<int>> adj_y;      // per Y-node, sorted X neighbors

  std::size_t edge_count() const;

  bool operator==(const BipartiteGraph&) const = default;
};

// A coverage problem: pick X-nodes whose total cost stays within `budget`,
// maximizing the total weight of Y-nodes adjacent to the picks.
struct CoverInstance {
  BipartiteGraph graph;
  double budget = 0.0;
};

struct CoverSolution {
  std::vector<int> selected;     // sorted X-node ids
  double cost = 0.0;             // sum of x_weights over selected
  double covered_weight = 0.0;   // sum of y_weights over covered Y-nodes

  bool operator==(const CoverSolution&) const = default;
};

// Builds a graph from an edge list, sorting adjacencies. Throws
// std::invalid_argument on out-of-range ids, duplicate edges, weight-size
// mismatches, or negative weights.
BipartiteGraph make_bipartite_graph(int n_x, int n_y,
                                    std::vector<double> x_weights,
                                    std::vector<double> y_weights,
                                    const std::vector<std::pair<int, int>>& edges);

// Returns every invariant violation found; an empty list means the graph is
// valid. Never throws.
std::vector<std::string> validate_graph(const BipartiteGraph& g);

// Total y-weight adjacent to at least one selected X-node; each Y-node
// counted once. Throws std::out_of_range on an invalid id.
double covered_weight(const BipartiteGraph& g, std::span<const int> selected);

// Sum of x_weights over `selected`. Throws std::out_of_range on an invalid id.
double selection_cost(const BipartiteGraph& g, std::span<const int> selected);

// JSON file format: object with n_x, n_y, x_weights, y_weights and an `edges`
// array of [x_id, y_id] pairs. Duplicate pairs are rejected on load.
BipartiteGraph load_graph(const std::filesystem::path& path);
void store_graph(const BipartiteGraph& g, const std::filesystem::path& path);

std::string graph_to_json_string(const BipartiteGraph& g);
BipartiteGraph graph_from_json_string(const std::string& text,
                                      const std::string& origin = "<string>");

}  // namespace maxcov

#endif  // MAXCOV_GRAPH_HPP_
