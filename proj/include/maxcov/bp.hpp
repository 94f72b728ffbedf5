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

#ifndef MAXCOV_BP_HPP_
#define MAXCOV_BP_HPP_

#include <limits>
#include <vector>

#include "maxcov/graph.hpp"

namespace maxcov {

struct BPParams {
  double beta = 1.0;             // inverse temperature, > 0
  double mu = 0.0;               // per-unit-cost selection penalty
  int iterations = 150;          // sweep count, >= 1
  double damping = 0.0;          // in [0, 1); new = (1-d)*update + d*old
  double convergence_tol = 1e-6; // diagnostic threshold for last_max_delta
};

// Throws std::invalid_argument when a field is out of range.
void validate_params(const BPParams& p);

// Directed-edge layout shared by both message families. Edge e runs between
// edge_x[e] and edge_y[e]; edges are grouped by X-node in adjacency order.
struct EdgeIndex {
  std::vector<int> x_offset;  // size n_x + 1
  std::vector<int> edge_x;    // size |E|
  std::vector<int> edge_y;    // size |E|
  std::vector<int> y_offset;  // size n_y + 1
  std::vector<int> y_edges;   // edge ids grouped by Y-node

  static EdgeIndex build(const BipartiteGraph& g);
  std::size_t edge_count() const { return edge_x.size(); }
  // Edge id for (x, y); throws std::out_of_range if absent.
  int edge_of(int x, int y) const;
};

// Cavity messages on every directed edge: h[e] flows X->Y, h_hat[e] flows
// Y->X along the same undirected edge.
struct BeliefState {
  EdgeIndex edges;
  std::vector<double> h;
  std::vector<double> h_hat;
  int iteration_count = 0;
  double last_max_delta = std::numeric_limits<double>::infinity();

  double h_message(int x, int y) const { return h[edges.edge_of(x, y)]; }
  double h_hat_message(int x, int y) const { return h_hat[edges.edge_of(x, y)]; }
};

// All messages start at zero.
BeliefState init_beliefs(const BipartiteGraph& g);

// One synchronous sweep: every h from the current h_hat, then every h_hat
// from the new h. Updates run in log domain; a non-finite message raises
// std::runtime_error naming the edge. Records last_max_delta and increments
// iteration_count.
void bp_sweep(const BipartiteGraph& g, const BPParams& p, BeliefState& s);

struct LocalFields {
  std::vector<double> h_node;    // per X-node
  std::vector<double> eta_node;  // per Y-node
};

LocalFields bp_local_fields(const BipartiteGraph& g, const BPParams& p,
                            const BeliefState& s);

// Selection probabilities p = sigmoid(beta * field) per node on both sides.
struct Marginals {
  std::vector<double> p_x;
  std::vector<double> p_y;
};

Marginals marginals(const LocalFields& fields, double beta);

struct BPSolveResult {
  CoverSolution solution;
  LocalFields fields;
  int iteration_count = 0;
  double last_max_delta = 0.0;
};

// Zero-init messages, `iterations` sweeps, fields computed once, then a
// budgeted pass over X-nodes ranked by h_i / c_i (zero-cost nodes rank as
// +infinity, ties by lowest id).
BPSolveResult bp_solve(const CoverInstance& inst, const BPParams& p);

}  // namespace maxcov

#endif  // MAXCOV_BP_HPP_
