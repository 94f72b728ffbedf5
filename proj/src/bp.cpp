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

#include "maxcov/bp.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "maxcov/mathutil.hpp"

namespace maxcov {

void validate_params(const BPParams& p) {
  if (!(p.beta > 0)) throw std::invalid_argument("beta must be positive");
  if (p.iterations < 1) throw std::invalid_argument("iterations must be >= 1");
  if (!(p.damping >= 0 && p.damping < 1))
    throw std::invalid_argument("damping must lie in [0, 1)");
  if (!(p.convergence_tol > 0))
    throw std::invalid_argument("convergence_tol must be positive");
}

EdgeIndex EdgeIndex::build(const BipartiteGraph& g) {
  EdgeIndex idx;
  idx.x_offset.assign(g.n_x + 1, 0);
  for (int i = 0; i < g.n_x; ++i)
    idx.x_offset[i + 1] = idx.x_offset[i] + static_cast<int>(g.adj_x[i].size());
  const int m = idx.x_offset[g.n_x];
  idx.edge_x.resize(m);
  idx.edge_y.resize(m);
  for (int i = 0; i < g.n_x; ++i) {
    int e = idx.x_offset[i];
    for (int a : g.adj_x[i]) {
      idx.edge_x[e] = i;
      idx.edge_y[e] = a;
      ++e;
    }
  }
  idx.y_offset.assign(g.n_y + 1, 0);
  for (int e = 0; e < m; ++e) ++idx.y_offset[idx.edge_y[e] + 1];
  for (int a = 0; a < g.n_y; ++a) idx.y_offset[a + 1] += idx.y_offset[a];
  idx.y_edges.resize(m);
  std::vector<int> cursor(idx.y_offset.begin(), idx.y_offset.end() - 1);
  for (int e = 0; e < m; ++e) idx.y_edges[cursor[idx.edge_y[e]]++] = e;
  return idx;
}

int EdgeIndex::edge_of(int x, int y) const {
  if (x < 0 || x + 1 >= static_cast<int>(x_offset.size()))
    throw std::out_of_range("X-node id " + std::to_string(x) + " out of range");
  const int lo = x_offset[x], hi = x_offset[x + 1];
  auto begin = edge_y.begin() + lo, end = edge_y.begin() + hi;
  auto it = std::lower_bound(begin, end, y);
  if (it == end || *it != y)
    throw std::out_of_range("no edge (" + std::to_string(x) + ", " +
                            std::to_string(y) + ")");
  return lo + static_cast<int>(it - begin);
}

BeliefState init_beliefs(const BipartiteGraph& g) {
  BeliefState s;
  s.edges = EdgeIndex::build(g);
  s.h.assign(s.edges.edge_count(), 0.0);
  s.h_hat.assign(s.edges.edge_count(), 0.0);
  return s;
}

namespace {

void check_state(const BipartiteGraph& g, const BeliefState& s) {
  if (static_cast<int>(s.edges.x_offset.size()) != g.n_x + 1 ||
      static_cast<int>(s.edges.y_offset.size()) != g.n_y + 1 ||
      s.edges.edge_count() != g.edge_count() ||
      s.h.size() != s.edges.edge_count() || s.h_hat.size() != s.edges.edge_count())
    throw std::invalid_argument("belief state does not match the graph edge set");
}

[[noreturn]] void nonfinite_edge_error(const char* family, int x, int y) {
  throw std::runtime_error(std::string("non-finite ") + family +
                           " message on edge (" + std::to_string(x) + ", " +
                           std::to_string(y) + ")");
}

// Y->X update in log domain. With q = sigmoid(beta*w) and the cavity product
// written as exp(-t), t >= 0:
//   h_hat = -(1/beta) * log(1 - q e^-t)
//         = (1/beta) * [softplus(-beta*w) - logaddexp(-beta*w, log(1-e^-t))],
// which stays finite for any t > 0 and degrades gracefully to
// softplus(beta*w)/beta at t = 0 (empty cavity). The two terms that depend
// only on the Y-node (neg_bw = -beta*w and its softplus) are hoisted out by
// the callers.
double y_to_x_update(double beta, double neg_bw, double sp_neg_bw, double t) {
  return (sp_neg_bw - logaddexp(neg_bw, log1m_exp(t))) / beta;
}

}  // namespace

void bp_sweep(const BipartiteGraph& g, const BPParams& p, BeliefState& s) {
  validate_params(p);
  check_state(g, s);
  const EdgeIndex& idx = s.edges;
  const int m = static_cast<int>(idx.edge_count());
  const double d = p.damping;
  double max_delta = 0.0;

  // X->Y half-sweep from the current h_hat.
  for (int i = 0; i < g.n_x; ++i) {
    double sum = 0.0;
    for (int e = idx.x_offset[i]; e < idx.x_offset[i + 1]; ++e) sum += s.h_hat[e];
    const double base = -p.mu * g.x_weights[i];
    for (int e = idx.x_offset[i]; e < idx.x_offset[i + 1]; ++e) {
      const double update = base + (sum - s.h_hat[e]);
      const double next = (1.0 - d) * update + d * s.h[e];
      if (!std::isfinite(next)) nonfinite_edge_error("h", i, idx.edge_y[e]);
      max_delta = std::max(max_delta, std::abs(next - s.h[e]));
      s.h[e] = next;
    }
  }

  // Y->X half-sweep from the new h.
  std::vector<double> sp(m);
  for (int e = 0; e < m; ++e) sp[e] = softplus(p.beta * s.h[e]);
  for (int a = 0; a < g.n_y; ++a) {
    double t_all = 0.0;
    for (int k = idx.y_offset[a]; k < idx.y_offset[a + 1]; ++k)
      t_all += sp[idx.y_edges[k]];
    const double neg_bw = -p.beta * g.y_weights[a];
    const double sp_neg_bw = softplus(neg_bw);
    for (int k = idx.y_offset[a]; k < idx.y_offset[a + 1]; ++k) {
      const int e = idx.y_edges[k];
      const double t = std::max(t_all - sp[e], 0.0);
      const double update = y_to_x_update(p.beta, neg_bw, sp_neg_bw, t);
      const double next = (1.0 - d) * update + d * s.h_hat[e];
      if (!std::isfinite(next)) nonfinite_edge_error("h_hat", idx.edge_x[e], a);
      max_delta = std::max(max_delta, std::abs(next - s.h_hat[e]));
      s.h_hat[e] = next;
    }
  }

  ++s.iteration_count;
  s.last_max_delta = max_delta;
}

LocalFields bp_local_fields(const BipartiteGraph& g, const BPParams& p,
                            const BeliefState& s) {
  validate_params(p);
  check_state(g, s);
  const EdgeIndex& idx = s.edges;
  LocalFields f;
  f.h_node.resize(g.n_x);
  f.eta_node.resize(g.n_y);

  for (int i = 0; i < g.n_x; ++i) {
    double sum = 0.0;
    for (int e = idx.x_offset[i]; e < idx.x_offset[i + 1]; ++e) sum += s.h_hat[e];
    f.h_node[i] = -p.mu * g.x_weights[i] + sum;
    if (!std::isfinite(f.h_node[i]))
      throw std::runtime_error("non-finite local field on X-node " + std::to_string(i));
  }
  for (int a = 0; a < g.n_y; ++a) {
    double t_all = 0.0;
    for (int k = idx.y_offset[a]; k < idx.y_offset[a + 1]; ++k)
      t_all += softplus(p.beta * s.h[idx.y_edges[k]]);
    const double neg_bw = -p.beta * g.y_weights[a];
    f.eta_node[a] = y_to_x_update(p.beta, neg_bw, softplus(neg_bw), t_all);
    if (!std::isfinite(f.eta_node[a]))
      throw std::runtime_error("non-finite local field on Y-node " + std::to_string(a));
  }
  return f;
}

Marginals marginals(const LocalFields& fields, double beta) {
  Marginals m;
  m.p_x.resize(fields.h_node.size());
  m.p_y.resize(fields.eta_node.size());
  for (std::size_t i = 0; i < fields.h_node.size(); ++i)
    m.p_x[i] = sigmoid(beta * fields.h_node[i]);
  for (std::size_t a = 0; a < fields.eta_node.size(); ++a)
    m.p_y[a] = sigmoid(beta * fields.eta_node[a]);
  return m;
}

BPSolveResult bp_solve(const CoverInstance& inst, const BPParams& p) {
  validate_params(p);
  const BipartiteGraph& g = inst.graph;
  if (!(inst.budget >= 0)) throw std::invalid_argument("budget must be nonnegative");

  BeliefState state = init_beliefs(g);
  for (int it = 0; it < p.iterations; ++it) bp_sweep(g, p, state);

  BPSolveResult res;
  res.fields = bp_local_fields(g, p, state);
  res.iteration_count = state.iteration_count;
  res.last_max_delta = state.last_max_delta;

  // Static ranking by h_i / c_i; the fields are not recomputed during the
  // budgeted pass.
  std::vector<double> key(g.n_x);
  for (int i = 0; i < g.n_x; ++i) {
    const double c = g.x_weights[i];
    key[i] = c > 0 ? res.fields.h_node[i] / c
                   : std::numeric_limits<double>::infinity();
  }
  std::vector<int> order(g.n_x);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&key](int lhs, int rhs) {
    if (key[lhs] != key[rhs]) return key[lhs] > key[rhs];
    return lhs < rhs;
  });

  std::vector<char> covered(g.n_y, 0);
  for (int i : order) {
    if (res.solution.cost + g.x_weights[i] > inst.budget) continue;
    res.solution.selected.push_back(i);
    res.solution.cost += g.x_weights[i];
    for (int a : g.adj_x[i]) {
      if (!covered[a]) {
        covered[a] = 1;
        res.solution.covered_weight += g.y_weights[a];
      }
    }
  }
  std::sort(res.solution.selected.begin(), res.solution.selected.end());
  return res;
}

}  // namespace maxcov
