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

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "maxcov/bp.hpp"
#include "maxcov/graph.hpp"
#include "maxcov/greedy.hpp"
#include "maxcov/mathutil.hpp"
#include "maxcov/random_graph.hpp"
#include "maxcov/rng.hpp"
#include "testutil.hpp"

using namespace maxcov;

namespace {

constexpr double kLn2 = 0.6931471805599453;

// g-greedy's opening ratio: total adjacent weight over cost.
int initial_ratio_argmax(const BipartiteGraph& g) {
  int best = 0;
  double bw = -1.0, bc = 1.0;
  for (int i = 0; i < g.n_x; ++i) {
    double w = 0.0;
    for (int a : g.adj_x[i]) w += g.y_weights[a];
    const double c = g.x_weights[i];
    // Compare w/c > bw/bc by cross-multiplication; costs are positive here.
    if (i == 0 || w * bc > bw * c) {
      best = i;
      bw = w;
      bc = c;
    }
  }
  return best;
}

}  // namespace

TEST_CASE("g_greedy hand trace on the shared fixture") {
  const auto sol = g_greedy(testutil::fixture2x3(2.0));
  CHECK(sol.selected == std::vector<int>{0});
  CHECK(sol.cost == 2.0);
  CHECK(sol.covered_weight == 4.0);
}

TEST_CASE("g_greedy with zero budget selects nothing") {
  const auto sol = g_greedy(testutil::fixture2x3(0.0));
  CHECK(sol.selected.empty());
  CHECK(sol.covered_weight == 0.0);
}

TEST_CASE("simple_greedy scores without the cost divisor") {
  const auto sol = simple_greedy(testutil::fixture2x3(2.0));
  CHECK(sol.selected == std::vector<int>{0});
  CHECK(sol.covered_weight == 4.0);
}

TEST_CASE("equal costs make g_greedy and simple_greedy identical") {
  auto rng = make_rng(21);
  for (int t = 0; t < 25; ++t) {
    auto inst = testutil::random_cover_instance(rng);
    for (auto& c : inst.graph.x_weights) c = 3.0;
    inst.budget = std::ceil(0.4 * 3.0 * inst.graph.n_x);
    CHECK(g_greedy(inst).selected == simple_greedy(inst).selected);
  }
}

TEST_CASE("unit-weight reduction: both greedies coincide") {
  auto rng = make_rng(22);
  for (int t = 0; t < 25; ++t) {
    auto inst = testutil::random_cover_instance(rng);
    for (auto& c : inst.graph.x_weights) c = 1.0;
    for (auto& w : inst.graph.y_weights) w = 1.0;
    inst.budget = std::floor(inst.graph.n_x * 0.5);
    CHECK(g_greedy(inst).selected == simple_greedy(inst).selected);
  }
}

TEST_CASE("zero-cost node with positive gain is taken first") {
  const auto g = make_bipartite_graph(2, 2, {0.0, 1.0}, {5.0, 100.0},
                                      {{0, 0}, {1, 1}});
  const auto sol = g_greedy(CoverInstance{g, 1.0});
  CHECK(sol.selected == std::vector<int>{0, 1});
  CHECK(sol.covered_weight == 105.0);
  CHECK(sol.cost == 1.0);
}

TEST_CASE("zero-cost zero-gain node fits a zero budget") {
  const auto g = make_bipartite_graph(2, 1, {0.0, 1.0}, {5.0}, {{1, 0}});
  const auto sol = g_greedy(CoverInstance{g, 0.0});
  CHECK(sol.selected == std::vector<int>{0});
  CHECK(sol.cost == 0.0);
  CHECK(sol.covered_weight == 0.0);
}

TEST_CASE("greedy solutions are feasible and oracle-dominated") {
  auto rng = make_rng(23);
  for (int t = 0; t < 40; ++t) {
    const auto inst = testutil::random_cover_instance(rng);
    const auto best = testutil::brute_force_solve(inst);
    for (const auto& sol : {g_greedy(inst), simple_greedy(inst)}) {
      CHECK(sol.cost <= inst.budget);
      CHECK(sol.cost ==
            doctest::Approx(selection_cost(inst.graph, sol.selected)));
      CHECK(sol.covered_weight ==
            doctest::Approx(covered_weight(inst.graph, sol.selected)));
      CHECK(sol.covered_weight <= best.covered_weight + 1e-9);
    }
  }
}

TEST_CASE("validate_params rejects out-of-range fields") {
  BPParams p;
  p.beta = 0.0;
  CHECK_THROWS_AS(validate_params(p), std::invalid_argument);
  p = BPParams{};
  p.iterations = 0;
  CHECK_THROWS_AS(validate_params(p), std::invalid_argument);
  p = BPParams{};
  p.damping = 1.0;
  CHECK_THROWS_AS(validate_params(p), std::invalid_argument);
  p = BPParams{};
  p.damping = -0.1;
  CHECK_THROWS_AS(validate_params(p), std::invalid_argument);
  p = BPParams{};
  p.convergence_tol = 0.0;
  CHECK_THROWS_AS(validate_params(p), std::invalid_argument);
  CHECK_NOTHROW(validate_params(BPParams{}));
}

TEST_CASE("EdgeIndex maps both directions") {
  const auto g = testutil::fixture2x3(0.0).graph;
  const auto idx = EdgeIndex::build(g);
  CHECK(idx.edge_count() == 4);
  CHECK(idx.edge_x[idx.edge_of(1, 2)] == 1);
  CHECK(idx.edge_y[idx.edge_of(1, 2)] == 2);
  CHECK_THROWS_AS(idx.edge_of(0, 2), std::out_of_range);
}

TEST_CASE("init_beliefs starts from zero") {
  const auto g = testutil::fixture2x3(0.0).graph;
  const auto s = init_beliefs(g);
  CHECK(s.h.size() == 4);
  CHECK(s.h_hat.size() == 4);
  CHECK(s.iteration_count == 0);
  for (double v : s.h) CHECK(v == 0.0);
  for (double v : s.h_hat) CHECK(v == 0.0);
}

TEST_CASE("single-edge sweep reproduces the ln 2 closed form") {
  const auto g = make_bipartite_graph(1, 1, {1.0}, {0.0}, {{0, 0}});
  BPParams p;
  p.beta = 1.0;
  p.mu = 0.0;
  auto s = init_beliefs(g);
  bp_sweep(g, p, s);
  CHECK(s.h_message(0, 0) == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(s.h_hat_message(0, 0) == doctest::Approx(kLn2).epsilon(1e-13));
  const auto fields = bp_local_fields(g, p, s);
  CHECK(fields.h_node[0] == doctest::Approx(kLn2).epsilon(1e-13));
  const auto m = marginals(fields, p.beta);
  CHECK(m.p_x[0] == doctest::Approx(2.0 / 3.0).epsilon(1e-13));
}

TEST_CASE("first sweep with huge mu pins h to -mu*c") {
  const auto g = generate_biregular(6, 9, 3, 2, 31);
  BPParams p;
  p.beta = 2.0;
  p.mu = 1e9;
  auto s = init_beliefs(g);
  bp_sweep(g, p, s);
  for (std::size_t e = 0; e < s.h.size(); ++e) {
    const int i = s.edges.edge_x[e];
    CHECK(s.h[e] == -p.mu * g.x_weights[i]);
  }
}

TEST_CASE("h_hat is nonnegative and finite on arbitrary instances") {
  // The stable update subtracts two terms of size softplus(-beta*w) that
  // differ by about exp(-t). Once the cavity sum t passes ~40 the
  // difference falls below one ulp and h_hat rounds to +0, the correct
  // saturated limit. Large t arises on dense graphs and in undamped
  // transients, so only nonnegativity and finiteness hold unconditionally.
  auto rng = make_rng(24);
  for (int t = 0; t < 10; ++t) {
    const auto inst = testutil::random_cover_instance(rng);
    if (inst.graph.edge_count() == 0) continue;
    for (double mu : {0.0, 1.0, 5.0}) {
      for (double damping : {0.0, 0.5}) {
        BPParams p;
        p.beta = 3.0;
        p.mu = mu;
        p.damping = damping;
        auto s = init_beliefs(inst.graph);
        for (int it = 0; it < 30; ++it) {
          bp_sweep(inst.graph, p, s);
          for (double v : s.h_hat) {
            CHECK(v >= 0.0);
            CHECK(std::isfinite(v));
          }
        }
      }
    }
  }
}

TEST_CASE("h_hat stays strictly positive in the damped mu=0 regime") {
  // At mu = 0 with damping 0.5 the transient is gentle: fields stay small,
  // cavity sums stay far below the rounding threshold, and h_hat > 0 holds
  // through every sweep on the biregular family.
  auto rng = make_rng(25);
  for (int t = 0; t < 3; ++t) {
    auto g = generate_biregular(30, 90, 9, 3, 300 + t);
    for (auto& w : g.x_weights) w = static_cast<double>(uniform_int(rng, 1, 10));
    for (auto& w : g.y_weights) w = static_cast<double>(uniform_int(rng, 1, 10));
    BPParams p;
    p.beta = 3.0;
    p.mu = 0.0;
    p.damping = 0.5;
    auto s = init_beliefs(g);
    for (int it = 0; it < 30; ++it) {
      bp_sweep(g, p, s);
      for (double v : s.h_hat) CHECK(v > 0.0);
    }
  }
}

TEST_CASE("biregular beta=3 run converges within 150 damped sweeps") {
  const auto g0 = generate_biregular(100, 300, 9, 3, 41);
  auto g = g0;
  g.x_weights = sample_integer_weights(100, 1, 10, 42);
  g.y_weights = sample_integer_weights(300, 1, 10, 43);
  BPParams p;
  p.beta = 3.0;
  p.mu = 0.0;
  p.damping = 0.5;
  auto s = init_beliefs(g);
  for (int it = 0; it < 150; ++it) bp_sweep(g, p, s);
  CHECK(s.iteration_count == 150);
  CHECK(s.last_max_delta < p.convergence_tol);
}

TEST_CASE("bp_solve respects the budget and matches recomputation") {
  auto rng = make_rng(25);
  for (int t = 0; t < 15; ++t) {
    const auto inst = testutil::random_cover_instance(rng);
    for (double mu : {0.0, 2.0, 100.0}) {
      BPParams p;
      p.beta = 3.0;
      p.mu = mu;
      p.iterations = 40;
      p.damping = 0.5;
      const auto res = bp_solve(inst, p);
      CHECK(res.solution.cost <= inst.budget);
      CHECK(res.solution.cost ==
            doctest::Approx(selection_cost(inst.graph, res.solution.selected)));
      CHECK(res.solution.covered_weight ==
            doctest::Approx(
                covered_weight(inst.graph, res.solution.selected)));
      const auto best = testutil::brute_force_solve(inst);
      CHECK(res.solution.covered_weight <= best.covered_weight + 1e-9);
    }
  }
}

TEST_CASE("bp_solve is deterministic") {
  auto rng = make_rng(26);
  const auto inst = testutil::random_cover_instance(rng);
  BPParams p;
  p.beta = 2.0;
  p.mu = 1.0;
  p.iterations = 60;
  p.damping = 0.5;
  const auto a = bp_solve(inst, p);
  const auto b = bp_solve(inst, p);
  CHECK(a.solution == b.solution);
  CHECK(a.last_max_delta == b.last_max_delta);
}

TEST_CASE("bp_solve breaks field ties by lowest id") {
  // Two identical X-nodes contending for one slot.
  const auto g = make_bipartite_graph(2, 2, {1.0, 1.0}, {4.0, 4.0},
                                      {{0, 0}, {1, 1}});
  BPParams p;
  p.beta = 1.0;
  p.iterations = 10;
  const auto res = bp_solve(CoverInstance{g, 1.0}, p);
  CHECK(res.solution.selected == std::vector<int>{0});
}

TEST_CASE("isolated nodes take their closed-form fields") {
  // X1 and Y1 are isolated; X0-Y0 is the only edge.
  const auto g =
      make_bipartite_graph(2, 2, {1.0, 2.5}, {1.5, 1.2}, {{0, 0}});
  BPParams p;
  p.beta = 1.7;
  p.mu = 0.6;
  auto s = init_beliefs(g);
  for (int i = 0; i < 5; ++i) bp_sweep(g, p, s);
  const auto fields = bp_local_fields(g, p, s);
  CHECK(fields.h_node[1] == -p.mu * 2.5);
  CHECK(fields.eta_node[1] ==
        doctest::Approx(softplus(p.beta * 1.2) / p.beta).epsilon(1e-13));
}

TEST_CASE("mu to infinity reduces the first pick to g-greedy's") {
  auto rng = make_rng(27);
  for (int t = 0; t < 50; ++t) {
    const auto inst = testutil::random_cover_instance(rng);
    BPParams p;
    p.beta = 50.0;
    p.mu = 1e6;
    p.iterations = 150;
    const auto res = bp_solve(inst, p);
    const auto& g = inst.graph;
    // Top-ranked node by h_i/c_i, ties to lowest id.
    int top = 0;
    for (int i = 1; i < g.n_x; ++i) {
      const double a = res.fields.h_node[i] / g.x_weights[i];
      const double b = res.fields.h_node[top] / g.x_weights[top];
      if (a > b) top = i;
    }
    // Its opening ratio must equal the best opening ratio (ties allowed).
    const int ga = initial_ratio_argmax(g);
    double tw = 0.0, gw = 0.0;
    for (int a : g.adj_x[top]) tw += g.y_weights[a];
    for (int a : g.adj_x[ga]) gw += g.y_weights[a];
    CHECK(tw * g.x_weights[ga] == doctest::Approx(gw * g.x_weights[top])
                                      .epsilon(1e-12));
  }
}

TEST_CASE("marginals follow the sigmoid of beta times the field") {
  LocalFields f;
  f.h_node = {0.0, kLn2, 1000.0};
  f.eta_node = {};
  const auto m = marginals(f, 1.0);
  CHECK(m.p_x[0] == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(m.p_x[1] == doctest::Approx(2.0 / 3.0).epsilon(1e-13));
  CHECK(m.p_x[2] == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("non-finite message raises a runtime error naming the edge") {
  const auto g = make_bipartite_graph(
      1, 1, {1.0}, {std::numeric_limits<double>::infinity()}, {{0, 0}});
  BPParams p;
  auto s = init_beliefs(g);
  CHECK_THROWS_AS(bp_sweep(g, p, s), std::runtime_error);
}
