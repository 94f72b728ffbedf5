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

#include "maxcov/graph.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace maxcov {

std::size_t BipartiteGraph::edge_count() const {
  std::size_t n = 0;
  for (const auto& nbrs : adj_x) n += nbrs.size();
  return n;
}

BipartiteGraph make_bipartite_graph(int n_x, int n_y,
                                    std::vector<double> x_weights,
                                    std::vector<double> y_weights,
                                    const std::vector<std::pair<int, int>>& edges) {
  if (n_x < 0 || n_y < 0) throw std::invalid_argument("negative node count");
  if (static_cast<int>(x_weights.size()) != n_x)
    throw std::invalid_argument("x_weights size does not match n_x");
  if (static_cast<int>(y_weights.size()) != n_y)
    throw std::invalid_argument("y_weights size does not match n_y");
  for (double w : x_weights)
    if (!(w >= 0)) throw std::invalid_argument("negative or non-finite x weight");
  for (double w : y_weights)
    if (!(w >= 0)) throw std::invalid_argument("negative or non-finite y weight");

  BipartiteGraph g;
  g.n_x = n_x;
  g.n_y = n_y;
  g.x_weights = std::move(x_weights);
  g.y_weights = std::move(y_weights);
  g.adj_x.resize(n_x);
  g.adj_y.resize(n_y);
  for (const auto& [x, y] : edges) {
    if (x < 0 || x >= n_x)
      throw std::invalid_argument("edge references X-node " + std::to_string(x) +
                                  " outside [0, " + std::to_string(n_x) + ")");
    if (y < 0 || y >= n_y)
      throw std::invalid_argument("edge references Y-node " + std::to_string(y) +
                                  " outside [0, " + std::to_string(n_y) + ")");
    g.adj_x[x].push_back(y);
    g.adj_y[y].push_back(x);
  }
  for (auto& nbrs : g.adj_x) {
    std::sort(nbrs.begin(), nbrs.end());
    if (std::adjacent_find(nbrs.begin(), nbrs.end()) != nbrs.end())
      throw std::invalid_argument("duplicate edge");
  }
  for (auto& nbrs : g.adj_y) std::sort(nbrs.begin(), nbrs.end());
  return g;
}

std::vector<std::string> validate_graph(const BipartiteGraph& g) {
  std::vector<std::string> violations;
  auto add = [&violations](std::string msg) { violations.push_back(std::move(msg)); };

  if (g.n_x < 0 || g.n_y < 0) add("negative node count");
  if (static_cast<int>(g.x_weights.size()) != g.n_x)
    add("x_weights size " + std::to_string(g.x_weights.size()) +
        " does not match n_x " + std::to_string(g.n_x));
  if (static_cast<int>(g.y_weights.size()) != g.n_y)
    add("y_weights size " + std::to_string(g.y_weights.size()) +
        " does not match n_y " + std::to_string(g.n_y));
  if (static_cast<int>(g.adj_x.size()) != g.n_x) add("adj_x size does not match n_x");
  if (static_cast<int>(g.adj_y.size()) != g.n_y) add("adj_y size does not match n_y");

  for (std::size_t i = 0; i < g.x_weights.size(); ++i)
    if (!(g.x_weights[i] >= 0))
      add("x weight " + std::to_string(i) + " is negative or non-finite");
  for (std::size_t a = 0; a < g.y_weights.size(); ++a)
    if (!(g.y_weights[a] >= 0))
      add("y weight " + std::to_string(a) + " is negative or non-finite");

  std::set<std::pair<int, int>> edges_x;
  for (int i = 0; i < static_cast<int>(g.adj_x.size()); ++i) {
    const auto& nbrs = g.adj_x[i];
    if (!std::is_sorted(nbrs.begin(), nbrs.end()))
      add("adj_x[" + std::to_string(i) + "] is not sorted");
    for (int a : nbrs) {
      if (a < 0 || a >= g.n_y) {
        add("adj_x[" + std::to_string(i) + "] references Y-node " + std::to_string(a) +
            " out of range");
        continue;
      }
      if (!edges_x.emplace(i, a).second)
        add("duplicate edge (" + std::to_string(i) + ", " + std::to_string(a) + ")");
    }
  }
  std::set<std::pair<int, int>> edges_y;
  for (int a = 0; a < static_cast<int>(g.adj_y.size()); ++a) {
    const auto& nbrs = g.adj_y[a];
    if (!std::is_sorted(nbrs.begin(), nbrs.end()))
      add("adj_y[" + std::to_string(a) + "] is not sorted");
    for (int i : nbrs) {
      if (i < 0 || i >= g.n_x) {
        add("adj_y[" + std::to_string(a) + "] references X-node " + std::to_string(i) +
            " out of range");
        continue;
      }
      if (!edges_y.emplace(i, a).second)
        add("duplicate edge (" + std::to_string(i) + ", " + std::to_string(a) +
            ") in adj_y");
    }
  }
  for (const auto& e : edges_x)
    if (!edges_y.count(e))
      add("asymmetric edge (" + std::to_string(e.first) + ", " +
          std::to_string(e.second) + ") present in adj_x only");
  for (const auto& e : edges_y)
    if (!edges_x.count(e))
      add("asymmetric edge (" + std::to_string(e.first) + ", " +
          std::to_string(e.second) + ") present in adj_y only");

  return violations;
}

namespace {

void check_x_ids(const BipartiteGraph& g, std::span<const int> selected) {
  for (int i : selected)
    if (i < 0 || i >= g.n_x)
      throw std::out_of_range("X-node id " + std::to_string(i) + " outside [0, " +
                              std::to_string(g.n_x) + ")");
}

}  // namespace

double covered_weight(const BipartiteGraph& g, std::span<const int> selected) {
  check_x_ids(g, selected);
  std::vector<char> covered(g.n_y, 0);
  double total = 0.0;
  for (int i : selected) {
    for (int a : g.adj_x[i]) {
      if (!covered[a]) {
        covered[a] = 1;
        total += g.y_weights[a];
      }
    }
  }
  return total;
}

double selection_cost(const BipartiteGraph& g, std::span<const int> selected) {
  check_x_ids(g, selected);
  double total = 0.0;
  for (int i : selected) total += g.x_weights[i];
  return total;
}

namespace {

BipartiteGraph graph_from_json(const nlohmann::json& j, const std::string& origin) {
  auto fail = [&origin](const std::string& what) -> BipartiteGraph {
    throw std::runtime_error(origin + ": " + what);
  };
  if (!j.is_object()) return fail("top-level value is not an object");
  for (const char* field : {"n_x", "n_y", "x_weights", "y_weights", "edges"})
    if (!j.contains(field)) return fail(std::string("missing field '") + field + "'");
  if (!j["n_x"].is_number_integer() || !j["n_y"].is_number_integer())
    return fail("n_x/n_y must be integers");
  if (!j["x_weights"].is_array() || !j["y_weights"].is_array() || !j["edges"].is_array())
    return fail("x_weights, y_weights and edges must be arrays");

  std::vector<double> xw, yw;
  for (const auto& v : j["x_weights"]) {
    if (!v.is_number()) return fail("non-numeric entry in x_weights");
    xw.push_back(v.get<double>());
  }
  for (const auto& v : j["y_weights"]) {
    if (!v.is_number()) return fail("non-numeric entry in y_weights");
    yw.push_back(v.get<double>());
  }
  std::vector<std::pair<int, int>> edges;
  int idx = 0;
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
        !e[1].is_number_integer())
      return fail("edges[" + std::to_string(idx) + "] is not an [x_id, y_id] pair");
    edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    ++idx;
  }
  try {
    return make_bipartite_graph(j["n_x"].get<int>(), j["n_y"].get<int>(),
                                std::move(xw), std::move(yw), edges);
  } catch (const std::invalid_argument& e) {
    return fail(e.what());
  }
}

nlohmann::json graph_to_json(const BipartiteGraph& g) {
  nlohmann::json j;
  j["n_x"] = g.n_x;
  j["n_y"] = g.n_y;
  j["x_weights"] = g.x_weights;
  j["y_weights"] = g.y_weights;
  auto edges = nlohmann::json::array();
  for (int i = 0; i < g.n_x; ++i)
    for (int a : g.adj_x[i]) edges.push_back({i, a});
  j["edges"] = std::move(edges);
  return j;
}

}  // namespace

std::string graph_to_json_string(const BipartiteGraph& g) {
  return graph_to_json(g).dump(2);
}

BipartiteGraph graph_from_json_string(const std::string& text,
                                      const std::string& origin) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::runtime_error(origin + ": " + e.what());
  }
  return graph_from_json(j, origin);
}

BipartiteGraph load_graph(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open graph file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return graph_from_json_string(buf.str(), path.string());
}

void store_graph(const BipartiteGraph& g, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  out << graph_to_json_string(g) << '\n';
  if (!out) throw std::runtime_error("failed writing graph file " + path.string());
}

}  // namespace maxcov
