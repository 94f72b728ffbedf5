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

#include "maxcov/sweep.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <set>
#include <stdexcept>
#include <thread>
#include <utility>

#include <json.hpp>

#include "maxcov/greedy.hpp"
#include "maxcov/random_graph.hpp"
#include "maxcov/rng.hpp"

namespace maxcov {

namespace {

using nlohmann::json;

// Runs fn(0..count-1) on up to `threads` workers. Exceptions are re-thrown
// for the smallest failing index, so error reporting does not depend on
// scheduling.
void parallel_for(int count, int threads, const std::function<void(int)>& fn) {
  int k = threads <= 0 ? static_cast<int>(std::thread::hardware_concurrency())
                       : threads;
  if (k < 1) k = 1;
  if (k > count) k = count;
  if (k <= 1) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::exception_ptr> errors(count);
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  pool.reserve(k);
  for (int t = 0; t < k; ++t) {
    pool.emplace_back([&] {
      while (true) {
        const int i = next.fetch_add(1);
        if (i >= count) return;
        try {
          fn(i);
        } catch (...) {
          errors[i] = std::current_exception();
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  for (int i = 0; i < count; ++i)
    if (errors[i]) std::rethrow_exception(errors[i]);
}

struct MeanSe {
  double mean = 0.0;
  double se = 0.0;
};

MeanSe mean_se(const std::vector<double>& xs) {
  MeanSe out;
  const int n = static_cast<int>(xs.size());
  if (n == 0) return out;
  double sum = 0.0;
  for (double x : xs) sum += x;
  out.mean = sum / n;
  if (n < 2) return out;
  double ss = 0.0;
  for (double x : xs) ss += (x - out.mean) * (x - out.mean);
  out.se = std::sqrt(ss / (n - 1) / n);
  return out;
}

std::string format_value(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.10g", v);
  return buf;
}

BPParams bp_params_for(const SweepConfig& cfg, double mu) {
  BPParams p;
  p.beta = cfg.beta;
  p.mu = mu;
  p.iterations = cfg.iterations;
  p.damping = cfg.damping;
  return p;
}

std::vector<std::string> summary_tokens(const BuiltInstance& built,
                                        const CoverSolution& sol) {
  std::vector<std::string> tokens;
  for (int i : sol.selected)
    for (const auto& t : built.sentences[i].tokens) tokens.push_back(t);
  return tokens;
}

}  // namespace

void validate_sweep_config(const SweepConfig& cfg) {
  if (cfg.mu_grid.empty()) throw std::invalid_argument("mu grid must be nonempty");
  for (double mu : cfg.mu_grid)
    if (!std::isfinite(mu)) throw std::invalid_argument("mu grid has a non-finite value");
  if (!(cfg.beta > 0)) throw std::invalid_argument("beta must be positive");
  if (!(cfg.budget >= 0)) throw std::invalid_argument("budget must be nonnegative");
  if (cfg.iterations < 1) throw std::invalid_argument("iterations must be >= 1");
  if (!(cfg.damping >= 0 && cfg.damping < 1))
    throw std::invalid_argument("damping must lie in [0, 1)");
  if (cfg.threads < 0) throw std::invalid_argument("threads must be >= 0");
  if (cfg.mode == SweepMode::kRandomGraph) {
    if (cfg.instances < 1) throw std::invalid_argument("instance count must be >= 1");
    if (cfg.n_x < 1 || cfg.n_y < 1 || cfg.deg_x < 1 || cfg.deg_y < 1)
      throw std::invalid_argument("graph dimensions must be positive");
    if (cfg.weight_low < 0 || cfg.weight_low > cfg.weight_high)
      throw std::invalid_argument("weight range must satisfy 0 <= low <= high");
  } else {
    if (cfg.corpus_path.empty())
      throw std::invalid_argument("corpus mode needs a corpus path");
    if (!(cfg.preprocess.first_sentence_boost >= 1))
      throw std::invalid_argument("first_sentence_boost must be >= 1");
  }
}

std::uint64_t instance_seed(std::uint64_t master_seed, int index) {
  return splitmix64(master_seed + static_cast<std::uint64_t>(index));
}

std::vector<SweepRow> random_graph_sweep(const SweepConfig& cfg) {
  validate_sweep_config(cfg);
  if (cfg.mode != SweepMode::kRandomGraph)
    throw std::invalid_argument("config is not in random-graph mode");

  const int n_mu = static_cast<int>(cfg.mu_grid.size());
  std::vector<std::vector<double>> bp_w(cfg.instances,
                                        std::vector<double>(n_mu, 0.0));
  std::vector<double> greedy_w(cfg.instances, 0.0);

  parallel_for(cfg.instances, cfg.threads, [&](int idx) {
    const std::uint64_t seed = instance_seed(cfg.master_seed, idx);
    try {
      CoverInstance inst;
      inst.graph = generate_biregular(cfg.n_x, cfg.n_y, cfg.deg_x, cfg.deg_y,
                                      splitmix64(seed + 1));
      inst.graph.x_weights = sample_integer_weights(
          cfg.n_x, cfg.weight_low, cfg.weight_high, splitmix64(seed + 2));
      inst.graph.y_weights = sample_integer_weights(
          cfg.n_y, cfg.weight_low, cfg.weight_high, splitmix64(seed + 3));
      inst.budget = cfg.budget;

      greedy_w[idx] = g_greedy(inst).covered_weight;
      for (int m = 0; m < n_mu; ++m)
        bp_w[idx][m] =
            bp_solve(inst, bp_params_for(cfg, cfg.mu_grid[m])).solution.covered_weight;
    } catch (const std::exception& e) {
      throw std::runtime_error("instance " + std::to_string(idx) + " (seed " +
                               std::to_string(seed) + ") failed: " + e.what());
    }
  });

  const MeanSe greedy = mean_se(greedy_w);
  std::vector<SweepRow> rows(n_mu);
  std::vector<double> column(cfg.instances);
  for (int m = 0; m < n_mu; ++m) {
    for (int idx = 0; idx < cfg.instances; ++idx) column[idx] = bp_w[idx][m];
    const MeanSe bp = mean_se(column);
    rows[m].mu = cfg.mu_grid[m];
    rows[m].bp_weight_mean = bp.mean;
    rows[m].bp_weight_se = bp.se;
    rows[m].greedy_weight_mean = greedy.mean;
    rows[m].greedy_weight_se = greedy.se;
    rows[m].n = cfg.instances;
  }
  return rows;
}

std::vector<SweepRow> corpus_sweep(const SweepConfig& cfg) {
  validate_sweep_config(cfg);
  if (cfg.mode != SweepMode::kCorpus)
    throw std::invalid_argument("config is not in corpus mode");

  const std::vector<Cluster> corpus = load_corpus(cfg.corpus_path, cfg.preprocess);
  const std::vector<Cluster> background =
      cfg.background_path.empty()
          ? std::vector<Cluster>{}
          : load_corpus(cfg.background_path, cfg.preprocess);
  const std::vector<TermWeights> weights =
      compute_tfidf(corpus, background, cfg.preprocess);

  const int n_clusters = static_cast<int>(corpus.size());
  const int n_mu = static_cast<int>(cfg.mu_grid.size());
  std::vector<double> greedy_w(n_clusters, 0.0);
  std::vector<std::optional<double>> greedy_rouge(n_clusters);
  std::vector<std::vector<double>> bp_w(n_clusters, std::vector<double>(n_mu, 0.0));
  std::vector<std::vector<std::optional<double>>> bp_rouge(
      n_clusters, std::vector<std::optional<double>>(n_mu));

  parallel_for(n_clusters, cfg.threads, [&](int ci) {
    try {
      const BuiltInstance built =
          build_cover_graph(corpus[ci], weights[ci], cfg.budget, cfg.preprocess);
      const bool has_refs = !corpus[ci].references.empty();

      const CoverSolution greedy_sol = g_greedy(built.instance);
      greedy_w[ci] = greedy_sol.covered_weight;
      if (has_refs)
        greedy_rouge[ci] = rouge1_multi(summary_tokens(built, greedy_sol),
                                        corpus[ci].references, cfg.rouge_mode);

      for (int m = 0; m < n_mu; ++m) {
        const CoverSolution bp_sol =
            bp_solve(built.instance, bp_params_for(cfg, cfg.mu_grid[m])).solution;
        bp_w[ci][m] = bp_sol.covered_weight;
        if (has_refs)
          bp_rouge[ci][m] = rouge1_multi(summary_tokens(built, bp_sol),
                                         corpus[ci].references, cfg.rouge_mode);
      }
    } catch (const std::exception& e) {
      throw std::runtime_error("cluster '" + corpus[ci].id + "' failed: " + e.what());
    }
  });

  const MeanSe greedy = mean_se(greedy_w);
  std::vector<double> greedy_rouge_vals;
  for (const auto& r : greedy_rouge)
    if (r) greedy_rouge_vals.push_back(*r);

  std::vector<SweepRow> rows(n_mu);
  std::vector<double> column(n_clusters);
  for (int m = 0; m < n_mu; ++m) {
    for (int ci = 0; ci < n_clusters; ++ci) column[ci] = bp_w[ci][m];
    const MeanSe bp = mean_se(column);
    rows[m].mu = cfg.mu_grid[m];
    rows[m].bp_weight_mean = bp.mean;
    rows[m].bp_weight_se = bp.se;
    rows[m].greedy_weight_mean = greedy.mean;
    rows[m].greedy_weight_se = greedy.se;
    rows[m].n = n_clusters;
    std::vector<double> bp_rouge_vals;
    for (int ci = 0; ci < n_clusters; ++ci)
      if (bp_rouge[ci][m]) bp_rouge_vals.push_back(*bp_rouge[ci][m]);
    if (!bp_rouge_vals.empty()) rows[m].bp_rouge1 = corpus_rouge(bp_rouge_vals);
    if (!greedy_rouge_vals.empty())
      rows[m].greedy_rouge1 = corpus_rouge(greedy_rouge_vals);
  }
  return rows;
}

std::string sweep_rows_to_csv(const std::vector<SweepRow>& rows) {
  std::string out =
      "mu,bp_weight_mean,bp_weight_se,greedy_weight_mean,greedy_weight_se,"
      "bp_rouge1,greedy_rouge1,n\n";
  for (const SweepRow& r : rows) {
    out += format_value(r.mu);
    out += ',';
    out += format_value(r.bp_weight_mean);
    out += ',';
    out += format_value(r.bp_weight_se);
    out += ',';
    out += format_value(r.greedy_weight_mean);
    out += ',';
    out += format_value(r.greedy_weight_se);
    out += ',';
    if (r.bp_rouge1) out += format_value(*r.bp_rouge1);
    out += ',';
    if (r.greedy_rouge1) out += format_value(*r.greedy_rouge1);
    out += ',';
    out += std::to_string(r.n);
    out += '\n';
  }
  return out;
}

void write_sweep_csv(const std::string& path, const std::vector<SweepRow>& rows) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  out << sweep_rows_to_csv(rows);
  if (!out) throw std::runtime_error("failed writing " + path);
}

SweepConfig sweep_config_from_json(const std::string& text,
                                   const std::string& origin) {
  SweepConfig cfg;
  try {
    const json j = json::parse(text);
    if (!j.is_object()) throw std::runtime_error("config root must be an object");
    static const std::set<std::string> known = {
        "mode",       "mu_grid",    "beta",        "budget",     "iterations",
        "damping",    "threads",    "instances",   "nx",         "ny",
        "dx",         "dy",         "weight_low",  "weight_high", "seed",
        "corpus",     "background", "preprocess",  "rouge_mode"};
    for (auto it = j.begin(); it != j.end(); ++it) {
      if (known.count(it.key()) == 0)
        throw std::runtime_error("unknown config key '" + it.key() + "'");
    }
    const std::string mode = j.at("mode").get<std::string>();
    if (mode == "random-graph")
      cfg.mode = SweepMode::kRandomGraph;
    else if (mode == "corpus")
      cfg.mode = SweepMode::kCorpus;
    else
      throw std::runtime_error("mode must be 'random-graph' or 'corpus'");
    cfg.mu_grid = j.at("mu_grid").get<std::vector<double>>();
    if (j.contains("beta")) cfg.beta = j.at("beta").get<double>();
    if (j.contains("budget")) cfg.budget = j.at("budget").get<double>();
    if (j.contains("iterations")) cfg.iterations = j.at("iterations").get<int>();
    if (j.contains("damping")) cfg.damping = j.at("damping").get<double>();
    if (j.contains("threads")) cfg.threads = j.at("threads").get<int>();
    if (j.contains("instances")) cfg.instances = j.at("instances").get<int>();
    if (j.contains("nx")) cfg.n_x = j.at("nx").get<int>();
    if (j.contains("ny")) cfg.n_y = j.at("ny").get<int>();
    if (j.contains("dx")) cfg.deg_x = j.at("dx").get<int>();
    if (j.contains("dy")) cfg.deg_y = j.at("dy").get<int>();
    if (j.contains("weight_low")) cfg.weight_low = j.at("weight_low").get<int>();
    if (j.contains("weight_high")) cfg.weight_high = j.at("weight_high").get<int>();
    if (j.contains("seed")) cfg.master_seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("corpus")) cfg.corpus_path = j.at("corpus").get<std::string>();
    if (j.contains("background"))
      cfg.background_path = j.at("background").get<std::string>();
    if (j.contains("rouge_mode")) {
      const std::string rm = j.at("rouge_mode").get<std::string>();
      if (rm == "multiset")
        cfg.rouge_mode = RougeMode::kMultiset;
      else if (rm == "set")
        cfg.rouge_mode = RougeMode::kSet;
      else
        throw std::runtime_error("rouge_mode must be 'multiset' or 'set'");
    }
    if (j.contains("preprocess")) {
      const json& p = j.at("preprocess");
      static const std::set<std::string> pknown = {
          "remove_stopwords", "stopwords_file", "apply_stemming",
          "first_sentence_boost"};
      for (auto it = p.begin(); it != p.end(); ++it) {
        if (pknown.count(it.key()) == 0)
          throw std::runtime_error("unknown preprocess key '" + it.key() + "'");
      }
      if (p.contains("remove_stopwords"))
        cfg.preprocess.remove_stopwords = p.at("remove_stopwords").get<bool>();
      if (p.contains("apply_stemming"))
        cfg.preprocess.apply_stemming = p.at("apply_stemming").get<bool>();
      if (p.contains("first_sentence_boost"))
        cfg.preprocess.first_sentence_boost =
            p.at("first_sentence_boost").get<double>();
      if (p.contains("stopwords_file"))
        cfg.preprocess.stopwords =
            load_stopwords(p.at("stopwords_file").get<std::string>());
    }
  } catch (const json::exception& e) {
    throw std::runtime_error(origin + ": " + e.what());
  } catch (const std::runtime_error& e) {
    throw std::runtime_error(origin + ": " + e.what());
  }
  validate_sweep_config(cfg);
  return cfg;
}

std::string sweep_config_to_json(const SweepConfig& cfg) {
  json j;
  j["mode"] = cfg.mode == SweepMode::kRandomGraph ? "random-graph" : "corpus";
  j["mu_grid"] = cfg.mu_grid;
  j["beta"] = cfg.beta;
  j["budget"] = cfg.budget;
  j["iterations"] = cfg.iterations;
  j["damping"] = cfg.damping;
  j["threads"] = cfg.threads;
  if (cfg.mode == SweepMode::kRandomGraph) {
    j["instances"] = cfg.instances;
    j["nx"] = cfg.n_x;
    j["ny"] = cfg.n_y;
    j["dx"] = cfg.deg_x;
    j["dy"] = cfg.deg_y;
    j["weight_low"] = cfg.weight_low;
    j["weight_high"] = cfg.weight_high;
    j["seed"] = cfg.master_seed;
  } else {
    j["corpus"] = cfg.corpus_path;
    if (!cfg.background_path.empty()) j["background"] = cfg.background_path;
    j["preprocess"] = {
        {"remove_stopwords", cfg.preprocess.remove_stopwords},
        {"apply_stemming", cfg.preprocess.apply_stemming},
        {"first_sentence_boost", cfg.preprocess.first_sentence_boost}};
    j["rouge_mode"] = cfg.rouge_mode == RougeMode::kMultiset ? "multiset" : "set";
  }
  return j.dump();
}

}  // namespace maxcov
