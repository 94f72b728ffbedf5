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

#ifndef MAXCOV_SWEEP_HPP_
#define MAXCOV_SWEEP_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "maxcov/rouge.hpp"
#include "maxcov/text.hpp"

namespace maxcov {

enum class SweepMode { kRandomGraph, kCorpus };

struct SweepConfig {
  SweepMode mode = SweepMode::kRandomGraph;
  std::vector<double> mu_grid;
  double beta = 3.0;
  double budget = 100.0;
  int iterations = 150;
  double damping = 0.0;
  int threads = 1;  // 0 = hardware concurrency

  // Random-graph mode: biregular instances with integer weights U{low..high}.
  int instances = 100;
  int n_x = 100;
  int n_y = 300;
  int deg_x = 9;
  int deg_y = 3;
  int weight_low = 1;
  int weight_high = 10;
  std::uint64_t master_seed = 1;

  // Corpus mode.
  std::string corpus_path;
  std::string background_path;  // optional extra IDF documents
  PreprocessConfig preprocess;
  RougeMode rouge_mode = RougeMode::kMultiset;
};

struct SweepRow {
  double mu = 0.0;
  double bp_weight_mean = 0.0;
  double bp_weight_se = 0.0;
  double greedy_weight_mean = 0.0;  // g-greedy; independent of mu
  double greedy_weight_se = 0.0;
  std::optional<double> bp_rouge1;      // corpus mode, clusters with references
  std::optional<double> greedy_rouge1;
  int n = 0;  // instances or clusters aggregated
};

void validate_sweep_config(const SweepConfig& cfg);

// Deterministic per-instance seed stream; instance idx of a sweep replays
// from instance_seed(master_seed, idx) alone.
std::uint64_t instance_seed(std::uint64_t master_seed, int index);

// One g-greedy run and one bp_solve per mu on every instance, aggregated per
// mu in index order (bit-stable regardless of thread count). Failures carry
// the instance seed for replay.
std::vector<SweepRow> random_graph_sweep(const SweepConfig& cfg);

// Per-cluster cover instances from TF-IDF weights (IDF pooled over corpus +
// background), both solvers per mu, ROUGE-1 where references exist.
std::vector<SweepRow> corpus_sweep(const SweepConfig& cfg);

// CSV with the fixed header
// mu,bp_weight_mean,bp_weight_se,greedy_weight_mean,greedy_weight_se,
// bp_rouge1,greedy_rouge1,n and empty fields for missing values.
std::string sweep_rows_to_csv(const std::vector<SweepRow>& rows);
void write_sweep_csv(const std::string& path, const std::vector<SweepRow>& rows);

// JSON config mirroring SweepConfig; unknown keys are rejected. `origin`
// prefixes error messages (usually the file name).
SweepConfig sweep_config_from_json(const std::string& text,
                                   const std::string& origin);
std::string sweep_config_to_json(const SweepConfig& cfg);

}  // namespace maxcov

#endif  // MAXCOV_SWEEP_HPP_
