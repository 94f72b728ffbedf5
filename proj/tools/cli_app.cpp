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

#include "cli_app.hpp"

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "maxcov/exact.hpp"
#include "maxcov/graph.hpp"
#include "maxcov/greedy.hpp"
#include "maxcov/random_graph.hpp"
#include "maxcov/rng.hpp"
#include "maxcov/rouge.hpp"
#include "maxcov/stopwords.hpp"
#include "maxcov/sweep.hpp"
#include "maxcov/text.hpp"

namespace maxcov {

namespace {

using nlohmann::json;

enum class LogLevel { kDebug = 0, kInfo = 1, kWarn = 2, kError = 3 };

LogLevel global_log_level() {
  static const LogLevel level = [] {
    const char* v = std::getenv("MAXCOV_LOG");
    if (v == nullptr) return LogLevel::kInfo;
    const std::string s(v);
    if (s == "debug") return LogLevel::kDebug;
    if (s == "info") return LogLevel::kInfo;
    if (s == "warn") return LogLevel::kWarn;
    if (s == "error") return LogLevel::kError;
    std::cerr << "[warn] unknown MAXCOV_LOG level '" << s << "', using info\n";
    return LogLevel::kInfo;
  }();
  return level;
}

void log_at(LogLevel level, const char* tag, const std::string& msg) {
  if (level >= global_log_level()) std::cerr << '[' << tag << "] " << msg << '\n';
}
void log_info(const std::string& msg) { log_at(LogLevel::kInfo, "info", msg); }
void log_debug(const std::string& msg) { log_at(LogLevel::kDebug, "debug", msg); }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return std::move(buf).str();
}

// Empty path means stdout.
void write_output(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  out << content;
  if (!out) throw std::runtime_error("failed writing " + path);
}

json solution_to_json(const CoverSolution& sol) {
  return json{{"selected", sol.selected},
              {"cost", sol.cost},
              {"covered_weight", sol.covered_weight}};
}

struct PreprocessFlags {
  std::string stopwords = "on";
  std::string stem = "on";
  std::string stopwords_file;
  double boost = 1.5;

  void add_to(CLI::App* cmd) {
    cmd->add_option("--stopwords", stopwords, "remove stop words (on|off)")
        ->check(CLI::IsMember({"on", "off"}))
        ->capture_default_str();
    cmd->add_option("--stem", stem, "apply Porter stemming (on|off)")
        ->check(CLI::IsMember({"on", "off"}))
        ->capture_default_str();
    cmd->add_option("--stopwords-file", stopwords_file,
                    "stop-word list file, one word per line (default: builtin)")
        ->check(CLI::ExistingFile);
    cmd->add_option("--boost", boost, "first-sentence TF-IDF boost (>= 1)")
        ->capture_default_str();
  }

  PreprocessConfig build() const {
    PreprocessConfig cfg;
    cfg.remove_stopwords = stopwords == "on";
    cfg.apply_stemming = stem == "on";
    cfg.first_sentence_boost = boost;
    if (!stopwords_file.empty()) cfg.stopwords = load_stopwords(stopwords_file);
    return cfg;
  }

  json to_json() const {
    return json{{"stopwords", stopwords},
                {"stem", stem},
                {"stopwords_file", stopwords_file.empty() ? "<builtin>" : stopwords_file},
                {"first_sentence_boost", boost}};
  }
};

// ---------------------------------------------------------------------------
// gen-graph

struct GenGraphArgs {
  int n_x = 100, n_y = 300, deg_x = 9, deg_y = 3;
  int weight_low = 1, weight_high = 10;
  std::uint64_t seed = 1;
  std::string out;
};

void cmd_gen_graph(const GenGraphArgs& a) {
  log_info("config: " + json{{"command", "gen-graph"},
                             {"nx", a.n_x},
                             {"ny", a.n_y},
                             {"dx", a.deg_x},
                             {"dy", a.deg_y},
                             {"weight_low", a.weight_low},
                             {"weight_high", a.weight_high},
                             {"seed", a.seed},
                             {"out", a.out.empty() ? "<stdout>" : a.out}}
                            .dump());
  BipartiteGraph g =
      generate_biregular(a.n_x, a.n_y, a.deg_x, a.deg_y, splitmix64(a.seed + 1));
  g.x_weights =
      sample_integer_weights(a.n_x, a.weight_low, a.weight_high, splitmix64(a.seed + 2));
  g.y_weights =
      sample_integer_weights(a.n_y, a.weight_low, a.weight_high, splitmix64(a.seed + 3));
  write_output(a.out, graph_to_json_string(g));
  log_debug("generated graph with " + std::to_string(g.edge_count()) + " edges");
}

// ---------------------------------------------------------------------------
// solve

struct SolveArgs {
  std::string graph_path;
  std::string solver = "g-greedy";
  double budget = 100.0;
  BPParams params;
  std::string config_path;
  std::string out;
};

void cmd_solve(const SolveArgs& a, const CLI::App* cmd) {
  SolveArgs eff = a;
  if (!a.config_path.empty()) {
    const json j = json::parse(read_file(a.config_path), nullptr, true, true);
    if (j.contains("solver") && cmd->count("--solver") == 0)
      eff.solver = j.at("solver").get<std::string>();
    if (j.contains("budget") && cmd->count("--budget") == 0)
      eff.budget = j.at("budget").get<double>();
    if (j.contains("beta") && cmd->count("--beta") == 0)
      eff.params.beta = j.at("beta").get<double>();
    if (j.contains("mu") && cmd->count("--mu") == 0)
      eff.params.mu = j.at("mu").get<double>();
    if (j.contains("iterations") && cmd->count("--iters") == 0)
      eff.params.iterations = j.at("iterations").get<int>();
    if (j.contains("damping") && cmd->count("--damping") == 0)
      eff.params.damping = j.at("damping").get<double>();
  }
  const SolverKind kind = solver_kind_from_name(eff.solver);

  json config{{"command", "solve"},
              {"graph", eff.graph_path},
              {"solver", eff.solver},
              {"budget", eff.budget}};
  if (kind == SolverKind::kBp) {
    config["beta"] = eff.params.beta;
    config["mu"] = eff.params.mu;
    config["iterations"] = eff.params.iterations;
    config["damping"] = eff.params.damping;
  }
  log_info("config: " + config.dump());

  CoverInstance inst;
  inst.graph = load_graph(eff.graph_path);
  inst.budget = eff.budget;

  json out{{"command", "solve"},
           {"graph", eff.graph_path},
           {"solver", eff.solver},
           {"budget", eff.budget}};
  if (kind == SolverKind::kBp) {
    const BPSolveResult res = bp_solve(inst, eff.params);
    out.update(solution_to_json(res.solution));
    out["params"] = json{{"beta", eff.params.beta},
                         {"mu", eff.params.mu},
                         {"iterations", eff.params.iterations},
                         {"damping", eff.params.damping}};
    out["diagnostics"] = json{{"iteration_count", res.iteration_count},
                              {"last_max_delta", res.last_max_delta}};
  } else {
    const CoverSolution sol =
        kind == SolverKind::kGGreedy ? g_greedy(inst) : simple_greedy(inst);
    out.update(solution_to_json(sol));
  }
  write_output(a.out, out.dump(2) + "\n");
}

// ---------------------------------------------------------------------------
// oracle

struct OracleArgs {
  std::string graph_path;
  double budget = 100.0;
  OracleLimits limits;
  std::string out;
};

void cmd_oracle(const OracleArgs& a) {
  log_info("config: " + json{{"command", "oracle"},
                             {"graph", a.graph_path},
                             {"budget", a.budget},
                             {"max_nodes", a.limits.max_x_nodes},
                             {"time_budget", a.limits.time_budget_seconds}}
                            .dump());
  CoverInstance inst;
  inst.graph = load_graph(a.graph_path);
  inst.budget = a.budget;
  const OracleResult res = exact_solve(inst, a.limits);
  json out{{"command", "oracle"},
           {"graph", a.graph_path},
           {"budget", a.budget},
           {"optimal", res.optimal},
           {"nodes_explored", res.nodes_explored}};
  out.update(solution_to_json(res.solution));
  write_output(a.out, out.dump(2) + "\n");
}

// ---------------------------------------------------------------------------
// sweep

struct SweepArgs {
  std::string config_path;
  std::string out;
  double beta = 0, budget = 0, damping = 0, mu = 0;
  int iterations = 0, threads = 0;
  std::uint64_t seed = 0;
};

void cmd_sweep(const SweepArgs& a, const CLI::App* cmd) {
  SweepConfig cfg = sweep_config_from_json(read_file(a.config_path), a.config_path);
  if (cmd->count("--beta") > 0) cfg.beta = a.beta;
  if (cmd->count("--budget") > 0) cfg.budget = a.budget;
  if (cmd->count("--damping") > 0) cfg.damping = a.damping;
  if (cmd->count("--iters") > 0) cfg.iterations = a.iterations;
  if (cmd->count("--threads") > 0) cfg.threads = a.threads;
  if (cmd->count("--seed") > 0) cfg.master_seed = a.seed;
  if (cmd->count("--mu") > 0) cfg.mu_grid = {a.mu};
  validate_sweep_config(cfg);
  log_info("config: " + sweep_config_to_json(cfg));

  const std::vector<SweepRow> rows = cfg.mode == SweepMode::kRandomGraph
                                         ? random_graph_sweep(cfg)
                                         : corpus_sweep(cfg);
  write_output(a.out, sweep_rows_to_csv(rows));
  log_debug("sweep produced " + std::to_string(rows.size()) + " rows");
}

// ---------------------------------------------------------------------------
// summarize

struct SummarizeArgs {
  std::string corpus;
  std::string background;
  std::string cluster;  // empty = all clusters
  std::string solver = "bp";
  double budget = 100.0;
  BPParams params{45.0, 0.03, 150, 0.0, 1e-6};
  PreprocessFlags preprocess;
  std::string out;
};

void cmd_summarize(const SummarizeArgs& a) {
  const PreprocessConfig cfg = a.preprocess.build();
  const SolverKind kind = solver_kind_from_name(a.solver);

  json config{{"command", "summarize"},
              {"corpus", a.corpus},
              {"background", a.background.empty() ? "<none>" : a.background},
              {"cluster", a.cluster.empty() ? "<all>" : a.cluster},
              {"solver", a.solver},
              {"budget", a.budget},
              {"preprocess", a.preprocess.to_json()}};
  if (kind == SolverKind::kBp) {
    config["beta"] = a.params.beta;
    config["mu"] = a.params.mu;
    config["iterations"] = a.params.iterations;
    config["damping"] = a.params.damping;
  }
  log_info("config: " + config.dump());

  const std::vector<Cluster> corpus = load_corpus(a.corpus, cfg);
  const std::vector<Cluster> background =
      a.background.empty() ? std::vector<Cluster>{} : load_corpus(a.background, cfg);
  const std::vector<TermWeights> weights = compute_tfidf(corpus, background, cfg);
  log_debug("loaded " + std::to_string(corpus.size()) + " clusters");

  bool found = false;
  std::string text;
  json report = json::array();
  for (std::size_t ci = 0; ci < corpus.size(); ++ci) {
    if (!a.cluster.empty() && corpus[ci].id != a.cluster) continue;
    found = true;
    const BuiltInstance built =
        build_cover_graph(corpus[ci], weights[ci], a.budget, cfg);
    const SummaryResult res = summarize(built, kind, a.params);

    text += "# cluster " + corpus[ci].id + "\n";
    for (const auto& s : res.sentences) text += s + "\n";
    text += "\n";

    json entry{{"cluster", corpus[ci].id}, {"sentences", res.sentences}};
    entry.update(solution_to_json(res.solution));
    if (!corpus[ci].references.empty()) {
      std::vector<std::string> tokens;
      for (int i : res.selected_x)
        for (const auto& t : built.sentences[i].tokens) tokens.push_back(t);
      entry["rouge1"] = rouge1_multi(tokens, corpus[ci].references);
    }
    report.push_back(std::move(entry));
  }
  if (!found) throw std::runtime_error("cluster '" + a.cluster + "' not found");

  std::cout << text;
  if (!a.out.empty()) write_output(a.out, report.dump(2) + "\n");
}

// ---------------------------------------------------------------------------
// rouge

struct RougeArgs {
  std::string summary_path;
  std::vector<std::string> ref_paths;
  PreprocessFlags preprocess;
  bool set_mode = false;
  std::string out;
};

void cmd_rouge(const RougeArgs& a) {
  if (a.ref_paths.empty())
    throw std::invalid_argument("at least one --refs file is required");
  const PreprocessConfig cfg = a.preprocess.build();
  const RougeMode mode = a.set_mode ? RougeMode::kSet : RougeMode::kMultiset;
  log_info("config: " + json{{"command", "rouge"},
                             {"summary", a.summary_path},
                             {"refs", a.ref_paths},
                             {"mode", a.set_mode ? "set" : "multiset"},
                             {"preprocess", a.preprocess.to_json()}}
                            .dump());

  const std::vector<std::string> summary =
      tokenize_normalize(read_file(a.summary_path), cfg);
  json per_ref = json::array();
  double sum = 0.0;
  for (const auto& path : a.ref_paths) {
    const std::vector<std::string> ref = tokenize_normalize(read_file(path), cfg);
    const RougeScore score = rouge1(summary, ref, mode);
    sum += score.value;
    per_ref.push_back(json{{"reference", path},
                           {"value", score.value},
                           {"match_count", score.match_count},
                           {"reference_length", score.reference_length}});
  }
  const json out{{"command", "rouge"},
                 {"rouge1", sum / static_cast<double>(a.ref_paths.size())},
                 {"mode", a.set_mode ? "set" : "multiset"},
                 {"per_reference", per_ref}};
  write_output(a.out, out.dump(2) + "\n");
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
  CLI::App app{"budgeted maximum coverage: solvers, summarization, evaluation"};
  app.require_subcommand(1);

  GenGraphArgs gen_args;
  auto* gen = app.add_subcommand("gen-graph",
                                 "generate a biregular bipartite graph with "
                                 "integer weights");
  gen->add_option("--nx", gen_args.n_x, "X-node count")->capture_default_str();
  gen->add_option("--ny", gen_args.n_y, "Y-node count")->capture_default_str();
  gen->add_option("--dx", gen_args.deg_x, "X degree")->capture_default_str();
  gen->add_option("--dy", gen_args.deg_y, "Y degree")->capture_default_str();
  gen->add_option("--weight-low", gen_args.weight_low, "weight lower bound")
      ->capture_default_str();
  gen->add_option("--weight-high", gen_args.weight_high, "weight upper bound")
      ->capture_default_str();
  gen->add_option("--seed", gen_args.seed, "RNG seed")->capture_default_str();
  gen->add_option("--out", gen_args.out, "output file (default: stdout)");
  gen->callback([&] { cmd_gen_graph(gen_args); });

  SolveArgs solve_args;
  auto* solve = app.add_subcommand("solve", "run a solver on a graph file");
  solve->add_option("--graph", solve_args.graph_path, "graph JSON file")
      ->required()
      ->check(CLI::ExistingFile);
  solve->add_option("--solver", solve_args.solver, "greedy | g-greedy | bp")
      ->check(CLI::IsMember({"greedy", "g-greedy", "bp"}))
      ->capture_default_str();
  solve->add_option("--budget", solve_args.budget, "cost budget K")
      ->capture_default_str();
  solve->add_option("--beta", solve_args.params.beta, "inverse temperature (bp)")
      ->capture_default_str();
  solve->add_option("--mu", solve_args.params.mu, "chemical potential (bp)")
      ->capture_default_str();
  solve->add_option("--iters", solve_args.params.iterations, "BP sweeps")
      ->capture_default_str();
  solve->add_option("--damping", solve_args.params.damping, "message damping [0,1)")
      ->capture_default_str();
  solve->add_option("--config", solve_args.config_path,
                    "JSON config with solver/budget/beta/mu/iterations/damping "
                    "defaults (flags win)")
      ->check(CLI::ExistingFile);
  solve->add_option("--out", solve_args.out, "output file (default: stdout)");
  solve->callback([&] { cmd_solve(solve_args, solve); });

  OracleArgs oracle_args;
  auto* oracle = app.add_subcommand("oracle", "exact optimum by branch-and-bound");
  oracle->add_option("--graph", oracle_args.graph_path, "graph JSON file")
      ->required()
      ->check(CLI::ExistingFile);
  oracle->add_option("--budget", oracle_args.budget, "cost budget K")
      ->capture_default_str();
  oracle->add_option("--max-nodes", oracle_args.limits.max_x_nodes,
                     "refuse instances with more X-nodes")
      ->capture_default_str();
  oracle->add_option("--time-budget", oracle_args.limits.time_budget_seconds,
                     "wall-clock cap in seconds")
      ->capture_default_str();
  oracle->add_option("--out", oracle_args.out, "output file (default: stdout)");
  oracle->callback([&] { cmd_oracle(oracle_args); });

  SweepArgs sweep_args;
  auto* sweep = app.add_subcommand(
      "sweep",
      "mu sweep from a JSON config. Reference corpus configuration: K=100 "
      "with beta=45 when stop-word removal is on, beta=80 when it is off");
  sweep->add_option("--config", sweep_args.config_path, "sweep config JSON")
      ->required()
      ->check(CLI::ExistingFile);
  sweep->add_option("--out", sweep_args.out, "output CSV (default: stdout)");
  sweep->add_option("--beta", sweep_args.beta, "override beta");
  sweep->add_option("--budget", sweep_args.budget, "override budget");
  sweep->add_option("--damping", sweep_args.damping, "override damping");
  sweep->add_option("--iters", sweep_args.iterations, "override iterations");
  sweep->add_option("--threads", sweep_args.threads, "override worker threads");
  sweep->add_option("--seed", sweep_args.seed, "override master seed");
  sweep->add_option("--mu", sweep_args.mu, "replace the mu grid by one value");
  sweep->callback([&] { cmd_sweep(sweep_args, sweep); });

  SummarizeArgs sum_args;
  auto* summ = app.add_subcommand("summarize",
                                  "extractive summaries for corpus clusters");
  summ->add_option("--corpus", sum_args.corpus, "corpus root directory")
      ->required()
      ->check(CLI::ExistingDirectory);
  summ->add_option("--background", sum_args.background,
                   "extra corpus directory joining the IDF pool")
      ->check(CLI::ExistingDirectory);
  summ->add_option("--cluster", sum_args.cluster, "only this cluster id");
  summ->add_option("--solver", sum_args.solver, "greedy | g-greedy | bp")
      ->check(CLI::IsMember({"greedy", "g-greedy", "bp"}))
      ->capture_default_str();
  summ->add_option("--budget", sum_args.budget, "word budget K")
      ->capture_default_str();
  summ->add_option("--beta", sum_args.params.beta, "inverse temperature (bp)")
      ->capture_default_str();
  summ->add_option("--mu", sum_args.params.mu, "chemical potential (bp)")
      ->capture_default_str();
  summ->add_option("--iters", sum_args.params.iterations, "BP sweeps")
      ->capture_default_str();
  summ->add_option("--damping", sum_args.params.damping, "message damping [0,1)")
      ->capture_default_str();
  sum_args.preprocess.add_to(summ);
  summ->add_option("--out", sum_args.out, "also write a JSON report here");
  summ->callback([&] { cmd_summarize(sum_args); });

  RougeArgs rouge_args;
  auto* rouge = app.add_subcommand("rouge", "ROUGE-1 of a summary against references");
  rouge->add_option("--summary", rouge_args.summary_path, "summary text file")
      ->required()
      ->check(CLI::ExistingFile);
  rouge->add_option("--refs", rouge_args.ref_paths, "reference text files")
      ->check(CLI::ExistingFile);
  rouge_args.preprocess.add_to(rouge);
  rouge->add_flag("--set-mode", rouge_args.set_mode,
                  "distinct-type intersection instead of clipped counts");
  rouge->add_option("--out", rouge_args.out, "output file (default: stdout)");
  rouge->callback([&] { cmd_rouge(rouge_args); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}

}  // namespace maxcov
