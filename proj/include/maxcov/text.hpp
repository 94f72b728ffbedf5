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

#ifndef MAXCOV_TEXT_HPP_
#define MAXCOV_TEXT_HPP_

#include <map>
#include <string>
#include <unordered_set>
#include <vector>

#include "maxcov/bp.hpp"
#include "maxcov/graph.hpp"
#include "maxcov/stopwords.hpp"

namespace maxcov {

struct Document {
  std::string id;
  std::vector<std::string> sentences;  // source order preserved
  std::string source_path;
};

struct Cluster {
  std::string id;
  std::vector<Document> documents;
  std::vector<std::vector<std::string>> references;  // preprocessed token lists
};

struct SentenceRecord {
  std::string document_id;
  int position = 0;  // 0 = first sentence of its document
  std::string raw_text;
  std::vector<std::string> tokens;
  int word_count = 0;  // token count after preprocessing; the cover cost c_i
};

// term -> nonnegative weight; ordered for deterministic iteration.
using TermWeights = std::map<std::string, double>;

struct PreprocessConfig {
  bool remove_stopwords = true;
  std::unordered_set<std::string> stopwords = builtin_stopwords();
  bool apply_stemming = true;
  double first_sentence_boost = 1.5;  // must be >= 1
};

// Splits text at sentence-final . ! ? followed by whitespace and an
// uppercase letter or opening quote. A fixed abbreviation list ("dr.",
// "e.g.", ...) suppresses false breaks. Empty text gives an empty list.
std::vector<std::string> split_sentences(const std::string& text);

// Lowercases, strips punctuation (keeping ASCII letters and digits), splits
// on whitespace, then optionally drops stop words and Porter-stems what
// remains, in that order.
std::vector<std::string> tokenize_normalize(const std::string& sentence,
                                            const PreprocessConfig& cfg);

// All sentences of the cluster in (document order, position) order, with
// their preprocessed tokens. Empty-token sentences are kept here; graph
// construction skips them.
std::vector<SentenceRecord> preprocess_cluster(const Cluster& cluster,
                                               const PreprocessConfig& cfg);

// Cluster-level TF times corpus-document-level IDF (natural log), with the
// first-sentence boost applied per term. Background clusters join the IDF
// document pool but get no weights of their own.
std::vector<TermWeights> compute_tfidf(const std::vector<Cluster>& clusters,
                                       const std::vector<Cluster>& background,
                                       const PreprocessConfig& cfg);

struct BuiltInstance {
  CoverInstance instance;
  std::vector<SentenceRecord> sentences;  // X id -> sentence
  std::vector<std::string> terms;         // Y id -> term
};

// One X-node per nonempty sentence (cost = word_count), one Y-node per
// distinct term (weight from `weights`), an edge where the term occurs in
// the sentence. Throws if `weights` is missing any cluster term.
BuiltInstance build_cover_graph(const Cluster& cluster, const TermWeights& weights,
                                double budget, const PreprocessConfig& cfg);

enum class SolverKind { kGreedy, kGGreedy, kBp };

SolverKind solver_kind_from_name(const std::string& name);
std::string solver_kind_name(SolverKind kind);

struct SummaryResult {
  std::vector<std::string> sentences;  // raw texts, (document id, position) order
  std::vector<int> selected_x;         // X ids into BuiltInstance.sentences
  CoverSolution solution;
};

// Runs the chosen solver on the built instance and orders the picked
// sentences for reading. bp_params is consulted only for SolverKind::kBp.
SummaryResult summarize(const BuiltInstance& built, SolverKind solver,
                        const BPParams& bp_params);

// Convenience overload: weights from this cluster alone (its documents form
// the whole IDF pool), then build and solve.
SummaryResult summarize(const Cluster& cluster, SolverKind solver,
                        const BPParams& bp_params, const PreprocessConfig& cfg,
                        double budget);

// Corpus layout: root/<cluster>/docs/*.txt plus optional root/<cluster>/refs/
// *.txt reference summaries, tokenized with the same config. Directories and
// files are visited in sorted order, so loading is deterministic.
std::vector<Cluster> load_corpus(const std::string& root,
                                 const PreprocessConfig& cfg);

}  // namespace maxcov

#endif  // MAXCOV_TEXT_HPP_
