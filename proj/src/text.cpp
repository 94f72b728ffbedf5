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

#include "maxcov/text.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <utility>

#include "maxcov/greedy.hpp"
#include "maxcov/stem.hpp"

namespace maxcov {

namespace {

namespace fs = std::filesystem;

bool ascii_upper(char c) { return c >= 'A' && c <= 'Z'; }
bool ascii_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}
bool ascii_alnum(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9');
}
char ascii_lower(char c) { return ascii_upper(c) ? static_cast<char>(c + 32) : c; }

const std::unordered_set<std::string>& abbreviations() {
  static const std::unordered_set<std::string> set = {
      "mr",  "mrs",  "ms",   "dr",   "prof", "rev",  "gen",  "sen", "rep",
      "st",  "mt",   "jr",   "sr",   "etc",  "vs",   "inc",  "ltd", "co",
      "corp", "dept", "univ", "fig",  "figs", "eq",   "eqs",  "no",  "nos",
      "vol", "vols", "al",   "approx", "e.g", "i.e",  "u.s",  "u.k", "a.m",
      "p.m", "jan",  "feb",  "mar",  "apr",  "jun",  "jul",  "aug", "sep",
      "sept", "oct", "nov",  "dec",
  };
  return set;
}

// The word (letters and interior dots) ending right before text[dot].
// Single uppercase letters count as initials and suppress the break.
bool protected_abbreviation(const std::string& text, std::size_t dot) {
  std::size_t b = dot;
  while (b > 0) {
    const char c = text[b - 1];
    if ((c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '.')
      --b;
    else
      break;
  }
  std::string tok = text.substr(b, dot - b);
  while (!tok.empty() && tok.front() == '.') tok.erase(tok.begin());
  if (tok.empty()) return false;
  if (tok.size() == 1 && ascii_upper(tok[0])) return true;
  for (char& c : tok) c = ascii_lower(c);
  return abbreviations().count(tok) > 0;
}

std::string trimmed(const std::string& text, std::size_t from, std::size_t to) {
  while (from < to && ascii_space(text[from])) ++from;
  while (to > from && ascii_space(text[to - 1])) --to;
  return text.substr(from, to - from);
}

std::string read_text_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open file: " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return std::move(buf).str();
}

std::vector<fs::path> sorted_entries(const fs::path& dir, bool dirs_only) {
  std::vector<fs::path> out;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (dirs_only ? entry.is_directory() : entry.is_regular_file())
      out.push_back(entry.path());
  }
  std::sort(out.begin(), out.end());
  return out;
}

void validate_config(const PreprocessConfig& cfg) {
  if (!(cfg.first_sentence_boost >= 1.0))
    throw std::invalid_argument("first_sentence_boost must be >= 1");
}

}  // namespace

std::vector<std::string> split_sentences(const std::string& text) {
  std::vector<std::string> out;
  const std::size_t n = text.size();
  std::size_t start = 0;
  std::size_t i = 0;
  while (i < n) {
    const char c = text[i];
    if (c != '.' && c != '!' && c != '?') {
      ++i;
      continue;
    }
    std::size_t j = i + 1;
    while (j < n && (text[j] == '"' || text[j] == '\'' || text[j] == ')' ||
                     text[j] == ']'))
      ++j;
    if (j < n && ascii_space(text[j])) {
      std::size_t k = j;
      while (k < n && ascii_space(text[k])) ++k;
      const bool starts_new = k < n && (ascii_upper(text[k]) || text[k] == '"' ||
                                        text[k] == '\'' || text[k] == '(');
      if (starts_new && !(c == '.' && protected_abbreviation(text, i))) {
        std::string sentence = trimmed(text, start, j);
        if (!sentence.empty()) out.push_back(std::move(sentence));
        start = k;
        i = k;
        continue;
      }
    }
    i = j;
  }
  std::string tail = trimmed(text, start, n);
  if (!tail.empty()) out.push_back(std::move(tail));
  return out;
}

std::vector<std::string> tokenize_normalize(const std::string& sentence,
                                            const PreprocessConfig& cfg) {
  std::vector<std::string> out;
  std::string cur;
  auto flush = [&] {
    if (cur.empty()) return;
    if (!(cfg.remove_stopwords && cfg.stopwords.count(cur) > 0))
      out.push_back(cfg.apply_stemming ? porter_stem(std::move(cur)) : std::move(cur));
    cur.clear();
  };
  for (const char c : sentence) {
    if (ascii_space(c)) {
      flush();
    } else if (ascii_alnum(c)) {
      cur += ascii_lower(c);
    }
    // Everything else (punctuation, non-ASCII bytes) is stripped.
  }
  flush();
  return out;
}

std::vector<SentenceRecord> preprocess_cluster(const Cluster& cluster,
                                               const PreprocessConfig& cfg) {
  if (cluster.documents.empty())
    throw std::invalid_argument("cluster '" + cluster.id + "' has no documents");
  std::vector<SentenceRecord> records;
  for (const Document& doc : cluster.documents) {
    for (std::size_t s = 0; s < doc.sentences.size(); ++s) {
      SentenceRecord rec;
      rec.document_id = doc.id;
      rec.position = static_cast<int>(s);
      rec.raw_text = doc.sentences[s];
      rec.tokens = tokenize_normalize(doc.sentences[s], cfg);
      rec.word_count = static_cast<int>(rec.tokens.size());
      records.push_back(std::move(rec));
    }
  }
  return records;
}

std::vector<TermWeights> compute_tfidf(const std::vector<Cluster>& clusters,
                                       const std::vector<Cluster>& background,
                                       const PreprocessConfig& cfg) {
  validate_config(cfg);
  if (clusters.empty()) throw std::invalid_argument("no clusters given");

  // Document frequencies over every document in clusters + background.
  using DocTokens = std::vector<std::vector<std::string>>;  // sentence -> tokens
  std::unordered_map<std::string, int> df;
  int doc_count = 0;
  std::vector<std::vector<DocTokens>> cluster_doc_tokens(clusters.size());
  auto count_doc = [&df, &doc_count](const DocTokens& sentence_tokens) {
    ++doc_count;
    std::set<std::string> seen;
    for (const auto& tokens : sentence_tokens)
      for (const auto& t : tokens) seen.insert(t);
    for (const auto& t : seen) ++df[t];
  };
  for (std::size_t ci = 0; ci < clusters.size(); ++ci) {
    if (clusters[ci].documents.empty())
      throw std::invalid_argument("cluster '" + clusters[ci].id +
                                  "' has no documents");
    for (const Document& doc : clusters[ci].documents) {
      DocTokens sentence_tokens;
      sentence_tokens.reserve(doc.sentences.size());
      for (const std::string& s : doc.sentences)
        sentence_tokens.push_back(tokenize_normalize(s, cfg));
      count_doc(sentence_tokens);
      cluster_doc_tokens[ci].push_back(std::move(sentence_tokens));
    }
  }
  for (const Cluster& bg : background) {
    for (const Document& doc : bg.documents) {
      DocTokens sentence_tokens;
      sentence_tokens.reserve(doc.sentences.size());
      for (const std::string& s : doc.sentences)
        sentence_tokens.push_back(tokenize_normalize(s, cfg));
      count_doc(sentence_tokens);
    }
  }

  std::vector<TermWeights> out(clusters.size());
  for (std::size_t ci = 0; ci < clusters.size(); ++ci) {
    std::map<std::string, long long> counts;
    std::set<std::string> first_sentence_terms;
    long long total = 0;
    auto& docs = cluster_doc_tokens[ci];
    for (std::size_t di = 0; di < docs.size(); ++di) {
      for (std::size_t si = 0; si < docs[di].size(); ++si) {
        for (const std::string& t : docs[di][si]) {
          ++counts[t];
          ++total;
          if (si == 0) first_sentence_terms.insert(t);
        }
      }
    }
    TermWeights& weights = out[ci];
    for (const auto& [term, count] : counts) {
      const double tf = static_cast<double>(count) / static_cast<double>(total);
      const double idf =
          std::log(static_cast<double>(doc_count) / static_cast<double>(df.at(term)));
      double w = tf * idf;
      if (first_sentence_terms.count(term) > 0) w *= cfg.first_sentence_boost;
      weights[term] = w;
    }
  }
  return out;
}

BuiltInstance build_cover_graph(const Cluster& cluster, const TermWeights& weights,
                                double budget, const PreprocessConfig& cfg) {
  validate_config(cfg);
  if (!(budget >= 0)) throw std::invalid_argument("budget must be nonnegative");
  std::vector<SentenceRecord> records = preprocess_cluster(cluster, cfg);

  BuiltInstance built;
  for (auto& rec : records)
    if (rec.word_count > 0) built.sentences.push_back(std::move(rec));

  std::set<std::string> vocab;
  for (const auto& rec : built.sentences)
    for (const auto& t : rec.tokens) vocab.insert(t);

  std::string missing;
  for (const auto& term : vocab) {
    auto it = weights.find(term);
    if (it == weights.end()) {
      missing += missing.empty() ? "" : ", ";
      missing += term;
    } else if (!(it->second >= 0)) {
      throw std::invalid_argument("negative weight for term '" + term + "'");
    }
  }
  if (!missing.empty())
    throw std::invalid_argument("term weights missing for: " + missing);

  std::unordered_map<std::string, int> term_id;
  for (const auto& term : vocab) {
    term_id.emplace(term, static_cast<int>(built.terms.size()));
    built.terms.push_back(term);
  }

  const int n_x = static_cast<int>(built.sentences.size());
  const int n_y = static_cast<int>(built.terms.size());
  std::vector<double> x_weights(n_x), y_weights(n_y);
  for (int i = 0; i < n_x; ++i)
    x_weights[i] = static_cast<double>(built.sentences[i].word_count);
  for (int a = 0; a < n_y; ++a) y_weights[a] = weights.at(built.terms[a]);

  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n_x; ++i) {
    std::set<std::string> distinct(built.sentences[i].tokens.begin(),
                                   built.sentences[i].tokens.end());
    for (const auto& t : distinct) edges.emplace_back(i, term_id.at(t));
  }

  built.instance.graph = make_bipartite_graph(n_x, n_y, x_weights, y_weights, edges);
  built.instance.budget = budget;
  return built;
}

SolverKind solver_kind_from_name(const std::string& name) {
  if (name == "greedy") return SolverKind::kGreedy;
  if (name == "g-greedy") return SolverKind::kGGreedy;
  if (name == "bp") return SolverKind::kBp;
  throw std::invalid_argument("unknown solver: " + name);
}

std::string solver_kind_name(SolverKind kind) {
  switch (kind) {
    case SolverKind::kGreedy: return "greedy";
    case SolverKind::kGGreedy: return "g-greedy";
    case SolverKind::kBp: return "bp";
  }
  throw std::invalid_argument("unknown solver kind");
}

SummaryResult summarize(const BuiltInstance& built, SolverKind solver,
                        const BPParams& bp_params) {
  SummaryResult res;
  switch (solver) {
    case SolverKind::kGreedy: res.solution = simple_greedy(built.instance); break;
    case SolverKind::kGGreedy: res.solution = g_greedy(built.instance); break;
    case SolverKind::kBp:
      res.solution = bp_solve(built.instance, bp_params).solution;
      break;
  }
  res.selected_x = res.solution.selected;
  std::vector<int> order = res.selected_x;
  std::sort(order.begin(), order.end(), [&built](int lhs, int rhs) {
    const SentenceRecord& a = built.sentences[lhs];
    const SentenceRecord& b = built.sentences[rhs];
    if (a.document_id != b.document_id) return a.document_id < b.document_id;
    return a.position < b.position;
  });
  for (int i : order) res.sentences.push_back(built.sentences[i].raw_text);
  return res;
}

SummaryResult summarize(const Cluster& cluster, SolverKind solver,
                        const BPParams& bp_params, const PreprocessConfig& cfg,
                        double budget) {
  const std::vector<TermWeights> weights =
      compute_tfidf({cluster}, {}, cfg);
  const BuiltInstance built = build_cover_graph(cluster, weights[0], budget, cfg);
  return summarize(built, solver, bp_params);
}

std::vector<Cluster> load_corpus(const std::string& root,
                                 const PreprocessConfig& cfg) {
  const fs::path root_path(root);
  if (!fs::is_directory(root_path))
    throw std::runtime_error("corpus root is not a directory: " + root);

  std::vector<Cluster> clusters;
  for (const fs::path& cluster_dir : sorted_entries(root_path, /*dirs_only=*/true)) {
    Cluster cluster;
    cluster.id = cluster_dir.filename().string();

    const fs::path docs_dir = cluster_dir / "docs";
    if (fs::is_directory(docs_dir)) {
      for (const fs::path& file : sorted_entries(docs_dir, /*dirs_only=*/false)) {
        if (file.extension() != ".txt") continue;
        Document doc;
        doc.id = file.filename().string();
        doc.source_path = file.string();
        doc.sentences = split_sentences(read_text_file(file));
        cluster.documents.push_back(std::move(doc));
      }
    }
    if (cluster.documents.empty())
      throw std::runtime_error("cluster '" + cluster.id +
                               "' has no documents under " + docs_dir.string());

    const fs::path refs_dir = cluster_dir / "refs";
    if (fs::is_directory(refs_dir)) {
      for (const fs::path& file : sorted_entries(refs_dir, /*dirs_only=*/false)) {
        if (file.extension() != ".txt") continue;
        cluster.references.push_back(tokenize_normalize(read_text_file(file), cfg));
      }
    }
    clusters.push_back(std::move(cluster));
  }
  if (clusters.empty())
    throw std::runtime_error("no clusters found under " + root);
  return clusters;
}

}  // namespace maxcov
