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

#include "maxcov/stopwords.hpp"

#include <fstream>
#include <stdexcept>

namespace maxcov {

namespace {

constexpr const char* kStopwords[] = {
    "a",          "about",      "above",    "after",    "again",
    "against",    "all",        "am",       "an",       "and",
    "any",        "are",        "arent",    "as",       "at",
    "be",         "because",    "been",     "before",   "being",
    "below",      "between",    "both",     "but",      "by",
    "cannot",     "cant",       "could",    "couldnt",  "did",
    "didnt",      "do",         "does",     "doesnt",   "doing",
    "dont",       "down",       "during",   "each",     "few",
    "for",        "from",       "further",  "had",      "hadnt",
    "has",        "hasnt",      "have",     "havent",   "having",
    "he",         "her",        "here",     "heres",    "hers",
    "herself",    "hes",        "him",      "himself",  "his",
    "how",        "i",          "if",       "im",       "in",
    "into",       "is",         "isnt",     "it",       "its",
    "itself",     "ive",        "just",     "me",       "more",
    "most",       "my",         "myself",   "no",       "nor",
    "not",        "now",        "of",       "off",      "on",
    "once",       "only",       "or",       "other",    "our",
    "ours",       "ourselves",  "out",      "over",     "own",
    "same",       "she",        "shes",     "should",   "shouldnt",
    "so",         "some",       "such",     "than",     "that",
    "thats",      "the",        "their",    "theirs",   "them",
    "themselves", "then",       "there",    "theres",   "these",
    "they",       "theyre",     "this",     "those",    "through",
    "to",         "too",        "under",    "until",    "up",
    "very",       "was",        "wasnt",    "we",       "were",
    "werent",     "what",       "whats",    "when",     "where",
    "which",      "while",      "who",      "whom",     "why",
    "will",       "with",       "wont",     "would",    "wouldnt",
    "you",        "your",       "yours",    "yourself", "yourselves",
    "youre",
};

}  // namespace

const std::unordered_set<std::string>& builtin_stopwords() {
  static const std::unordered_set<std::string> set(std::begin(kStopwords),
                                                   std::end(kStopwords));
  return set;
}

std::unordered_set<std::string> load_stopwords(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open stop-word file: " + path);
  std::unordered_set<std::string> words;
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' '))
      line.pop_back();
    if (!line.empty()) words.insert(line);
  }
  return words;
}

}  // namespace maxcov
