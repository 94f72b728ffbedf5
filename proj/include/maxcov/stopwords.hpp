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

#ifndef MAXCOV_STOPWORDS_HPP_
#define MAXCOV_STOPWORDS_HPP_

#include <string>
#include <unordered_set>

namespace maxcov {

// Fixed English stop-word list (151 entries). Contractions appear without
// apostrophes because the tokenizer strips punctuation before lookup.
// data/stopwords.txt ships the same list, one word per line.
const std::unordered_set<std::string>& builtin_stopwords();

// Loads a stop-word file: one lowercase word per line, blank lines ignored.
// Throws std::runtime_error on unreadable files.
std::unordered_set<std::string> load_stopwords(const std::string& path);

}  // namespace maxcov

#endif  // MAXCOV_STOPWORDS_HPP_
