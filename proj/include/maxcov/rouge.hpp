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

#ifndef MAXCOV_ROUGE_HPP_
#define MAXCOV_ROUGE_HPP_

#include <string>
#include <vector>

namespace maxcov {

struct RougeScore {
  double value = 0.0;       // match_count / reference_length
  int match_count = 0;
  int reference_length = 0;
};

enum class RougeMode {
  kMultiset,  // clipped token counting, the standard ROUGE-1 recall
  kSet,       // distinct-type intersection, for sensitivity analysis
};

// Unigram recall of `summary` against one reference. In multiset mode each
// reference token occurrence matches at most one summary occurrence; in set
// mode both sides collapse to types first. Empty reference is an error.
RougeScore rouge1(const std::vector<std::string>& summary,
                  const std::vector<std::string>& reference,
                  RougeMode mode = RougeMode::kMultiset);

// Arithmetic mean of rouge1 over all references; the list must be nonempty.
double rouge1_multi(const std::vector<std::string>& summary,
                    const std::vector<std::vector<std::string>>& references,
                    RougeMode mode = RougeMode::kMultiset);

// Unweighted mean over per-cluster scores; the list must be nonempty.
double corpus_rouge(const std::vector<double>& cluster_scores);

}  // namespace maxcov

#endif  // MAXCOV_ROUGE_HPP_
