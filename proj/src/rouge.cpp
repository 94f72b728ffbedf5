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

#include "maxcov/rouge.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace maxcov {

RougeScore rouge1(const std::vector<std::string>& summary,
                  const std::vector<std::string>& reference, RougeMode mode) {
  if (reference.empty()) throw std::invalid_argument("empty reference summary");

  RougeScore score;
  if (mode == RougeMode::kMultiset) {
    std::unordered_map<std::string, int> ref_counts;
    for (const auto& t : reference) ++ref_counts[t];
    std::unordered_map<std::string, int> sum_counts;
    for (const auto& t : summary) ++sum_counts[t];
    for (const auto& [term, count] : ref_counts) {
      auto it = sum_counts.find(term);
      if (it != sum_counts.end()) score.match_count += std::min(count, it->second);
    }
    score.reference_length = static_cast<int>(reference.size());
  } else {
    std::unordered_set<std::string> ref_types(reference.begin(), reference.end());
    std::unordered_set<std::string> sum_types(summary.begin(), summary.end());
    for (const auto& t : ref_types)
      if (sum_types.count(t) > 0) ++score.match_count;
    score.reference_length = static_cast<int>(ref_types.size());
  }
  score.value = static_cast<double>(score.match_count) /
                static_cast<double>(score.reference_length);
  return score;
}

double rouge1_multi(const std::vector<std::string>& summary,
                    const std::vector<std::vector<std::string>>& references,
                    RougeMode mode) {
  if (references.empty()) throw std::invalid_argument("no reference summaries");
  double sum = 0.0;
  for (const auto& ref : references) sum += rouge1(summary, ref, mode).value;
  return sum / static_cast<double>(references.size());
}

double corpus_rouge(const std::vector<double>& cluster_scores) {
  if (cluster_scores.empty()) throw std::invalid_argument("no cluster scores");
  double sum = 0.0;
  for (double s : cluster_scores) sum += s;
  return sum / static_cast<double>(cluster_scores.size());
}

}  // namespace maxcov
