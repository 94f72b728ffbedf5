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

#include "maxcov/random_graph.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include "maxcov/rng.hpp"

namespace maxcov {

namespace {

constexpr int kMaxResamples = 100;
constexpr int kMaxFailedRepairsPerAttempt = 100;

// One stub-matching attempt: shuffle the Y-stub list against the fixed
// X-stub list, then swap duplicate pairings apart. Returns false when the
// failed-repair budget for this attempt is exhausted.
bool try_match(const std::vector<int>& x_stub, std::vector<int>& y_stub, Rng& rng,
               std::vector<std::pair<int, int>>& edges_out) {
  shuffle_vec(y_stub, rng);
  const std::size_t m = x_stub.size();

  std::map<std::pair<int, int>, int> count;
  for (std::size_t k = 0; k < m; ++k) ++count[{x_stub[k], y_stub[k]}];

  std::vector<std::size_t> dup_positions;
  for (std::size_t k = 0; k < m; ++k)
    if (count[{x_stub[k], y_stub[k]}] > 1) dup_positions.push_back(k);

  int failed_repairs = 0;
  while (!dup_positions.empty()) {
    const std::size_t k = dup_positions.back();
    if (count[{x_stub[k], y_stub[k]}] <= 1) {
      dup_positions.pop_back();
      continue;
    }
    // Double-edge swap: exchange the Y endpoints of positions k and j.
    bool repaired = false;
    for (int tries = 0; tries < 64; ++tries) {
      const std::size_t j = static_cast<std::size_t>(bounded_uint(rng, m));
      if (j == k) continue;
      const std::pair<int, int> ka{x_stub[k], y_stub[j]};
      const std::pair<int, int> jb{x_stub[j], y_stub[k]};
      auto it_ka = count.find(ka);
      auto it_jb = count.find(jb);
      if ((it_ka != count.end() && it_ka->second > 0) ||
          (it_jb != count.end() && it_jb->second > 0))
        continue;
      --count[{x_stub[k], y_stub[k]}];
      --count[{x_stub[j], y_stub[j]}];
      ++count[ka];
      ++count[jb];
      std::swap(y_stub[k], y_stub[j]);
      repaired = true;
      break;
    }
    if (!repaired) {
      if (++failed_repairs >= kMaxFailedRepairsPerAttempt) return false;
      // Leave k in place and retry it after reshuffling the queue tail.
      shuffle_vec(dup_positions, rng);
    } else {
      dup_positions.pop_back();
    }
  }

  edges_out.clear();
  edges_out.reserve(m);
  for (std::size_t k = 0; k < m; ++k) edges_out.emplace_back(x_stub[k], y_stub[k]);
  return true;
}

}  // namespace

BipartiteGraph generate_biregular(int n_x, int n_y, int deg_x, int deg_y,
                                  std::uint64_t seed) {
  if (n_x < 0 || n_y < 0 || deg_x < 0 || deg_y < 0)
    throw std::invalid_argument("node counts and degrees must be nonnegative");
  const long long stubs_x = static_cast<long long>(n_x) * deg_x;
  const long long stubs_y = static_cast<long long>(n_y) * deg_y;
  if (stubs_x != stubs_y)
    throw std::invalid_argument("handshake condition violated: n_x*deg_x = " +
                                std::to_string(stubs_x) + " but n_y*deg_y = " +
                                std::to_string(stubs_y));
  if (deg_x > n_y)
    throw std::invalid_argument("deg_x exceeds n_y; simple graph impossible");
  if (deg_y > n_x)
    throw std::invalid_argument("deg_y exceeds n_x; simple graph impossible");

  std::vector<int> x_stub;
  x_stub.reserve(static_cast<std::size_t>(stubs_x));
  for (int i = 0; i < n_x; ++i)
    for (int d = 0; d < deg_x; ++d) x_stub.push_back(i);
  std::vector<int> y_stub;
  y_stub.reserve(static_cast<std::size_t>(stubs_y));
  for (int a = 0; a < n_y; ++a)
    for (int d = 0; d < deg_y; ++d) y_stub.push_back(a);

  Rng rng = make_rng(seed);
  std::vector<std::pair<int, int>> edges;
  for (int attempt = 0; attempt < kMaxResamples; ++attempt) {
    if (try_match(x_stub, y_stub, rng, edges)) {
      return make_bipartite_graph(n_x, n_y, std::vector<double>(n_x, 1.0),
                                  std::vector<double>(n_y, 1.0), edges);
    }
  }
  throw std::runtime_error("biregular sampling failed after " +
                           std::to_string(kMaxResamples) + " resamples (" +
                           std::to_string(kMaxFailedRepairsPerAttempt) +
                           " failed repairs each)");
}

std::vector<double> sample_integer_weights(int n, long lo, long hi,
                                           std::uint64_t seed) {
  if (n < 0) throw std::invalid_argument("negative sample count");
  if (lo > hi)
    throw std::invalid_argument("empty weight range [" + std::to_string(lo) + ", " +
                                std::to_string(hi) + "]");
  Rng rng = make_rng(seed);
  std::vector<double> out(static_cast<std::size_t>(n));
  for (auto& w : out) w = static_cast<double>(uniform_int(rng, lo, hi));
  return out;
}

}  // namespace maxcov
