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

#include "maxcov/stem.hpp"

#include <cstddef>
#include <string_view>
#include <utility>

namespace maxcov {

namespace {

struct Rule {
  std::string_view suffix;
  std::string_view replacement;
  bool stem_needs_s_or_t = false;
};

// Step 2 through 4 tables, longest suffix first within each table. Within a
// step only the longest matching suffix is considered; if its measure
// condition fails, the step leaves the word unchanged.
constexpr Rule kStep2[] = {
    {"ational", "ate"}, {"ization", "ize"}, {"iveness", "ive"},
    {"fulness", "ful"}, {"ousness", "ous"}, {"tional", "tion"},
    {"biliti", "ble"},  {"entli", "ent"},   {"ousli", "ous"},
    {"ation", "ate"},   {"alism", "al"},    {"aliti", "al"},
    {"iviti", "ive"},   {"enci", "ence"},   {"anci", "ance"},
    {"izer", "ize"},    {"abli", "able"},   {"alli", "al"},
    {"ator", "ate"},    {"eli", "e"},
};

constexpr Rule kStep3[] = {
    {"icate", "ic"}, {"ative", ""}, {"alize", "al"}, {"iciti", "ic"},
    {"ical", "ic"},  {"ness", ""},  {"ful", ""},
};

constexpr Rule kStep4[] = {
    {"ement", ""}, {"ance", ""}, {"ence", ""},
    {"able", ""},  {"ible", ""}, {"ment", ""},
    {"ant", ""},   {"ent", ""},  {"ion", "", /*stem_needs_s_or_t=*/true},
    {"ism", ""},   {"ate", ""},  {"iti", ""},
    {"ous", ""},   {"ive", ""},  {"ize", ""},
    {"al", ""},    {"er", ""},   {"ic", ""},
    {"ou", ""},
};

class Stemmer {
 public:
  explicit Stemmer(std::string word) : b_(std::move(word)) {}

  std::string run() {
    if (b_.size() <= 2) return std::move(b_);
    step1a();
    step1b();
    step1c();
    apply_table(kStep2, sizeof(kStep2) / sizeof(kStep2[0]), 0);
    apply_table(kStep3, sizeof(kStep3) / sizeof(kStep3[0]), 0);
    apply_table(kStep4, sizeof(kStep4) / sizeof(kStep4[0]), 1);
    step5();
    return std::move(b_);
  }

 private:
  // A letter is a consonant unless it is a, e, i, o, u, or a y that follows
  // a consonant. Leading y counts as a consonant.
  bool cons(std::size_t i) const {
    const char c = b_[i];
    if (c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u') return false;
    if (c == 'y') return i == 0 ? true : !cons(i - 1);
    return true;
  }

  // Measure m of the prefix b_[0, len): the number of VC groups in the
  // canonical form [C](VC)^m[V].
  int measure(std::size_t len) const {
    int n = 0;
    std::size_t i = 0;
    while (i < len && cons(i)) ++i;
    while (true) {
      while (i < len && !cons(i)) ++i;
      if (i == len) return n;
      ++n;
      while (i < len && cons(i)) ++i;
      if (i == len) return n;
    }
  }

  bool has_vowel(std::size_t len) const {
    for (std::size_t i = 0; i < len; ++i)
      if (!cons(i)) return true;
    return false;
  }

  bool double_cons_at_end() const {
    const std::size_t n = b_.size();
    return n >= 2 && b_[n - 1] == b_[n - 2] && cons(n - 1);
  }

  // consonant-vowel-consonant ending at index i, final consonant not w, x,
  // or y. Signals stems like "fil" whose trailing e was elided.
  bool cvc_at(std::size_t i) const {
    if (i < 2 || !cons(i) || cons(i - 1) || !cons(i - 2)) return false;
    const char c = b_[i];
    return c != 'w' && c != 'x' && c != 'y';
  }

  // Suffix test; on success stem_ holds the prefix length left of it.
  bool ends(std::string_view s) {
    if (s.size() > b_.size()) return false;
    if (b_.compare(b_.size() - s.size(), s.size(), s) != 0) return false;
    stem_ = b_.size() - s.size();
    return true;
  }

  void set_suffix(std::string_view s) {
    b_.resize(stem_);
    b_.append(s);
  }

  void apply_table(const Rule* rules, std::size_t count, int min_measure) {
    for (std::size_t r = 0; r < count; ++r) {
      if (!ends(rules[r].suffix)) continue;
      const bool stem_ok =
          !rules[r].stem_needs_s_or_t ||
          (stem_ > 0 && (b_[stem_ - 1] == 's' || b_[stem_ - 1] == 't'));
      if (stem_ok && measure(stem_) > min_measure) set_suffix(rules[r].replacement);
      return;
    }
  }

  void step1a() {
    if (b_.back() != 's') return;
    if (ends("sses")) {
      set_suffix("ss");
    } else if (ends("ies")) {
      set_suffix("i");
    } else if (b_[b_.size() - 2] != 's') {
      b_.pop_back();
    }
  }

  void step1b() {
    if (ends("eed")) {
      if (measure(stem_) > 0) b_.pop_back();
      return;
    }
    if ((ends("ed") || ends("ing")) && has_vowel(stem_)) {
      b_.resize(stem_);
      if (ends("at") || ends("bl") || ends("iz")) {
        b_ += 'e';
      } else if (double_cons_at_end()) {
        const char c = b_.back();
        if (c != 'l' && c != 's' && c != 'z') b_.pop_back();
      } else if (measure(b_.size()) == 1 && cvc_at(b_.size() - 1)) {
        b_ += 'e';
      }
    }
  }

  void step1c() {
    if (ends("y") && has_vowel(stem_)) b_.back() = 'i';
  }

  void step5() {
    if (b_.back() == 'e') {
      const std::size_t stem_len = b_.size() - 1;
      const int m = measure(stem_len);
      if (m > 1 || (m == 1 && !cvc_at(stem_len - 1))) b_.pop_back();
    }
    if (b_.back() == 'l' && double_cons_at_end() && measure(b_.size()) > 1)
      b_.pop_back();
  }

  std::string b_;
  std::size_t stem_ = 0;
};

}  // namespace

std::string porter_stem(std::string word) { return Stemmer(std::move(word)).run(); }

}  // namespace maxcov
