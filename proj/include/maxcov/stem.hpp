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

#ifndef MAXCOV_STEM_HPP_
#define MAXCOV_STEM_HPP_

#include <string>

namespace maxcov {

// Porter suffix-stripping stemmer, the classic five-step variant.
// Expects a lowercase word; words of one or two characters pass through
// unchanged. Non-letters are treated as consonants, so tokens with stray
// digits still stem deterministically.
std::string porter_stem(std::string word);

}  // namespace maxcov

#endif  // MAXCOV_STEM_HPP_
