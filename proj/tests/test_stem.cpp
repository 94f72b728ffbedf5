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

#include <string>
#include <utility>
#include <vector>

#include "doctest.h"
#include "maxcov/stem.hpp"

using maxcov::porter_stem;

namespace {

// Frozen input/output pairs covering every rule family of the stemmer.
const std::vector<std::pair<std::string, std::string>> kVectors = {
    // Step 1a: plurals.
    {"caresses", "caress"},
    {"ponies", "poni"},
    {"ties", "ti"},
    {"caress", "caress"},
    {"cats", "cat"},
    // Step 1b: -eed, -ed, -ing and cleanup.
    {"feed", "feed"},
    {"agreed", "agre"},
    {"plastered", "plaster"},
    {"bled", "bled"},
    {"motoring", "motor"},
    {"sing", "sing"},
    {"conflated", "conflat"},
    {"troubled", "troubl"},
    {"sized", "size"},
    {"hopping", "hop"},
    {"tanned", "tan"},
    {"falling", "fall"},
    {"hissing", "hiss"},
    {"fizzed", "fizz"},
    {"failing", "fail"},
    {"filing", "file"},
    // Step 1c: y to i.
    {"happy", "happi"},
    {"sky", "sky"},
    {"enjoy", "enjoi"},
    // Step 2: suffix ladders.
    {"relational", "relat"},
    {"conditional", "condit"},
    {"rational", "ration"},
    {"valenci", "valenc"},
    {"hesitanci", "hesit"},
    {"digitizer", "digit"},
    {"conformabli", "conform"},
    {"radicalli", "radic"},
    {"differentli", "differ"},
    {"vileli", "vile"},
    {"analogousli", "analog"},
    {"vietnamization", "vietnam"},
    {"predication", "predic"},
    {"operator", "oper"},
    {"feudalism", "feudal"},
    {"decisiveness", "decis"},
    {"hopefulness", "hope"},
    {"callousness", "callous"},
    {"formaliti", "formal"},
    {"sensitiviti", "sensit"},
    {"sensibiliti", "sensibl"},
    // Step 3.
    {"triplicate", "triplic"},
    {"formative", "form"},
    {"formalize", "formal"},
    {"electriciti", "electr"},
    {"electrical", "electr"},
    {"hopeful", "hope"},
    {"goodness", "good"},
    // Step 4.
    {"revival", "reviv"},
    {"allowance", "allow"},
    {"inference", "infer"},
    {"airliner", "airlin"},
    {"gyroscopic", "gyroscop"},
    {"adjustable", "adjust"},
    {"defensible", "defens"},
    {"irritant", "irrit"},
    {"replacement", "replac"},
    {"adjustment", "adjust"},
    {"dependent", "depend"},
    {"adoption", "adopt"},
    {"homologou", "homolog"},
    {"communism", "commun"},
    {"activate", "activ"},
    {"angulariti", "angular"},
    {"homologous", "homolog"},
    {"effective", "effect"},
    {"bowdlerize", "bowdler"},
    // Step 5a and 5b.
    {"probate", "probat"},
    {"rate", "rate"},
    {"cease", "ceas"},
    {"controll", "control"},
    {"roll", "roll"},
    // Chained behaviour.
    {"running", "run"},
    {"runs", "run"},
    {"generalizations", "gener"},
    {"oscillators", "oscil"},
    {"was", "wa"},
    {"this", "thi"},
    {"died", "di"},
    {"die", "die"},
};

}  // namespace

TEST_CASE("porter_stem matches the frozen vector table") {
  for (const auto& [in, out] : kVectors) {
    CAPTURE(in);
    CHECK(porter_stem(in) == out);
  }
}

TEST_CASE("words of length two or less are untouched") {
  for (const std::string w : {"a", "be", "is", "as", "ox", "i", ""}) {
    CHECK(porter_stem(w) == w);
  }
}

TEST_CASE("already-reduced stems are fixed points") {
  for (const std::string w : {"run", "cat", "fall", "motor", "plaster",
                              "infer", "depend", "roll", "gener"}) {
    CAPTURE(w);
    CHECK(porter_stem(w) == w);
  }
}
