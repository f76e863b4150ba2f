// Copyright 2026 The branchpol Authors.
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

// Compositional sentence scoring over head-child branches.
//
// Branches are evaluated bottom-up. Within a branch the head collects its
// own prior polarity plus whatever its dependents carry up, intensifier
// dependents scale that sum by (1 + b), and a negator dependent then shifts
// the scaled value by 4 towards the opposite sign:
//
//   score = a * (1 + b)                         (no negator)
//   score = a * (1 + b) + sign(a * (1 + b)) * -4  (negator present)
//
// The virtual root passes its single child's score through unchanged, and
// that value is the sentence score.

#ifndef BRANCHPOL_SCORER_H_
#define BRANCHPOL_SCORER_H_

#include <string>
#include <string_view>
#include <vector>

#include "branchpol/conllu.h"
#include "branchpol/lexicon.h"
#include "json.hpp"

namespace branchpol {

// Amount a negator moves a non-zero branch score towards the other sign.
inline constexpr double kNegationShift = 4.0;

// Lowercases input text before it is handed to a parser.
std::string Preprocess(std::string_view text);

// Scales by (1 + boost) first, then applies negation to the scaled value.
// Requires 1 + boost > 0. Negating 0 yields 0.
double IntensifyThenNegate(double score, double boost, bool negated);

struct BranchTrace {
  int head_id = 0;
  double base_score = 0;  // own prior + everything the children carry up
  double boost_sum = 0;   // sum of intensifier children's b
  bool negated = false;
  double result = 0;

  bool operator==(const BranchTrace &) const = default;
};

struct SentenceScore {
  double score = 0;
  std::vector<BranchTrace> traces;  // in evaluation order, head 0 last
};

SentenceScore ScoreSentence(const Sentence &sentence,
                            const LexiconSet &lexicons);

// {"head_id", "base_score", "boost_sum", "negated", "result"}
void to_json(nlohmann::json &j, const BranchTrace &trace);

}  // namespace branchpol

#endif  // BRANCHPOL_SCORER_H_
