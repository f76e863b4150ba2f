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

#include "branchpol/scorer.h"

#include "branchpol/text.h"

namespace branchpol {
namespace {

double Sign(double x) { return (x > 0) - (x < 0); }

}  // namespace

std::string Preprocess(std::string_view text) { return Utf8Lowercase(text); }

double IntensifyThenNegate(double score, double boost, bool negated) {
  const double intensified = score * (1 + boost);
  if (!negated) return intensified;
  return intensified + Sign(intensified) * -kNegationShift;
}

SentenceScore ScoreSentence(const Sentence &sentence,
                            const LexiconSet &lexicons) {
  const int n = sentence.size();
  std::vector<TokenRole> roles(n + 1);
  for (const auto &t : sentence.tokens()) {
    roles[t.id] = ClassifyToken(t, lexicons);
  }

  // What each token carries up to its head: the branch result if it heads a
  // branch, its own prior if it is a sentiment leaf, otherwise 0.
  std::vector<double> carried(n + 1, 0.0);
  for (int id = 1; id <= n; ++id) {
    if (roles[id].is_sentiment()) carried[id] = roles[id].value;
  }

  const HeadChildMap map = BuildHeadChildMap(sentence);
  SentenceScore out;
  for (int head : BranchOrder(map)) {
    const auto &children = map.branches.at(head);
    BranchTrace trace;
    trace.head_id = head;
    if (head == 0) {
      trace.base_score = carried[children.front()];
      trace.result = trace.base_score;
      out.score = trace.result;
      out.traces.push_back(trace);
      continue;
    }
    trace.base_score = roles[head].is_sentiment() ? roles[head].value : 0.0;
    for (int c : children) {
      if (roles[c].is_intensifier()) trace.boost_sum += roles[c].value;
      if (roles[c].is_negator()) trace.negated = true;
      trace.base_score += carried[c];
    }
    trace.result =
        IntensifyThenNegate(trace.base_score, trace.boost_sum, trace.negated);
    carried[head] = trace.result;
    out.traces.push_back(trace);
  }
  return out;
}

void to_json(nlohmann::json &j, const BranchTrace &trace) {
  j = nlohmann::json{{"head_id", trace.head_id},
                     {"base_score", trace.base_score},
                     {"boost_sum", trace.boost_sum},
                     {"negated", trace.negated},
                     {"result", trace.result}};
}

}  // namespace branchpol
