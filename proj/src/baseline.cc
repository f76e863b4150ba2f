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

#include "branchpol/baseline.h"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <vector>

namespace branchpol {
namespace {

bool IsPunctuation(const Token &t) {
  if (t.upos == "PUNCT" || t.upos == "SYM") return true;
  if (!t.upos.empty() && t.upos != "_") return false;
  return !t.form.empty() &&
         std::all_of(t.form.begin(), t.form.end(), [](unsigned char c) {
           return std::ispunct(c);
         });
}

}  // namespace

ProportionScore ScoreProximity(std::span<const Token> tokens,
                               const LexiconSet &lexicons, int window) {
  window = std::max(window, 1);
  std::vector<TokenRole> roles;
  roles.reserve(tokens.size());
  for (const auto &t : tokens) roles.push_back(ClassifyToken(t, lexicons));

  double positive = 0;
  double negative = 0;
  double neutral = 0;
  double sum = 0;
  for (size_t i = 0; i < tokens.size(); ++i) {
    const TokenRole &role = roles[i];
    if (role.kind == TokenRole::Kind::kNeutral) {
      if (!IsPunctuation(tokens[i])) neutral += 1;
      continue;
    }
    if (!role.is_sentiment()) continue;

    double valence = role.value;
    bool negated = false;
    for (int d = 1; d <= window && static_cast<size_t>(d) <= i; ++d) {
      const TokenRole &prev = roles[i - d];
      if (prev.is_intensifier()) {
        valence *= 1 + prev.value * std::pow(kBoostDecay, d - 1);
      } else if (prev.is_negator()) {
        negated = true;
      }
    }
    if (negated) valence *= kNegationScalar;

    sum += valence;
    if (valence > 0) {
      positive += valence;
    } else {
      negative += -valence;
    }
  }

  ProportionScore out;
  const double total = positive + negative + neutral;
  if (total > 0) {
    out.pos = positive / total;
    out.neg = negative / total;
    out.neu = neutral / total;
  }
  out.compound = sum / std::sqrt(sum * sum + kCompoundAlpha);
  return out;
}

std::string_view VerdictName(ThresholdVerdict verdict) {
  switch (verdict) {
    case ThresholdVerdict::kPositive: return "positive";
    case ThresholdVerdict::kNegative: return "negative";
    case ThresholdVerdict::kInconclusive: return "inconclusive";
  }
  return "unknown";
}

ThresholdVerdict ClassifyThreshold(const ProportionScore &score, double tau) {
  const auto passes = [tau](double share) {
    return tau >= 1 ? share >= 1 : share > tau;
  };
  const bool pos = passes(score.pos);
  const bool neg = passes(score.neg);
  if (pos && neg) {
    if (score.pos == score.neg) return ThresholdVerdict::kInconclusive;
    return score.pos > score.neg ? ThresholdVerdict::kPositive
                                 : ThresholdVerdict::kNegative;
  }
  if (pos) return ThresholdVerdict::kPositive;
  if (neg) return ThresholdVerdict::kNegative;
  return ThresholdVerdict::kInconclusive;
}

}  // namespace branchpol
