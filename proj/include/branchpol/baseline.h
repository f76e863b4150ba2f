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

// A flat, VADER-style proximity scorer used as the comparison baseline.
// It ignores tree structure and sentence boundaries: a negator or
// intensifier affects a sentiment word whenever it occurs among the few
// tokens before it.

#ifndef BRANCHPOL_BASELINE_H_
#define BRANCHPOL_BASELINE_H_

#include <span>
#include <string_view>

#include "branchpol/conllu.h"
#include "branchpol/lexicon.h"

namespace branchpol {

inline constexpr int kDefaultWindow = 3;
inline constexpr double kNegationScalar = -0.74;
inline constexpr double kBoostDecay = 0.95;
inline constexpr double kCompoundAlpha = 15.0;

struct ProportionScore {
  double pos = 0;
  double neg = 0;
  double neu = 1;
  double compound = 0;  // S / sqrt(S^2 + 15), S the sum of valences
};

// Each sentiment word's valence a is adjusted by the `window` tokens before
// it: an intensifier at distance d multiplies by (1 + b * 0.95^(d-1)), and
// any negator multiplies by -0.74. pos/neg/neu are the shares of positive
// valence, negative valence and neutral non-punctuation tokens.
ProportionScore ScoreProximity(std::span<const Token> tokens,
                               const LexiconSet &lexicons,
                               int window = kDefaultWindow);

enum class ThresholdVerdict { kPositive, kNegative, kInconclusive };

std::string_view VerdictName(ThresholdVerdict verdict);

// Positive if pos > tau, Negative if neg > tau; tau = 1 demands a share of
// exactly 1. If both exceed a low tau the larger share wins, and a tie is
// Inconclusive. Requires tau in (0, 1].
ThresholdVerdict ClassifyThreshold(const ProportionScore &score, double tau);

}  // namespace branchpol

#endif  // BRANCHPOL_BASELINE_H_
