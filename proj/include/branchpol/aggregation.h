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

#ifndef BRANCHPOL_AGGREGATION_H_
#define BRANCHPOL_AGGREGATION_H_

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "branchpol/conllu.h"
#include "branchpol/lexicon.h"

namespace branchpol {

// How sentence scores combine into one review score.
class AggregationMetric {
 public:
  enum class Kind { kMean, kWeightedLast, kExtreme };

  static constexpr double kDefaultLastWeight = 2.0;

  static AggregationMetric Mean() { return AggregationMetric(Kind::kMean, 1); }
  // Throws std::invalid_argument unless weight is finite and positive.
  static AggregationMetric WeightedLast(double weight = kDefaultLastWeight);
  static AggregationMetric Extreme() {
    return AggregationMetric(Kind::kExtreme, 1);
  }

  // Accepts "mean", "weighted-last", "extreme".
  static std::optional<AggregationMetric> FromName(
      std::string_view name, double last_weight = kDefaultLastWeight);

  Kind kind() const { return kind_; }
  double last_weight() const { return last_weight_; }
  std::string_view name() const;

 private:
  AggregationMetric(Kind kind, double last_weight)
      : kind_(kind), last_weight_(last_weight) {}

  Kind kind_;
  double last_weight_;
};

// Review score from per-sentence scores. Throws Error(kEmptyInput).
//   Mean:          arithmetic mean
//   WeightedLast:  mean with the last sentence counted `weight` times
//   Extreme:       the score of largest magnitude, later sentence on ties
double Aggregate(std::span<const double> scores,
                 const AggregationMetric &metric);

// Ordinal 1 (most negative) .. 5 (most positive).
class PolarityClass {
 public:
  // Throws Error(kBadPolarity) outside 1..5.
  static PolarityClass FromInt(int value);

  int value() const { return value_; }

  bool operator==(const PolarityClass &) const = default;
  auto operator<=>(const PolarityClass &) const = default;

 private:
  explicit PolarityClass(int value) : value_(value) {}
  int value_;
};

// Clamps to [-5, 5], then buckets with upper-closed intervals:
// [-5,-3] -> 1, (-3,-1] -> 2, (-1,1] -> 3, (1,3] -> 4, (3,5] -> 5.
// NaN maps to 3.
PolarityClass MapToClass(double score);

// Title sentences if any title token is a sentiment word, body otherwise;
// falls back to the other side when the chosen one is empty. Throws
// Error(kBothEmpty).
std::span<const Sentence> SelectInput(std::span<const Sentence> title,
                                      std::span<const Sentence> body,
                                      const LexiconSet &lexicons);

}  // namespace branchpol

#endif  // BRANCHPOL_AGGREGATION_H_
