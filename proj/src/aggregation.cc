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

#include "branchpol/aggregation.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "branchpol/error.h"

namespace branchpol {

AggregationMetric AggregationMetric::WeightedLast(double weight) {
  if (!std::isfinite(weight) || weight <= 0) {
    throw std::invalid_argument("last-sentence weight must be finite and > 0");
  }
  return AggregationMetric(Kind::kWeightedLast, weight);
}

std::optional<AggregationMetric> AggregationMetric::FromName(
    std::string_view name, double last_weight) {
  if (name == "mean") return Mean();
  if (name == "weighted-last") return WeightedLast(last_weight);
  if (name == "extreme") return Extreme();
  return std::nullopt;
}

std::string_view AggregationMetric::name() const {
  switch (kind_) {
    case Kind::kMean: return "mean";
    case Kind::kWeightedLast: return "weighted-last";
    case Kind::kExtreme: return "extreme";
  }
  return "unknown";
}

double Aggregate(std::span<const double> scores,
                 const AggregationMetric &metric) {
  if (scores.empty()) {
    throw Error(ErrorCode::kEmptyInput, "no sentence scores to aggregate");
  }
  const size_t n = scores.size();
  switch (metric.kind()) {
    case AggregationMetric::Kind::kMean: {
      double sum = 0;
      for (double s : scores) sum += s;
      return sum / static_cast<double>(n);
    }
    case AggregationMetric::Kind::kWeightedLast: {
      const double w = metric.last_weight();
      double sum = 0;
      for (size_t i = 0; i + 1 < n; ++i) sum += scores[i];
      sum += w * scores[n - 1];
      return sum / (static_cast<double>(n - 1) + w);
    }
    case AggregationMetric::Kind::kExtreme: {
      double best = scores[0];
      for (double s : scores.subspan(1)) {
        if (std::fabs(s) >= std::fabs(best)) best = s;
      }
      return best;
    }
  }
  return 0;
}

PolarityClass PolarityClass::FromInt(int value) {
  if (value < 1 || value > 5) {
    throw Error(ErrorCode::kBadPolarity,
                "polarity " + std::to_string(value) + " outside 1..5");
  }
  return PolarityClass(value);
}

PolarityClass MapToClass(double score) {
  if (std::isnan(score)) return PolarityClass::FromInt(3);
  const double s = std::clamp(score, -5.0, 5.0);
  if (s <= -3) return PolarityClass::FromInt(1);
  if (s <= -1) return PolarityClass::FromInt(2);
  if (s <= 1) return PolarityClass::FromInt(3);
  if (s <= 3) return PolarityClass::FromInt(4);
  return PolarityClass::FromInt(5);
}

std::span<const Sentence> SelectInput(std::span<const Sentence> title,
                                      std::span<const Sentence> body,
                                      const LexiconSet &lexicons) {
  if (title.empty() && body.empty()) {
    throw Error(ErrorCode::kBothEmpty, "review has neither title nor body");
  }
  const bool title_has_sentiment =
      std::any_of(title.begin(), title.end(), [&](const Sentence &s) {
        return std::any_of(
            s.tokens().begin(), s.tokens().end(), [&](const Token &t) {
              return ClassifyToken(t, lexicons).is_sentiment();
            });
      });
  const auto chosen = title_has_sentiment ? title : body;
  if (chosen.empty()) return title_has_sentiment ? body : title;
  return chosen;
}

}  // namespace branchpol
