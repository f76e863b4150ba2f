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

#ifndef BRANCHPOL_EVAL_H_
#define BRANCHPOL_EVAL_H_

#include <array>
#include <filesystem>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "branchpol/aggregation.h"
#include "branchpol/baseline.h"
#include "branchpol/conllu.h"
#include "branchpol/lexicon.h"
#include "json.hpp"

namespace branchpol {

struct ReviewRecord {
  std::string review_id;
  std::vector<Sentence> title;
  std::vector<Sentence> body;
  PolarityClass gold = PolarityClass::FromInt(3);
};

struct Dataset {
  std::vector<ReviewRecord> records;
  // One message per manifest row that was skipped.
  std::vector<std::string> warnings;
};

// Reads a manifest CSV with a header naming the columns review_id,
// title_conllu_path, body_conllu_path and polarity (any order, extra
// columns ignored). Paths resolve against the manifest's directory; an empty
// path means no sentences on that side.
//
// Throws Error(kFileNotFound) for a missing manifest or CoNLL-U file,
// kMissingColumn, kBadPolarity, or kMalformedRow for a ragged row. Rows
// whose CoNLL-U does not parse, or that have neither title nor body, are
// skipped and reported in `warnings`.
Dataset LoadDataset(const std::filesystem::path &manifest_path);

// Keeps only records with gold polarity 1 or 5.
std::vector<ReviewRecord> BinaryOnly(std::span<const ReviewRecord> records);

using Predictor = std::function<PolarityClass(const ReviewRecord &)>;

struct EvalReport {
  std::string system_name;
  double accuracy = 0;
  // confusion[gold - 1][predicted - 1]
  std::array<std::array<int, 5>, 5> confusion{};
  std::array<int, 5> support{};  // records per gold class
};

// Throws Error(kEmptyDataset) on no records.
EvalReport Evaluate(std::string system_name,
                    std::span<const ReviewRecord> records,
                    const Predictor &predict);

// Chooses title or body, scores each sentence compositionally, aggregates
// and buckets.
PolarityClass PredictCompositional(const ReviewRecord &record,
                                   const LexiconSet &lexicons,
                                   const AggregationMetric &metric);

// Scores the chosen side as one flat token stream with the proximity
// baseline. Positive -> 5, Negative -> 1, Inconclusive -> 3.
PolarityClass PredictBaseline(const ReviewRecord &record,
                              const LexiconSet &lexicons, int window,
                              double tau);

void to_json(nlohmann::json &j, const EvalReport &report);

// Sorted by accuracy, best first, ties by system name.
std::vector<EvalReport> RankReports(std::vector<EvalReport> reports);

// Aligned two-column table (system, accuracy) in ranked order.
std::string RenderTable(std::span<const EvalReport> reports);

// Table followed by the ranked reports as a JSON array.
std::string CompareReport(std::vector<EvalReport> reports);

}  // namespace branchpol

#endif  // BRANCHPOL_EVAL_H_
