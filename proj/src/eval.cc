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

#include "branchpol/eval.h"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include "branchpol/error.h"
#include "branchpol/scorer.h"
#include "branchpol/text.h"

namespace branchpol {
namespace {

// Splits one CSV record. Double-quoted fields may contain commas and "".
std::vector<std::string> SplitCsv(std::string_view line) {
  std::vector<std::string> fields(1);
  bool quoted = false;
  for (size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        fields.back() += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        fields.back() += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.emplace_back();
    } else {
      fields.back() += c;
    }
  }
  return fields;
}

std::vector<Sentence> ReadSide(const std::filesystem::path &base,
                               std::string_view field) {
  const std::string_view rel = StripWhitespace(field);
  if (rel.empty()) return {};
  return ReadConlluFile(base / std::filesystem::path(rel));
}

}  // namespace

Dataset LoadDataset(const std::filesystem::path &manifest_path) {
  std::ifstream in(manifest_path);
  if (!in) {
    throw Error(ErrorCode::kFileNotFound, "cannot open manifest", 0,
                manifest_path.string());
  }
  const std::string ctx = manifest_path.string();
  const std::filesystem::path base = manifest_path.parent_path();

  std::string raw;
  int line_no = 0;
  std::map<std::string, size_t> column;
  size_t width = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    if (StripWhitespace(raw).empty() || raw.front() == '#') continue;
    const auto header = SplitCsv(raw);
    width = header.size();
    for (size_t i = 0; i < header.size(); ++i) {
      column[std::string(StripWhitespace(header[i]))] = i;
    }
    break;
  }
  for (const char *name : {"review_id", "title_conllu_path",
                           "body_conllu_path", "polarity"}) {
    if (!column.contains(name)) {
      throw Error(ErrorCode::kMissingColumn,
                  std::string("manifest lacks column '") + name + "'", line_no,
                  ctx);
    }
  }

  Dataset out;
  while (std::getline(in, raw)) {
    ++line_no;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    if (StripWhitespace(raw).empty() || raw.front() == '#') continue;
    const auto row = SplitCsv(raw);
    if (row.size() != width) {
      throw Error(ErrorCode::kMalformedRow,
                  "expected " + std::to_string(width) + " fields, found " +
                      std::to_string(row.size()),
                  line_no, ctx);
    }
    ReviewRecord record;
    record.review_id = StripWhitespace(row[column["review_id"]]);
    const auto polarity = ParseInt(StripWhitespace(row[column["polarity"]]));
    if (!polarity || *polarity < 1 || *polarity > 5) {
      throw Error(ErrorCode::kBadPolarity,
                  "polarity '" + row[column["polarity"]] + "' outside 1..5",
                  line_no, ctx);
    }
    record.gold = PolarityClass::FromInt(*polarity);
    try {
      record.title = ReadSide(base, row[column["title_conllu_path"]]);
      record.body = ReadSide(base, row[column["body_conllu_path"]]);
    } catch (const Error &e) {
      if (e.code() == ErrorCode::kFileNotFound) throw;
      out.warnings.push_back("skipped " + record.review_id + ": " + e.what());
      continue;
    }
    if (record.title.empty() && record.body.empty()) {
      out.warnings.push_back("skipped " + record.review_id +
                             ": neither title nor body has sentences");
      continue;
    }
    out.records.push_back(std::move(record));
  }
  return out;
}

std::vector<ReviewRecord> BinaryOnly(std::span<const ReviewRecord> records) {
  std::vector<ReviewRecord> out;
  for (const auto &r : records) {
    if (r.gold.value() == 1 || r.gold.value() == 5) out.push_back(r);
  }
  return out;
}

EvalReport Evaluate(std::string system_name,
                    std::span<const ReviewRecord> records,
                    const Predictor &predict) {
  if (records.empty()) {
    throw Error(ErrorCode::kEmptyDataset, "no records to evaluate", 0,
                system_name);
  }
  EvalReport report;
  report.system_name = std::move(system_name);
  int correct = 0;
  for (const auto &r : records) {
    const int gold = r.gold.value();
    const int predicted = predict(r).value();
    ++report.confusion[gold - 1][predicted - 1];
    ++report.support[gold - 1];
    if (gold == predicted) ++correct;
  }
  report.accuracy =
      static_cast<double>(correct) / static_cast<double>(records.size());
  return report;
}

PolarityClass PredictCompositional(const ReviewRecord &record,
                                   const LexiconSet &lexicons,
                                   const AggregationMetric &metric) {
  const auto input = SelectInput(record.title, record.body, lexicons);
  std::vector<double> scores;
  scores.reserve(input.size());
  for (const auto &s : input) {
    scores.push_back(ScoreSentence(s, lexicons).score);
  }
  return MapToClass(Aggregate(scores, metric));
}

PolarityClass PredictBaseline(const ReviewRecord &record,
                              const LexiconSet &lexicons, int window,
                              double tau) {
  const auto input = SelectInput(record.title, record.body, lexicons);
  std::vector<Token> stream;
  for (const auto &s : input) {
    stream.insert(stream.end(), s.tokens().begin(), s.tokens().end());
  }
  switch (ClassifyThreshold(ScoreProximity(stream, lexicons, window), tau)) {
    case ThresholdVerdict::kPositive: return PolarityClass::FromInt(5);
    case ThresholdVerdict::kNegative: return PolarityClass::FromInt(1);
    case ThresholdVerdict::kInconclusive: break;
  }
  return PolarityClass::FromInt(3);
}

void to_json(nlohmann::json &j, const EvalReport &report) {
  j = nlohmann::json{{"system", report.system_name},
                     {"accuracy", report.accuracy},
                     {"confusion", report.confusion},
                     {"support", report.support}};
}

std::vector<EvalReport> RankReports(std::vector<EvalReport> reports) {
  std::stable_sort(reports.begin(), reports.end(),
                   [](const EvalReport &a, const EvalReport &b) {
                     if (a.accuracy != b.accuracy) {
                       return a.accuracy > b.accuracy;
                     }
                     return a.system_name < b.system_name;
                   });
  return reports;
}

std::string RenderTable(std::span<const EvalReport> reports) {
  size_t width = std::string_view("system").size();
  for (const auto &r : reports) width = std::max(width, r.system_name.size());
  std::ostringstream out;
  const auto row = [&](std::string_view name, std::string_view acc) {
    out << name << std::string(width - name.size() + 2, ' ') << acc << '\n';
  };
  row("system", "accuracy");
  for (const auto &r : RankReports({reports.begin(), reports.end()})) {
    char acc[32];
    std::snprintf(acc, sizeof(acc), "%.2f", r.accuracy);
    row(r.system_name, acc);
  }
  return out.str();
}

std::string CompareReport(std::vector<EvalReport> reports) {
  reports = RankReports(std::move(reports));
  return RenderTable(reports) + "\n" + nlohmann::json(reports).dump(2) + "\n";
}

}  // namespace branchpol
