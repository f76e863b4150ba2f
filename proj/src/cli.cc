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

#include "branchpol/cli.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "branchpol/aggregation.h"
#include "branchpol/baseline.h"
#include "branchpol/conllu.h"
#include "branchpol/error.h"
#include "branchpol/eval.h"
#include "branchpol/lexicon.h"
#include "branchpol/scorer.h"
#include "branchpol/text.h"
#include "json.hpp"

namespace branchpol {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

constexpr const char *kLexiconDirEnv = "BRANCHPOL_LEXICON_DIR";

struct RunConfig {
  std::string sentiment_lex;
  std::string intensifier_lex;
  std::string negator_lex;
  std::string metric_name = "extreme";
  double last_weight = AggregationMetric::kDefaultLastWeight;
  int baseline_window = kDefaultWindow;
  std::vector<double> baseline_taus = {0.7, 0.8, 1.0};
  std::string input;
  std::string out_path;
  bool explain = false;
  bool binary = false;
};

fs::path LexiconDir() {
  const char *dir = std::getenv(kLexiconDirEnv);
  return dir != nullptr && *dir != '\0' ? fs::path(dir) : fs::path("samples");
}

void FillLexiconDefaults(RunConfig &config) {
  const fs::path dir = LexiconDir();
  if (config.sentiment_lex.empty()) {
    config.sentiment_lex = (dir / "sentiment_es.tsv").string();
  }
  if (config.intensifier_lex.empty()) {
    config.intensifier_lex = (dir / "intensifiers_es.tsv").string();
  }
  if (config.negator_lex.empty()) {
    config.negator_lex = (dir / "negators_es.txt").string();
  }
}

// Writes `body` to --out when given, otherwise to `out`.
void Emit(const RunConfig &config, const std::string &body,
          std::ostream &out) {
  if (config.out_path.empty()) {
    out << body;
    return;
  }
  std::ofstream file(config.out_path, std::ios::binary);
  if (!file) {
    throw Error(ErrorCode::kFileNotFound, "cannot write output", 0,
                config.out_path);
  }
  file << body;
}

int CmdScore(const RunConfig &config, const LexiconSet &lexicons,
             const AggregationMetric &metric, std::ostream &out) {
  const auto sentences = ReadConlluFile(config.input);
  if (sentences.empty()) {
    throw Error(ErrorCode::kEmptyInput, "no sentences in input", 0,
                config.input);
  }
  std::vector<double> scores;
  json doc_sentences = json::array();
  for (size_t i = 0; i < sentences.size(); ++i) {
    const SentenceScore result = ScoreSentence(sentences[i], lexicons);
    scores.push_back(result.score);
    out << "sentence " << i + 1 << ": " << FormatScore(result.score) << '\n';
    json entry{{"sentence", i + 1},
               {"score", result.score},
               {"traces", result.traces}};
    if (config.explain) out << entry.dump() << '\n';
    doc_sentences.push_back(std::move(entry));
  }
  const double review = Aggregate(scores, metric);
  const int cls = MapToClass(review).value();
  out << "review: " << FormatScore(review) << " (" << metric.name() << ")\n";
  out << "class: " << cls << '\n';
  if (!config.out_path.empty()) {
    const json doc{{"sentences", doc_sentences},
                   {"metric", metric.name()},
                   {"review", review},
                   {"class", cls}};
    Emit(config, doc.dump(2) + "\n", out);
  }
  return kExitOk;
}

std::vector<ReviewRecord> LoadRecords(const RunConfig &config,
                                      std::ostream &err) {
  Dataset data = LoadDataset(config.input);
  for (const auto &w : data.warnings) err << "warning: " << w << '\n';
  if (!data.warnings.empty()) {
    err << "warning: " << data.warnings.size() << " record(s) skipped\n";
  }
  return config.binary ? BinaryOnly(data.records) : std::move(data.records);
}

std::string CompositionalName(const AggregationMetric &metric) {
  return "ucr(" + std::string(metric.name()) + ")";
}

int CmdEvaluate(const RunConfig &config, const LexiconSet &lexicons,
                const AggregationMetric &metric, std::ostream &out,
                std::ostream &err) {
  const auto records = LoadRecords(config, err);
  const EvalReport report =
      Evaluate(CompositionalName(metric), records,
               [&](const ReviewRecord &r) {
                 return PredictCompositional(r, lexicons, metric);
               });
  const std::vector<EvalReport> reports{report};
  out << RenderTable(reports);
  Emit(config, json(report).dump(2) + "\n", out);
  return kExitOk;
}

std::string BaselineName(double tau) {
  std::string t = FormatScore(tau);
  return "baseline(tau=" + t + ")";
}

int CmdCompare(const RunConfig &config, const LexiconSet &lexicons,
               const AggregationMetric &metric, std::ostream &out,
               std::ostream &err) {
  const auto records = LoadRecords(config, err);
  std::vector<EvalReport> reports;
  reports.push_back(Evaluate(CompositionalName(metric), records,
                             [&](const ReviewRecord &r) {
                               return PredictCompositional(r, lexicons, metric);
                             }));
  for (double tau : config.baseline_taus) {
    reports.push_back(Evaluate(BaselineName(tau), records,
                               [&](const ReviewRecord &r) {
                                 return PredictBaseline(
                                     r, lexicons, config.baseline_window, tau);
                               }));
  }
  reports = RankReports(std::move(reports));
  if (config.out_path.empty()) {
    out << CompareReport(reports);
  } else {
    out << RenderTable(reports);
    Emit(config, json(reports).dump(2) + "\n", out);
  }
  return kExitOk;
}

}  // namespace

int RunCli(int argc, const char *const *argv, std::ostream &out,
           std::ostream &err) {
  CLI::App app{"Compositional dependency-tree sentiment scoring"};
  app.name("branchpol");
  app.require_subcommand(1);

  RunConfig config;
  const auto add_common = [&](CLI::App *cmd) {
    cmd->add_option("--sentiment-lex", config.sentiment_lex,
                    "Sentiment lexicon TSV (lemma, score)");
    cmd->add_option("--intensifier-lex", config.intensifier_lex,
                    "Intensifier lexicon TSV (lemma, boost)");
    cmd->add_option("--negator-lex", config.negator_lex,
                    "Negator list, one lemma per line");
    cmd->add_option("--metric", config.metric_name,
                    "Review aggregation: mean, weighted-last, extreme")
        ->check(CLI::IsMember({"mean", "weighted-last", "extreme"}));
    cmd->add_option("--last-weight", config.last_weight,
                    "Weight of the last sentence for weighted-last")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--out", config.out_path, "Write JSON output here");
  };

  CLI::App *score = app.add_subcommand("score", "Score one CoNLL-U file");
  add_common(score);
  score->add_option("input", config.input, "CoNLL-U file")->required();
  score->add_flag("--explain", config.explain, "Print branch traces as JSON");

  CLI::App *evaluate =
      app.add_subcommand("evaluate", "Evaluate on a labeled manifest");
  add_common(evaluate);
  evaluate->add_option("manifest", config.input, "Manifest CSV")->required();
  evaluate->add_flag("--binary", config.binary,
                     "Only records with gold polarity 1 or 5");

  CLI::App *compare = app.add_subcommand(
      "compare", "Compare compositional scoring with the proximity baseline");
  add_common(compare);
  compare->add_option("manifest", config.input, "Manifest CSV")->required();
  compare->add_flag("--binary", config.binary,
                    "Only records with gold polarity 1 or 5");
  compare->add_option("--baseline-window", config.baseline_window,
                      "Tokens scanned before each sentiment word")
      ->check(CLI::PositiveNumber);
  compare->add_option("--baseline-tau", config.baseline_taus,
                      "Baseline share thresholds (0.7, 0.8, 1.0)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }
  for (double tau : config.baseline_taus) {
    if (tau != 0.7 && tau != 0.8 && tau != 1.0) {
      err << "error: --baseline-tau must be one of 0.7, 0.8, 1.0\n";
      return kExitUsage;
    }
  }
  const auto metric =
      AggregationMetric::FromName(config.metric_name, config.last_weight);
  FillLexiconDefaults(config);

  std::optional<LexiconSet> lexicons;
  try {
    lexicons.emplace(LoadLexicons(config.sentiment_lex, config.intensifier_lex,
                                  config.negator_lex));
  } catch (const Error &e) {
    err << "error: " << e.what() << '\n';
    return kExitLexicon;
  }

  try {
    if (score->parsed()) return CmdScore(config, *lexicons, *metric, out);
    if (evaluate->parsed()) {
      return CmdEvaluate(config, *lexicons, *metric, out, err);
    }
    return CmdCompare(config, *lexicons, *metric, out, err);
  } catch (const Error &e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  }
}

}  // namespace branchpol
