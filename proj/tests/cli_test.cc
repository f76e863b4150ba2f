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
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "json.hpp"
#include "test_support.h"

namespace branchpol {
namespace {

namespace fs = std::filesystem;
using ::testing::HasSubstr;
using ::testing::StartsWith;
using testing::Fixture;
using testing::SampleDir;
using testing::SourceDir;

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

std::vector<std::string> LexiconFlags() {
  return {"--sentiment-lex", (SampleDir() / "sentiment_es.tsv").string(),
          "--intensifier-lex", (SampleDir() / "intensifiers_es.tsv").string(),
          "--negator-lex", (SampleDir() / "negators_es.txt").string()};
}

CliResult Invoke(std::vector<std::string> args, bool with_lexicons = true) {
  if (with_lexicons) {
    const auto flags = LexiconFlags();
    args.insert(args.begin() + 1, flags.begin(), flags.end());
  }
  std::vector<const char *> argv = {"branchpol"};
  for (const auto &a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = RunCli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> Lines(const std::string &text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  return lines;
}

std::string Manifest() {
  return (SourceDir() / "corpus" / "manifest.csv").string();
}

fs::path TempPath(const std::string &name) {
  return fs::temp_directory_path() /
         ("branchpol_cli_" + std::to_string(::getpid()) + "_" + name);
}

std::string Slurp(const fs::path &p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

TEST(CliScoreTest, NoEsExcelente) {
  const auto r = Invoke({"score", Fixture("no_es_excelente.conllu").string()});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.out, "sentence 1: 1.0\nreview: 1.0 (extreme)\nclass: 3\n");
}

TEST(CliScoreTest, MetricSelection) {
  const auto fixture = Fixture("no_es_excelente_exclaim.conllu").string();
  auto r = Invoke({"score", fixture, "--metric", "mean"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_THAT(r.out, HasSubstr("review: 2.5 (mean)\nclass: 4\n"));
  // (0 + 3 * 5) / 4
  r = Invoke({"score", fixture, "--metric", "weighted-last", "--last-weight",
           "3"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_THAT(r.out, HasSubstr("review: 3.75 (weighted-last)\nclass: 5\n"));
  EXPECT_EQ(Invoke({"score", fixture, "--metric", "median"}).code, kExitUsage);
  EXPECT_EQ(Invoke({"score", fixture, "--metric", "weighted-last",
                 "--last-weight", "0"})
                .code,
            kExitUsage);
}

TEST(CliScoreTest, ExplainPrintsTraces) {
  const auto r = Invoke({"score", Fixture("no_es_una_comida_muy_buena.conllu").string(),
                      "--explain"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto lines = Lines(r.out);
  ASSERT_EQ(lines.size(), 4u);
  EXPECT_EQ(lines[0], "sentence 1: -1.5");
  const auto entry = nlohmann::json::parse(lines[1]);
  EXPECT_EQ(entry["sentence"], 1);
  EXPECT_EQ(entry["score"], -1.5);
  ASSERT_EQ(entry["traces"].size(), 3u);
  EXPECT_EQ(entry["traces"][1]["head_id"], 4);
  EXPECT_EQ(entry["traces"][1]["negated"], true);
  EXPECT_EQ(lines[3], "class: 2");
}

TEST(CliScoreTest, OutWritesJsonDocument) {
  const fs::path out = TempPath("score.json");
  const auto r = Invoke({"score", Fixture("no_es_excelente.conllu").string(),
                      "--out", out.string()});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto doc = nlohmann::json::parse(Slurp(out));
  fs::remove(out);
  EXPECT_EQ(doc["review"], 1.0);
  EXPECT_EQ(doc["class"], 3);
  EXPECT_EQ(doc["metric"], "extreme");
  EXPECT_EQ(doc["sentences"].size(), 1u);
}

TEST(CliScoreTest, InputErrors) {
  auto r = Invoke({"score", "/no/such/file.conllu"});
  EXPECT_EQ(r.code, kExitInput);
  EXPECT_THAT(r.err, HasSubstr("FileNotFound"));

  const fs::path bad = TempPath("bad.conllu");
  std::ofstream(bad) << "1\ta\ta\tX\t_\t_\t2\tdep\t_\t_\n"
                        "2\tb\tb\tX\t_\t_\t1\tdep\t_\t_\n\n";
  r = Invoke({"score", bad.string()});
  fs::remove(bad);
  EXPECT_EQ(r.code, kExitInput);
  EXPECT_THAT(r.err, HasSubstr("InvalidTree"));
}

TEST(CliLexiconTest, MissingLexiconExitsWithLexiconStatus) {
  const auto r = Invoke({"score", Fixture("no_es_excelente.conllu").string(),
                      "--sentiment-lex", "/no/such/lexicon.tsv"},
                     false);
  EXPECT_EQ(r.code, kExitLexicon);
  EXPECT_THAT(r.err, HasSubstr("/no/such/lexicon.tsv"));
}

TEST(CliLexiconTest, InvalidLexiconExitsWithLexiconStatus) {
  const fs::path bad = TempPath("bad_lex.tsv");
  std::ofstream(bad) << "bueno\t9\n";
  auto flags = LexiconFlags();
  flags[1] = bad.string();
  std::vector<std::string> args = {"score",
                                   Fixture("no_es_excelente.conllu").string()};
  args.insert(args.end(), flags.begin(), flags.end());
  const auto r = Invoke(args, false);
  fs::remove(bad);
  EXPECT_EQ(r.code, kExitLexicon);
  EXPECT_THAT(r.err, HasSubstr("ScoreOutOfRange"));
}

TEST(CliLexiconTest, DirectoryFromEnvironment) {
  ASSERT_EQ(::setenv("BRANCHPOL_LEXICON_DIR", SampleDir().c_str(), 1), 0);
  const auto r = Invoke({"score", Fixture("no_es_excelente.conllu").string()},
                     false);
  ::unsetenv("BRANCHPOL_LEXICON_DIR");
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_THAT(r.out, HasSubstr("class: 3"));
}

TEST(CliEvaluateTest, CorpusIsFullyCorrect) {
  const auto r = Invoke({"evaluate", Manifest()});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_THAT(r.out, StartsWith("system"));
  EXPECT_THAT(r.out, HasSubstr("ucr(extreme)  1.00\n"));
  const auto json_start = r.out.find('{');
  ASSERT_NE(json_start, std::string::npos);
  const auto report = nlohmann::json::parse(r.out.substr(json_start));
  EXPECT_EQ(report["accuracy"], 1.0);
  EXPECT_EQ(report["system"], "ucr(extreme)");
}

TEST(CliEvaluateTest, BinaryKeepsOnlyExtremes) {
  const auto r = Invoke({"evaluate", Manifest(), "--binary"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto report = nlohmann::json::parse(r.out.substr(r.out.find('{')));
  const auto support = report["support"];
  EXPECT_EQ(support[1], 0);
  EXPECT_EQ(support[2], 0);
  EXPECT_EQ(support[3], 0);
  EXPECT_GT(support[0].get<int>() + support[4].get<int>(), 0);
}

TEST(CliEvaluateTest, EmptyManifestIsAnInputError) {
  const fs::path manifest = TempPath("empty.csv");
  std::ofstream(manifest)
      << "review_id,title_conllu_path,body_conllu_path,polarity\n";
  const auto r = Invoke({"evaluate", manifest.string()});
  fs::remove(manifest);
  EXPECT_EQ(r.code, kExitInput);
  EXPECT_THAT(r.err, HasSubstr("EmptyDataset"));
}

TEST(CliCompareTest, RanksCompositionalFirst) {
  const auto r = Invoke({"compare", Manifest()});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto json_start = r.out.find('[');
  ASSERT_NE(json_start, std::string::npos);
  const auto table = Lines(r.out.substr(0, json_start));
  // Header, four systems, separating blank line.
  ASSERT_EQ(table.size(), 6u);
  EXPECT_THAT(table[1], StartsWith("ucr(extreme)"));
  const auto reports = nlohmann::json::parse(r.out.substr(json_start));
  ASSERT_EQ(reports.size(), 4u);
  EXPECT_EQ(reports[0]["system"], "ucr(extreme)");
  for (size_t i = 1; i < reports.size(); ++i) {
    EXPECT_LT(reports[i]["accuracy"].get<double>(),
              reports[0]["accuracy"].get<double>());
    EXPECT_THAT(reports[i]["system"].get<std::string>(),
                StartsWith("baseline(tau="));
  }
}

TEST(CliCompareTest, SingleTau) {
  const auto r = Invoke({"compare", Manifest(), "--baseline-tau", "0.7"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto reports = nlohmann::json::parse(r.out.substr(r.out.find('[')));
  ASSERT_EQ(reports.size(), 2u);
  EXPECT_EQ(reports[1]["system"], "baseline(tau=0.7)");
}

TEST(CliCompareTest, RejectsUnsupportedTau) {
  const auto r = Invoke({"compare", Manifest(), "--baseline-tau", "0.5"});
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_THAT(r.err, HasSubstr("--baseline-tau"));
}

TEST(CliCompareTest, OutputIsByteIdenticalAcrossRuns) {
  const fs::path a = TempPath("a.json");
  const fs::path b = TempPath("b.json");
  const auto ra = Invoke({"compare", Manifest(), "--out", a.string()});
  const auto rb = Invoke({"compare", Manifest(), "--out", b.string()});
  ASSERT_EQ(ra.code, kExitOk) << ra.err;
  ASSERT_EQ(rb.code, kExitOk) << rb.err;
  EXPECT_EQ(ra.out, rb.out);
  const std::string ja = Slurp(a);
  EXPECT_FALSE(ja.empty());
  EXPECT_EQ(ja, Slurp(b));
  fs::remove(a);
  fs::remove(b);
}

TEST(CliUsageTest, MissingSubcommandOrArgument) {
  EXPECT_EQ(Invoke({}, false).code, kExitUsage);
  EXPECT_EQ(Invoke({"score"}).code, kExitUsage);
  EXPECT_EQ(Invoke({"frobnicate"}, false).code, kExitUsage);
}

TEST(CliUsageTest, HelpSucceeds) {
  const auto r = Invoke({"--help"}, false);
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_THAT(r.out + r.err, HasSubstr("score"));
}

}  // namespace
}  // namespace branchpol
