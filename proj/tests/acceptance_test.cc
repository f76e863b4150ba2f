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

// End-to-end acceptance checks. Prints one PASS or FAIL line per criterion
// and exits nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "branchpol/aggregation.h"
#include "branchpol/baseline.h"
#include "branchpol/conllu.h"
#include "branchpol/eval.h"
#include "branchpol/lexicon.h"
#include "branchpol/scorer.h"
#include "test_support.h"

namespace branchpol {
namespace {

namespace fs = std::filesystem;

constexpr double kTolerance = 1e-12;

bool Near(double a, double b) { return std::fabs(a - b) < kTolerance; }

struct Outcome {
  bool pass;
  std::string detail;
};

double ScoreFixture(const std::string &name, const LexiconSet &lex) {
  return ScoreSentence(ReadConlluFile(testing::Fixture(name)).at(0), lex)
      .score;
}

Outcome NegatedPositiveWord(const LexiconSet &lex) {
  const double score = ScoreFixture("no_es_excelente.conllu", lex);
  const int cls = MapToClass(score).value();
  std::ostringstream d;
  d << "score=" << score << " class=" << cls;
  return {Near(score, 1.0) && cls == 3, d.str()};
}

Outcome IntensifiedNegatedNominal(const LexiconSet &lex) {
  const double score = ScoreFixture("no_es_una_comida_muy_buena.conllu", lex);
  const int cls = MapToClass(score).value();
  std::ostringstream d;
  d << "score=" << score << " class=" << cls;
  return {Near(score, -1.5) && cls == 2, d.str()};
}

Outcome ReviewAggregation() {
  const std::vector<double> scores = {-1, 2, -1, 1, -4};
  const double mean = Aggregate(scores, AggregationMetric::Mean());
  const double extreme = Aggregate(scores, AggregationMetric::Extreme());
  std::ostringstream d;
  d << "mean=" << mean << " extreme=" << extreme;
  return {Near(mean, -0.6) && Near(extreme, -4.0), d.str()};
}

Outcome ClassBoundaries() {
  const std::vector<std::pair<double, int>> cases = {
      {-5, 1}, {-3, 1}, {-1, 2},      {1, 3},
      {3, 4},  {5, 5},  {-3.0001, 1}, {1.0001, 4}};
  std::ostringstream d;
  bool pass = true;
  for (const auto &[score, expected] : cases) {
    const int got = MapToClass(score).value();
    d << score << "->" << got << ' ';
    pass = pass && got == expected;
  }
  return {pass, d.str()};
}

Outcome IntensifyBeforeNegate() {
  const double worked = IntensifyThenNegate(5, 0.25, true);
  bool pass = Near(worked, 2.25) && !Near(worked, 1.25);
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> score(-5, 5);
  std::uniform_real_distribution<double> boost(0.01, 1);
  int differ = 0;
  const int trials = 1000;
  for (int i = 0; i < trials; ++i) {
    const double a = score(rng);
    const double b = boost(rng);
    if (a == 0) continue;
    const double negate_first = (a - 4 * (a > 0 ? 1 : -1)) * (1 + b);
    differ += IntensifyThenNegate(a, b, true) != negate_first;
  }
  pass = pass && differ == trials;
  std::ostringstream d;
  d << "5*(1+0.25)-4=" << worked << " order-sensitive " << differ << "/"
    << trials;
  return {pass, d.str()};
}

Outcome AgreesWithReferenceRecursion() {
  const auto lex = testing::PropertyLexicons();
  std::mt19937 rng(31);
  const int trials = 1000;
  int agree = 0;
  for (int i = 0; i < trials; ++i) {
    const auto s = testing::RandomSentence(1 + i % 8, rng);
    agree += ScoreSentence(s, lex).score ==
             testing::NaiveEvaluator(s, lex).Score();
  }
  std::ostringstream d;
  d << agree << "/" << trials << " random trees identical";
  return {agree == trials, d.str()};
}

Outcome SentenceBoundaryScoping(const LexiconSet &lex) {
  const auto sentences =
      ReadConlluFile(testing::Fixture("no_es_excelente_exclaim.conllu"));
  std::vector<double> scores;
  std::vector<Token> flat;
  for (const auto &s : sentences) {
    scores.push_back(ScoreSentence(s, lex).score);
    flat.insert(flat.end(), s.tokens().begin(), s.tokens().end());
  }
  const ProportionScore base = ScoreProximity(flat, lex, kDefaultWindow);
  const bool pass = scores == std::vector<double>{0, 5} &&
                    base.neg > base.pos && base.compound < 0;
  std::ostringstream d;
  d << "tree scores=[" << (scores.empty() ? NAN : scores[0]) << ","
    << (scores.size() < 2 ? NAN : scores[1]) << "] baseline pos=" << base.pos
    << " neg=" << base.neg << " compound=" << base.compound;
  return {pass, d.str()};
}

Outcome RoundTripIdentity() {
  std::vector<fs::path> files;
  for (const auto &dir : {testing::SourceDir() / "fixtures",
                          testing::SourceDir() / "corpus" / "conllu"}) {
    for (const auto &entry : fs::directory_iterator(dir)) {
      if (entry.path().extension() == ".conllu") files.push_back(entry.path());
    }
  }
  int identical = 0;
  for (const auto &f : files) {
    const auto first = ReadConlluFile(f);
    const std::string once = SerializeConllu(first);
    const std::string twice = SerializeConllu(ParseConllu(once));
    bool same = once == twice && ParseConllu(once).size() == first.size();
    for (size_t i = 0; same && i < first.size(); ++i) {
      const auto again = ParseConllu(once);
      same = again[i].size() == first[i].size() &&
             again[i].comments() == first[i].comments();
      for (int id = 1; same && id <= first[i].size(); ++id) {
        const Token &a = first[i].token(id);
        const Token &b = again[i].token(id);
        same = a.form == b.form && a.lemma == b.lemma && a.upos == b.upos &&
               a.feats == b.feats && a.head == b.head && a.deprel == b.deprel;
      }
    }
    identical += same;
  }
  std::ostringstream d;
  d << identical << "/" << files.size() << " files";
  return {!files.empty() && identical == static_cast<int>(files.size()),
          d.str()};
}

Outcome CorpusComparison(const LexiconSet &lex) {
  const Dataset data =
      LoadDataset(testing::SourceDir() / "corpus" / "manifest.csv");
  const auto metric = AggregationMetric::Extreme();
  const EvalReport ucr = Evaluate("ucr", data.records,
                                  [&](const ReviewRecord &r) {
                                    return PredictCompositional(r, lex, metric);
                                  });
  bool pass = data.warnings.empty() && ucr.accuracy == 1.0;
  std::ostringstream d;
  d << "n=" << data.records.size() << " ucr=" << ucr.accuracy;
  for (double tau : {0.7, 0.8, 1.0}) {
    const EvalReport base =
        Evaluate("baseline", data.records, [&](const ReviewRecord &r) {
          return PredictBaseline(r, lex, kDefaultWindow, tau);
        });
    d << " baseline(" << tau << ")=" << base.accuracy;
    pass = pass && ucr.accuracy > base.accuracy;
  }
  return {pass, d.str()};
}

int Main() {
  const auto start = std::chrono::steady_clock::now();
  int failures = 0;
  const auto check = [&](const char *name, const std::function<Outcome()> &fn) {
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception &e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("%s  %s  (%s)\n", o.pass ? "PASS" : "FAIL", name,
                o.detail.c_str());
    failures += !o.pass;
  };

  const LexiconSet lex = testing::SampleLexicons();
  check("negated positive word scores 1.0, class 3",
        [&] { return NegatedPositiveWord(lex); });
  check("intensified negated nominal scores -1.5, class 2",
        [&] { return IntensifiedNegatedNominal(lex); });
  check("review aggregation mean -0.6, extreme -4",
        [] { return ReviewAggregation(); });
  check("score-to-class boundaries", [] { return ClassBoundaries(); });
  check("intensification applies before negation",
        [] { return IntensifyBeforeNegate(); });
  check("bottom-up scoring equals reference recursion",
        [] { return AgreesWithReferenceRecursion(); });
  check("negator scoped to its own sentence, baseline leaks across",
        [&] { return SentenceBoundaryScoping(lex); });
  check("CoNLL-U round trip", [] { return RoundTripIdentity(); });
  check("corpus: compositional 1.00 and above every baseline",
        [&] { return CorpusComparison(lex); });

  const double seconds = std::chrono::duration<double>(
                             std::chrono::steady_clock::now() - start)
                             .count();
  const bool fast = seconds < 30;
  std::printf("%s  suite runtime under 30 s  (%.3f s)\n",
              fast ? "PASS" : "FAIL", seconds);
  failures += !fast;

  std::printf("%d failure(s)\n", failures);
  return failures == 0 ? 0 : 1;
}

}  // namespace
}  // namespace branchpol

int main() { return branchpol::Main(); }
