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

#include "branchpol/lexicon.h"

#include <fstream>
#include <functional>
#include <utility>
#include <vector>

#include "branchpol/error.h"
#include "branchpol/text.h"

namespace branchpol {
namespace {

constexpr double kMaxPolarity = 5.0;

bool HasInnerSpace(std::string_view s) {
  return s.find_first_of(" \t") != std::string_view::npos;
}

// Calls `row(fields, line_no)` for each non-comment, non-blank line.
void ForEachRow(
    std::istream &in,
    const std::function<void(const std::vector<std::string_view> &, int)>
        &row) {
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string_view line = StripWhitespace(raw);
    if (line.empty() || line.front() == '#') continue;
    row(SplitFields(line, '\t'), line_no);
  }
}

template <typename Check>
std::unordered_map<std::string, double> ReadScored(std::istream &in,
                                                   std::string_view source,
                                                   Check check_score) {
  std::unordered_map<std::string, double> out;
  const std::string ctx(source);
  ForEachRow(in, [&](const auto &fields, int line_no) {
    if (fields.size() != 2) {
      throw Error(ErrorCode::kMalformedRow,
                  "expected 'lemma<TAB>score', found " +
                      std::to_string(fields.size()) + " fields",
                  line_no, ctx);
    }
    const std::string_view lemma = StripWhitespace(fields[0]);
    if (lemma.empty() || HasInnerSpace(lemma)) {
      throw Error(ErrorCode::kMalformedRow,
                  "lemma must be a single token: '" + std::string(lemma) + "'",
                  line_no, ctx);
    }
    const auto score = ParseReal(StripWhitespace(fields[1]));
    if (!score) {
      throw Error(ErrorCode::kMalformedRow,
                  "bad score '" + std::string(fields[1]) + "'", line_no, ctx);
    }
    check_score(*score, line_no, ctx);
    auto [it, inserted] = out.emplace(Utf8Lowercase(lemma), *score);
    if (!inserted) {
      throw Error(ErrorCode::kDuplicateLemma, "duplicate lemma '" + it->first +
                  "'", line_no, ctx);
    }
  });
  return out;
}

std::ifstream OpenOrThrow(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::kFileNotFound, "cannot open lexicon file", 0,
                path.string());
  }
  return in;
}

}  // namespace

SentimentLexicon ReadSentimentLexicon(std::istream &in,
                                      std::string_view source) {
  return ReadScored(in, source, [](double a, int line_no,
                                   const std::string &ctx) {
    if (a == 0 || a < -kMaxPolarity || a > kMaxPolarity) {
      throw Error(ErrorCode::kScoreOutOfRange,
                  "sentiment score " + FormatScore(a) +
                      " outside [-5, 0) U (0, 5]",
                  line_no, ctx);
    }
  });
}

IntensifierLexicon ReadIntensifierLexicon(std::istream &in,
                                          std::string_view source) {
  return ReadScored(in, source, [](double b, int line_no,
                                   const std::string &ctx) {
    if (b <= -1) {
      throw Error(ErrorCode::kScoreOutOfRange,
                  "intensifier boost " + FormatScore(b) + " must exceed -1",
                  line_no, ctx);
    }
  });
}

NegatorList ReadNegatorList(std::istream &in, std::string_view source) {
  NegatorList out;
  const std::string ctx(source);
  ForEachRow(in, [&](const auto &fields, int line_no) {
    const std::string_view lemma = StripWhitespace(fields[0]);
    if (fields.size() != 1 || HasInnerSpace(lemma)) {
      throw Error(ErrorCode::kMalformedRow,
                  "expected one lemma per line", line_no, ctx);
    }
    auto [it, inserted] = out.insert(Utf8Lowercase(lemma));
    if (!inserted) {
      throw Error(ErrorCode::kDuplicateLemma, "duplicate lemma '" + *it + "'",
                  line_no, ctx);
    }
  });
  return out;
}

std::string_view RoleName(TokenRole::Kind kind) {
  switch (kind) {
    case TokenRole::Kind::kNeutral: return "neutral";
    case TokenRole::Kind::kSentiment: return "sentiment";
    case TokenRole::Kind::kIntensifier: return "intensifier";
    case TokenRole::Kind::kNegator: return "negator";
  }
  return "unknown";
}

LexiconSet::LexiconSet(SentimentLexicon sentiment,
                       IntensifierLexicon intensifiers, NegatorList negators)
    : sentiment_(std::move(sentiment)),
      intensifiers_(std::move(intensifiers)),
      negators_(std::move(negators)) {
  for (const auto &lemma : negators_) {
    if (sentiment_.contains(lemma)) {
      throw Error(ErrorCode::kRoleConflict,
                  "'" + lemma + "' is both a sentiment word and a negator");
    }
  }
}

std::optional<double> LexiconSet::SentimentScore(std::string_view lemma) const {
  const auto it = sentiment_.find(std::string(lemma));
  if (it == sentiment_.end()) return std::nullopt;
  return it->second;
}

std::optional<double> LexiconSet::Boost(std::string_view lemma) const {
  const auto it = intensifiers_.find(std::string(lemma));
  if (it == intensifiers_.end()) return std::nullopt;
  return it->second;
}

bool LexiconSet::IsNegator(std::string_view lemma) const {
  return negators_.contains(std::string(lemma));
}

LexiconSet LoadLexicons(const std::filesystem::path &sentiment_path,
                        const std::filesystem::path &intensifier_path,
                        const std::filesystem::path &negator_path) {
  auto sentiment_in = OpenOrThrow(sentiment_path);
  auto intensifier_in = OpenOrThrow(intensifier_path);
  auto negator_in = OpenOrThrow(negator_path);
  return LexiconSet(
      ReadSentimentLexicon(sentiment_in, sentiment_path.string()),
      ReadIntensifierLexicon(intensifier_in, intensifier_path.string()),
      ReadNegatorList(negator_in, negator_path.string()));
}

TokenRole ClassifyToken(const Token &token, const LexiconSet &lexicons) {
  const std::string lemma = Utf8Lowercase(token.lemma);
  if (token.Feature("Polarity") == "Neg" || lexicons.IsNegator(lemma)) {
    return TokenRole::Negator();
  }
  if (const auto b = lexicons.Boost(lemma)) return TokenRole::Intensifier(*b);
  if (const auto a = lexicons.SentimentScore(lemma)) {
    return TokenRole::Sentiment(*a);
  }
  if (const auto a = lexicons.SentimentScore(Utf8Lowercase(token.form))) {
    return TokenRole::Sentiment(*a);
  }
  return TokenRole::Neutral();
}

}  // namespace branchpol
