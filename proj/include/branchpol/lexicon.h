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

#ifndef BRANCHPOL_LEXICON_H_
#define BRANCHPOL_LEXICON_H_

#include <filesystem>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>

#include "branchpol/conllu.h"

namespace branchpol {

// lemma -> prior polarity in [-5, +5], never 0.
using SentimentLexicon = std::unordered_map<std::string, double>;

// lemma -> boost b applied as (1 + b); b > -1 so downtoners stay positive.
using IntensifierLexicon = std::unordered_map<std::string, double>;

using NegatorList = std::unordered_set<std::string>;

// File formats (UTF-8, '#' comment lines and blank lines ignored):
//   sentiment, intensifier:  lemma<TAB>score
//   negator:                 lemma
// Lemmas are lowercased on load and must be single tokens.
SentimentLexicon ReadSentimentLexicon(std::istream &in,
                                      std::string_view source = {});
IntensifierLexicon ReadIntensifierLexicon(std::istream &in,
                                          std::string_view source = {});
NegatorList ReadNegatorList(std::istream &in, std::string_view source = {});

struct TokenRole {
  enum class Kind { kNeutral, kSentiment, kIntensifier, kNegator };

  Kind kind = Kind::kNeutral;
  double value = 0;  // a for kSentiment, b for kIntensifier

  static TokenRole Neutral() { return {}; }
  static TokenRole Negator() { return {Kind::kNegator, 0}; }
  static TokenRole Sentiment(double a) { return {Kind::kSentiment, a}; }
  static TokenRole Intensifier(double b) { return {Kind::kIntensifier, b}; }

  bool is_sentiment() const { return kind == Kind::kSentiment; }
  bool is_intensifier() const { return kind == Kind::kIntensifier; }
  bool is_negator() const { return kind == Kind::kNegator; }

  bool operator==(const TokenRole &) const = default;
};

std::string_view RoleName(TokenRole::Kind kind);

class LexiconSet {
 public:
  // Throws Error(kRoleConflict) if a lemma is both a sentiment word and a
  // negator.
  LexiconSet(SentimentLexicon sentiment, IntensifierLexicon intensifiers,
             NegatorList negators);

  const SentimentLexicon &sentiment() const { return sentiment_; }
  const IntensifierLexicon &intensifiers() const { return intensifiers_; }
  const NegatorList &negators() const { return negators_; }

  std::optional<double> SentimentScore(std::string_view lemma) const;
  std::optional<double> Boost(std::string_view lemma) const;
  bool IsNegator(std::string_view lemma) const;

 private:
  SentimentLexicon sentiment_;
  IntensifierLexicon intensifiers_;
  NegatorList negators_;
};

// Throws Error(kFileNotFound), or the row-level errors of the readers above
// with the file path as context.
LexiconSet LoadLexicons(const std::filesystem::path &sentiment_path,
                        const std::filesystem::path &intensifier_path,
                        const std::filesystem::path &negator_path);

// Role precedence: Negator (Polarity=Neg or listed lemma), then
// Intensifier, then Sentiment (lemma first, lowercased form as fallback),
// then Neutral. Quantitative modifiers therefore never act as sentiment
// words.
TokenRole ClassifyToken(const Token &token, const LexiconSet &lexicons);

}  // namespace branchpol

#endif  // BRANCHPOL_LEXICON_H_
