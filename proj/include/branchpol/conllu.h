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

// CoNLL-U reading and writing, plus the head -> children view of a
// dependency tree that the scorers walk.
//
// Only basic word lines are modeled. Multiword-token ranges ("3-4") and
// empty nodes ("3.1") are dropped on input, and the XPOS, DEPS and MISC
// columns are written back as "_".

#ifndef BRANCHPOL_CONLLU_H_
#define BRANCHPOL_CONLLU_H_

#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace branchpol {

struct Token {
  int id = 0;  // 1-based position in the sentence
  std::string form;
  std::string lemma;
  std::string upos;
  std::map<std::string, std::string> feats;
  int head = 0;  // 0 attaches to the virtual root
  std::string deprel;

  // Looks up a morphological feature, e.g. Feature("Polarity") == "Neg".
  std::optional<std::string_view> Feature(std::string_view name) const;

  bool operator==(const Token &) const = default;
};

enum class TreeDefect {
  kNone,
  kNoRoot,
  kMultipleRoots,
  kHeadOutOfRange,
  kCycle,
};

struct TreeCheck {
  TreeDefect defect = TreeDefect::kNone;
  int token_id = 0;  // offending token, 0 when the whole tree is at fault

  bool ok() const { return defect == TreeDefect::kNone; }
};

// Checks a head assignment, heads[i] being the head of token i + 1.
// Rejects exactly: no root, several roots, a head outside 0..n, and cycles
// (self-attachment included).
TreeCheck CheckHeads(std::span<const int> heads);

std::string_view TreeDefectName(TreeDefect defect);

// A validated dependency tree. Immutable once built.
class Sentence {
 public:
  // Throws Error(kInvalidTree) unless token ids run 1..n in order and the
  // heads form a single-rooted tree. `comments` are whole lines including
  // the leading '#'.
  static Sentence Create(std::vector<Token> tokens,
                         std::vector<std::string> comments = {});

  const std::vector<Token> &tokens() const { return tokens_; }
  const std::vector<std::string> &comments() const { return comments_; }
  const std::optional<std::string> &sent_id() const { return sent_id_; }
  int size() const { return static_cast<int>(tokens_.size()); }

  // 1-based access.
  const Token &token(int id) const { return tokens_.at(id - 1); }

  int root_id() const { return root_id_; }

  bool operator==(const Sentence &) const = default;

 private:
  Sentence() = default;

  std::vector<Token> tokens_;
  std::vector<std::string> comments_;
  std::optional<std::string> sent_id_;
  int root_id_ = 0;
};

// head id -> children ids in increasing order. Head 0 is the virtual root
// and always has exactly one child. Heads without children are absent.
struct HeadChildMap {
  std::map<int, std::vector<int>> branches;

  bool operator==(const HeadChildMap &) const = default;
};

// Parses every sentence in the stream. Throws Error(kMalformedLine) on a
// word line without 10 columns or with non-numeric ID/HEAD, and
// Error(kInvalidTree) on a bad tree; both carry the line and sent_id.
std::vector<Sentence> ParseConllu(std::istream &in);
std::vector<Sentence> ParseConllu(std::string_view text);

// Throws Error(kFileNotFound) if `path` cannot be opened.
std::vector<Sentence> ReadConlluFile(const std::filesystem::path &path);

std::string SerializeConllu(std::span<const Sentence> sentences);

HeadChildMap BuildHeadChildMap(const Sentence &sentence);

// Heads ordered bottom-up: deepest first (depth counts head links down from
// the virtual root), ties by smaller id, head 0 last.
std::vector<int> BranchOrder(const HeadChildMap &map);

}  // namespace branchpol

#endif  // BRANCHPOL_CONLLU_H_
