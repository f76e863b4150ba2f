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

#include "branchpol/conllu.h"

#include <algorithm>
#include <fstream>
#include <istream>
#include <sstream>
#include <utility>

#include "branchpol/error.h"
#include "branchpol/text.h"

namespace branchpol {
namespace {

constexpr int kColumns = 10;
constexpr std::string_view kSentIdPrefix = "# sent_id = ";

std::optional<std::string> FindSentId(
    const std::vector<std::string> &comments) {
  for (const auto &c : comments) {
    if (c.rfind(kSentIdPrefix, 0) == 0) {
      return std::string(StripWhitespace(c.substr(kSentIdPrefix.size())));
    }
  }
  return std::nullopt;
}

std::string TreeMessage(const TreeCheck &check) {
  std::string msg(TreeDefectName(check.defect));
  if (check.token_id > 0) msg += " at token " + std::to_string(check.token_id);
  return msg;
}

// Accumulates one blank-line-delimited block.
struct Block {
  std::vector<std::string> comments;
  std::vector<Token> tokens;
  std::vector<int> token_lines;
  int first_line = 0;

  bool empty() const { return comments.empty() && tokens.empty(); }
};

std::map<std::string, std::string> ParseFeats(std::string_view field,
                                              int line_no,
                                              const std::string &sent_id) {
  std::map<std::string, std::string> feats;
  if (field == "_") return feats;
  for (std::string_view pair : SplitFields(field, '|')) {
    const size_t eq = pair.find('=');
    if (eq == std::string_view::npos || eq == 0) {
      throw Error(ErrorCode::kMalformedLine,
                  "bad FEATS entry '" + std::string(pair) + "'", line_no,
                  sent_id);
    }
    auto [it, inserted] = feats.emplace(std::string(pair.substr(0, eq)),
                                        std::string(pair.substr(eq + 1)));
    if (!inserted) {
      throw Error(ErrorCode::kMalformedLine,
                  "duplicate feature '" + it->first + "'", line_no, sent_id);
    }
  }
  return feats;
}

Sentence FinishBlock(Block &block) {
  const std::string sent_id = FindSentId(block.comments).value_or("");
  const int n = static_cast<int>(block.tokens.size());
  for (int i = 0; i < n; ++i) {
    if (block.tokens[i].id != i + 1) {
      throw Error(ErrorCode::kInvalidTree,
                  "token ids must run 1..n in order, found " +
                      std::to_string(block.tokens[i].id) + " at position " +
                      std::to_string(i + 1),
                  block.token_lines[i], sent_id);
    }
  }
  std::vector<int> heads;
  heads.reserve(n);
  for (const auto &t : block.tokens) heads.push_back(t.head);
  const TreeCheck check = CheckHeads(heads);
  if (!check.ok()) {
    const int line = check.token_id > 0 ? block.token_lines[check.token_id - 1]
                                        : block.first_line;
    throw Error(ErrorCode::kInvalidTree, TreeMessage(check), line, sent_id);
  }
  return Sentence::Create(std::move(block.tokens), std::move(block.comments));
}

}  // namespace

std::optional<std::string_view> Token::Feature(std::string_view name) const {
  const auto it = feats.find(std::string(name));
  if (it == feats.end()) return std::nullopt;
  return std::string_view(it->second);
}

std::string_view TreeDefectName(TreeDefect defect) {
  switch (defect) {
    case TreeDefect::kNone: return "ok";
    case TreeDefect::kNoRoot: return "no root";
    case TreeDefect::kMultipleRoots: return "multiple roots";
    case TreeDefect::kHeadOutOfRange: return "head out of range";
    case TreeDefect::kCycle: return "cycle";
  }
  return "unknown";
}

TreeCheck CheckHeads(std::span<const int> heads) {
  const int n = static_cast<int>(heads.size());
  for (int i = 0; i < n; ++i) {
    if (heads[i] < 0 || heads[i] > n) {
      return {TreeDefect::kHeadOutOfRange, i + 1};
    }
  }
  const auto roots = std::count(heads.begin(), heads.end(), 0);
  if (roots == 0) return {TreeDefect::kNoRoot, 0};
  if (roots > 1) {
    int second = 0;
    for (int i = 0, seen = 0; i < n; ++i) {
      if (heads[i] == 0 && ++seen == 2) second = i + 1;
    }
    return {TreeDefect::kMultipleRoots, second};
  }
  // Any walk longer than n links without reaching 0 has entered a cycle;
  // after n steps it sits on that cycle. Report the cycle's smallest id.
  for (int start = 1; start <= n; ++start) {
    int node = start;
    int steps = 0;
    while (node != 0 && steps <= n) {
      node = heads[node - 1];
      ++steps;
    }
    if (node == 0) continue;
    int smallest = node;
    for (int walk = heads[node - 1]; walk != node; walk = heads[walk - 1]) {
      smallest = std::min(smallest, walk);
    }
    return {TreeDefect::kCycle, smallest};
  }
  return {};
}

Sentence Sentence::Create(std::vector<Token> tokens,
                          std::vector<std::string> comments) {
  const int n = static_cast<int>(tokens.size());
  std::vector<int> heads;
  heads.reserve(n);
  for (int i = 0; i < n; ++i) {
    if (tokens[i].id != i + 1) {
      throw Error(ErrorCode::kInvalidTree,
                  "token ids must run 1..n in order, found " +
                      std::to_string(tokens[i].id) + " at position " +
                      std::to_string(i + 1));
    }
    heads.push_back(tokens[i].head);
  }
  Sentence s;
  s.sent_id_ = FindSentId(comments);
  const TreeCheck check = CheckHeads(heads);
  if (!check.ok()) {
    throw Error(ErrorCode::kInvalidTree, TreeMessage(check), 0,
                s.sent_id_.value_or(""));
  }
  s.root_id_ = static_cast<int>(
      std::find(heads.begin(), heads.end(), 0) - heads.begin() + 1);
  s.tokens_ = std::move(tokens);
  s.comments_ = std::move(comments);
  return s;
}

std::vector<Sentence> ParseConllu(std::istream &in) {
  std::vector<Sentence> sentences;
  Block block;
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    if (StripWhitespace(raw).empty()) {
      if (!block.tokens.empty()) sentences.push_back(FinishBlock(block));
      block = Block{};
      continue;
    }
    if (block.empty()) block.first_line = line_no;
    if (raw.front() == '#') {
      block.comments.push_back(raw);
      continue;
    }
    const std::string sent_id = FindSentId(block.comments).value_or("");
    const auto cols = SplitFields(raw, '\t');
    if (static_cast<int>(cols.size()) != kColumns) {
      throw Error(ErrorCode::kMalformedLine,
                  "expected 10 tab-separated columns, found " +
                      std::to_string(cols.size()),
                  line_no, sent_id);
    }
    // Multiword ranges and empty nodes.
    if (cols[0].find_first_of("-.") != std::string_view::npos) continue;

    Token token;
    const auto id = ParseInt(cols[0]);
    if (!id || *id < 1) {
      throw Error(ErrorCode::kMalformedLine,
                  "bad ID '" + std::string(cols[0]) + "'", line_no, sent_id);
    }
    const auto head = ParseInt(cols[6]);
    if (!head || *head < 0) {
      throw Error(ErrorCode::kMalformedLine,
                  "bad HEAD '" + std::string(cols[6]) + "'", line_no, sent_id);
    }
    token.id = *id;
    token.form = cols[1];
    token.lemma = cols[2];
    token.upos = cols[3];
    token.feats = ParseFeats(cols[5], line_no, sent_id);
    token.head = *head;
    token.deprel = cols[7];
    block.tokens.push_back(std::move(token));
    block.token_lines.push_back(line_no);
  }
  if (!block.tokens.empty()) sentences.push_back(FinishBlock(block));
  return sentences;
}

std::vector<Sentence> ParseConllu(std::string_view text) {
  std::istringstream in{std::string(text)};
  return ParseConllu(in);
}

std::vector<Sentence> ReadConlluFile(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::kFileNotFound, "cannot open CoNLL-U file", 0,
                path.string());
  }
  try {
    return ParseConllu(in);
  } catch (const Error &e) {
    // Prefix the file so callers can report which input failed.
    const std::string where = path.string() +
                              (e.context().empty() ? "" : ":" + e.context());
    throw Error(e.code(), e.what(), 0, where);
  }
}

std::string SerializeConllu(std::span<const Sentence> sentences) {
  std::ostringstream out;
  for (const auto &s : sentences) {
    for (const auto &c : s.comments()) out << c << '\n';
    for (const auto &t : s.tokens()) {
      out << t.id << '\t' << t.form << '\t' << t.lemma << '\t' << t.upos
          << "\t_\t";
      if (t.feats.empty()) {
        out << '_';
      } else {
        bool first = true;
        for (const auto &[key, value] : t.feats) {
          if (!first) out << '|';
          out << key << '=' << value;
          first = false;
        }
      }
      out << '\t' << t.head << '\t' << t.deprel << "\t_\t_\n";
    }
    out << '\n';
  }
  return out.str();
}

HeadChildMap BuildHeadChildMap(const Sentence &sentence) {
  HeadChildMap map;
  // Tokens are visited in id order, so each child list comes out sorted.
  for (const auto &t : sentence.tokens()) {
    map.branches[t.head].push_back(t.id);
  }
  return map;
}

std::vector<int> BranchOrder(const HeadChildMap &map) {
  std::map<int, int> parent;
  for (const auto &[head, children] : map.branches) {
    for (int c : children) parent[c] = head;
  }
  std::map<int, int> depth{{0, 0}};
  auto depth_of = [&](int node) {
    std::vector<int> pending;
    while (!depth.contains(node)) {
      pending.push_back(node);
      node = parent.at(node);
    }
    int d = depth[node];
    for (auto it = pending.rbegin(); it != pending.rend(); ++it) {
      depth[*it] = ++d;
    }
    return depth[pending.empty() ? node : pending.front()];
  };

  std::vector<std::pair<int, int>> keyed;  // (depth, head)
  for (const auto &[head, children] : map.branches) {
    keyed.emplace_back(depth_of(head), head);
  }
  std::sort(keyed.begin(), keyed.end(), [](const auto &a, const auto &b) {
    if (a.first != b.first) return a.first > b.first;
    return a.second < b.second;
  });
  std::vector<int> order;
  order.reserve(keyed.size());
  for (const auto &[d, head] : keyed) order.push_back(head);
  return order;
}

}  // namespace branchpol
