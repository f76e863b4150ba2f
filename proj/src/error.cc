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

#include "branchpol/error.h"

#include <utility>

namespace branchpol {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kMalformedLine: return "MalformedLine";
    case ErrorCode::kInvalidTree: return "InvalidTree";
    case ErrorCode::kScoreOutOfRange: return "ScoreOutOfRange";
    case ErrorCode::kDuplicateLemma: return "DuplicateLemma";
    case ErrorCode::kRoleConflict: return "RoleConflict";
    case ErrorCode::kMalformedRow: return "MalformedRow";
    case ErrorCode::kFileNotFound: return "FileNotFound";
    case ErrorCode::kEmptyInput: return "EmptyInput";
    case ErrorCode::kBothEmpty: return "BothEmpty";
    case ErrorCode::kMissingColumn: return "MissingColumn";
    case ErrorCode::kBadPolarity: return "BadPolarity";
    case ErrorCode::kEmptyDataset: return "EmptyDataset";
  }
  return "Unknown";
}

namespace {

std::string Decorate(ErrorCode code, const std::string &message, int line,
                     const std::string &context) {
  std::string out(ErrorCodeName(code));
  if (!context.empty()) out += " [" + context + "]";
  if (line > 0) out += " line " + std::to_string(line);
  out += ": " + message;
  return out;
}

}  // namespace

Error::Error(ErrorCode code, const std::string &message, int line,
             std::string context)
    : std::runtime_error(Decorate(code, message, line, context)),
      code_(code),
      line_(line),
      context_(std::move(context)) {}

}  // namespace branchpol
