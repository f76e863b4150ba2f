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

#ifndef BRANCHPOL_ERROR_H_
#define BRANCHPOL_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace branchpol {

enum class ErrorCode {
  // CoNLL-U input.
  kMalformedLine,
  kInvalidTree,
  // Lexicon files.
  kScoreOutOfRange,
  kDuplicateLemma,
  kRoleConflict,
  kMalformedRow,
  // Shared.
  kFileNotFound,
  // Aggregation.
  kEmptyInput,
  kBothEmpty,
  // Datasets.
  kMissingColumn,
  kBadPolarity,
  kEmptyDataset,
};

std::string_view ErrorCodeName(ErrorCode code);

// Every failure raised by the library. Location fields are filled in where
// the error originates from a line of an input file.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string &message, int line = 0,
        std::string context = {});

  ErrorCode code() const { return code_; }

  // 1-based line number in the offending input, 0 if not applicable.
  int line() const { return line_; }

  // Sentence id for CoNLL-U errors, file path for file errors.
  const std::string &context() const { return context_; }

 private:
  ErrorCode code_;
  int line_;
  std::string context_;
};

}  // namespace branchpol

#endif  // BRANCHPOL_ERROR_H_
