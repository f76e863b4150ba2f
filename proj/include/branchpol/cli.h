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

#ifndef BRANCHPOL_CLI_H_
#define BRANCHPOL_CLI_H_

#include <iosfwd>

namespace branchpol {

// Exit statuses of the branchpol tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitInput = 2;    // CoNLL-U, manifest or dataset error
inline constexpr int kExitLexicon = 3;  // lexicon files missing or invalid

// Runs `branchpol score|evaluate|compare ...`. Results go to `out`,
// diagnostics to `err`.
int RunCli(int argc, const char *const *argv, std::ostream &out,
           std::ostream &err);

}  // namespace branchpol

#endif  // BRANCHPOL_CLI_H_
