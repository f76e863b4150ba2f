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

#ifndef BRANCHPOL_TEXT_H_
#define BRANCHPOL_TEXT_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace branchpol {

// Lowercases UTF-8 text. Covers ASCII, Latin-1, Latin Extended-A, Greek and
// basic Cyrillic; other code points and invalid byte sequences are copied
// through untouched. Idempotent.
std::string Utf8Lowercase(std::string_view text);

// Splits on a single-character delimiter, keeping empty fields.
std::vector<std::string_view> SplitFields(std::string_view line, char delim);

std::string_view StripWhitespace(std::string_view s);

// Strict integer/real parsing of the whole field; nullopt on any junk.
std::optional<int> ParseInt(std::string_view s);
std::optional<double> ParseReal(std::string_view s);

// Shortest round-trip decimal, always with a fractional part: 1 -> "1.0",
// -1.5 -> "-1.5", -0.6 -> "-0.6".
std::string FormatScore(double value);

}  // namespace branchpol

#endif  // BRANCHPOL_TEXT_H_
