// Copyright 2026 The LinkQ Authors.
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

#ifndef LINKQ_TEXT_H_
#define LINKQ_TEXT_H_

#include <string>
#include <string_view>

namespace linkq {

// ASCII whitespace only; the protocol keywords are ASCII.
inline bool IsSpace(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}

std::string_view Trim(std::string_view text);

bool Contains(std::string_view haystack, std::string_view needle);

// Reads a whole file; throws Error(kNotFound) when it cannot be opened.
std::string ReadFileOrThrow(const std::string& path);

}  // namespace linkq

#endif  // LINKQ_TEXT_H_
