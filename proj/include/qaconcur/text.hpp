// Copyright 2026 The qaconcur Authors.
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

#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace qaconcur {

inline bool is_ascii_space(char c) noexcept {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}

inline bool is_ascii_digit(char c) noexcept { return c >= '0' && c <= '9'; }

inline bool is_ascii_alpha(char c) noexcept {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}

inline bool is_ascii_alnum(char c) noexcept {
  return is_ascii_digit(c) || is_ascii_alpha(c);
}

// UTF-8 continuation byte (0b10xxxxxx). Byte offsets that land on one split
// a multi-byte character.
inline bool is_utf8_continuation(unsigned char b) noexcept {
  return (b & 0xC0) == 0x80;
}

// A whitespace-delimited token together with its byte offset in the source.
struct Token {
  std::string_view text;
  std::size_t offset = 0;
};

// Splits on runs of ASCII whitespace, keeping byte offsets.
inline std::vector<Token> tokenize_ws(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && is_ascii_space(s[i])) ++i;
    const std::size_t start = i;
    while (i < s.size() && !is_ascii_space(s[i])) ++i;
    if (i > start) out.push_back(Token{s.substr(start, i - start), start});
  }
  return out;
}

inline std::size_t count_ws_tokens(std::string_view s) {
  std::size_t n = 0;
  bool in_token = false;
  for (char c : s) {
    const bool space = is_ascii_space(c);
    if (!space && !in_token) ++n;
    in_token = !space;
  }
  return n;
}

// Joins tokens with single spaces, optionally reporting each token's byte
// offset in the joined string.
inline std::string join_tokens(const std::vector<std::string>& tokens,
                               std::vector<std::size_t>* offsets = nullptr) {
  std::string out;
  if (offsets) offsets->clear();
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (i > 0) out.push_back(' ');
    if (offsets) offsets->push_back(out.size());
    out += tokens[i];
  }
  return out;
}

}  // namespace qaconcur
