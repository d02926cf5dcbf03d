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

#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "qaconcur/io.hpp"
#include "qaconcur/text.hpp"

namespace qaconcur::fuzzypm {

// Ordered list of distinct token types.
struct Vocabulary {
  std::vector<std::string> tokens;
  std::unordered_map<std::string, std::size_t> index;

  bool contains(std::string_view token) const {
    return index.find(std::string(token)) != index.end();
  }
};

inline Vocabulary make_vocabulary(std::vector<std::string> tokens,
                                  const std::string& origin = "vocabulary") {
  Vocabulary v;
  v.tokens = std::move(tokens);
  for (std::size_t i = 0; i < v.tokens.size(); ++i) {
    const std::string& t = v.tokens[i];
    if (t.empty()) {
      throw std::runtime_error(origin + ": empty token at position " +
                               std::to_string(i + 1));
    }
    for (char c : t) {
      if (is_ascii_space(c)) {
        throw std::runtime_error(origin + ": token contains whitespace: '" +
                                 t + "'");
      }
    }
    if (!v.index.emplace(t, i).second) {
      throw std::runtime_error(origin + ": duplicate token '" + t + "'");
    }
  }
  if (v.tokens.empty()) throw std::runtime_error(origin + ": empty vocabulary");
  return v;
}

// One token per line; blank lines are ignored. Duplicates and intra-token
// whitespace are format errors.
inline Vocabulary load_vocabulary(const std::string& path) {
  std::vector<std::string> tokens;
  for (const std::string& line : split_lines(read_file(path))) {
    if (!line.empty()) tokens.push_back(line);
  }
  return make_vocabulary(std::move(tokens), path);
}

}  // namespace qaconcur::fuzzypm
