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

#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "qaconcur/dataset.hpp"
#include "qaconcur/text.hpp"

namespace qaconcur {

// Anonymized-entity markers found in a benchmark. CNN-style corpora replace
// entity names with @entityN tokens; a word-vector vocabulary that lacks
// them collapses every entity to the same unknown token, which silently
// breaks the task. This report lets consumers whitelist the markers; the
// data itself is never mutated.
struct VocabGuardReport {
  std::vector<std::string> markers;  // sorted, distinct
};

namespace detail {

inline void scan_markers(std::string_view text, std::set<std::string>& out) {
  std::size_t i = 0;
  while ((i = text.find('@', i)) != std::string_view::npos) {
    const std::string_view rest = text.substr(i);
    if (rest.rfind("@placeholder", 0) == 0) {
      out.insert("@placeholder");
      i += sizeof("@placeholder") - 1;
      continue;
    }
    if (rest.rfind("@entity", 0) == 0) {
      std::size_t j = sizeof("@entity") - 1;
      std::size_t digits = 0;
      while (j < rest.size() && is_ascii_digit(rest[j])) {
        ++j;
        ++digits;
      }
      if (digits > 0) {
        out.insert(std::string(rest.substr(0, j)));
        i += j;
        continue;
      }
    }
    ++i;
  }
}

}  // namespace detail

inline VocabGuardReport cnn_vocab_guard(const ExtractiveBenchmark& b) {
  std::set<std::string> markers;
  for (const std::vector<Paragraph>* split : {&b.train, &b.dev}) {
    for (const Paragraph& p : *split) {
      detail::scan_markers(p.context, markers);
      for (const QAExample& qa : p.qas) {
        detail::scan_markers(qa.question, markers);
        for (const AnswerSpan& a : qa.answers) {
          detail::scan_markers(a.text, markers);
        }
      }
    }
  }
  return VocabGuardReport{{markers.begin(), markers.end()}};
}

}  // namespace qaconcur
