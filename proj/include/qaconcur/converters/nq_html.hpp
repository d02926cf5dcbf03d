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

#include <cassert>
#include <string>
#include <string_view>
#include <vector>

#include "qaconcur/dataset.hpp"
#include "qaconcur/text.hpp"

namespace qaconcur {

namespace detail {

// Length of the tag name if s starts with "<NAME>" or "</NAME>" at pos,
// where NAME is alphanumeric starting with a letter; 0 otherwise.
inline std::size_t html_tag_name_len(std::string_view s, std::size_t pos,
                                     bool* closing) {
  std::size_t i = pos + 1;
  *closing = i < s.size() && s[i] == '/';
  if (*closing) ++i;
  const std::size_t name_start = i;
  if (i >= s.size() || !is_ascii_alpha(s[i])) return 0;
  while (i < s.size() && is_ascii_alnum(s[i])) ++i;
  if (i >= s.size() || s[i] != '>') return 0;
  return i - name_start;
}

}  // namespace detail

// Rewrites HTML entity markers in an NQ-style context: an opening tag
// "<TAG>" becomes "B"+TAG+"B" and a closing tag "</TAG>" becomes
// "EE"+TAG+"E". Both rewrites preserve string length ("<P>" and "BPB" are
// 3 bytes; "</P>" and "EEPE" are 4), so existing answer offsets stay valid;
// only the covered text changes. Anything that is not a bare alphanumeric
// tag passes through unchanged, which also makes the rewrite idempotent.
inline std::string normalize_nq_html(std::string_view context) {
  std::string out;
  out.reserve(context.size());
  std::size_t i = 0;
  while (i < context.size()) {
    if (context[i] == '<') {
      bool closing = false;
      const std::size_t name_len =
          detail::html_tag_name_len(context, i, &closing);
      if (name_len > 0) {
        const std::string_view name =
            context.substr(i + (closing ? 2 : 1), name_len);
        if (closing) {
          out += "EE";
          out += name;
          out += "E";
        } else {
          out += "B";
          out += name;
          out += "B";
        }
        i += name_len + (closing ? 3 : 2);
        continue;
      }
    }
    out.push_back(context[i]);
    ++i;
  }
  assert(out.size() == context.size());
  return out;
}

// Applies the rewrite to every context of a split. Offsets are unchanged by
// construction; answer texts are re-read from the rewritten context so the
// substring invariant keeps holding. Returns the number of contexts that
// actually changed.
inline std::size_t normalize_nq_html_split(std::vector<Paragraph>& split) {
  std::size_t n_changed = 0;
  for (Paragraph& p : split) {
    std::string rewritten = normalize_nq_html(p.context);
    if (rewritten == p.context) continue;
    ++n_changed;
    p.context = std::move(rewritten);
    for (QAExample& qa : p.qas) {
      for (AnswerSpan& a : qa.answers) {
        a.text = p.context.substr(a.char_start, a.text.size());
      }
    }
  }
  return n_changed;
}

}  // namespace qaconcur
