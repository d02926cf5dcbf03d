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

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "qaconcur/dataset.hpp"
#include "qaconcur/io.hpp"
#include "qaconcur/text.hpp"

namespace qaconcur {

// Map from example id to predicted answer string (official SQuAD
// predictions format). Empty strings are legal predictions and score 0.
using PredictionSet = std::map<std::string, std::string>;

struct EvalResult {
  double em = 0.0;  // percentage in [0, 100]
  std::size_t n_examples = 0;
  std::size_t n_scored = 0;
  std::size_t n_missing = 0;
  std::map<std::string, int> per_example;            // id -> 0/1
  std::vector<std::string> unknown_prediction_ids;   // predictions w/o gold
};

namespace detail {

// ASCII punctuation class: printable, non-alphanumeric, non-space.
inline bool is_ascii_punct(char c) noexcept {
  return c >= 33 && c <= 126 && !is_ascii_alnum(c);
}

// Word-constituent byte for article-boundary purposes: ASCII alphanumerics,
// underscore, and any non-ASCII byte (multi-byte characters are treated as
// word characters; only English-letter boundaries matter for a/an/the).
inline bool is_word_byte(char c) noexcept {
  return is_ascii_alnum(c) || c == '_' ||
         static_cast<unsigned char>(c) >= 0x80;
}

// Lowercases ASCII A-Z plus the Latin-1 supplement range U+00C0-U+00DE
// (encoded in UTF-8 as 0xC3 0x80-0x9E), excluding U+00D7 (multiplication
// sign), mirroring full-casefold behavior for the character range that
// actually occurs in SQuAD-style answers. Other scripts pass through.
inline std::string lower(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    const char c = s[i];
    if (c >= 'A' && c <= 'Z') {
      out.push_back(static_cast<char>(c + 32));
    } else if (static_cast<unsigned char>(c) == 0xC3 && i + 1 < s.size()) {
      const unsigned char next = static_cast<unsigned char>(s[i + 1]);
      out.push_back(c);
      if (next >= 0x80 && next <= 0x9E && next != 0x97) {
        out.push_back(static_cast<char>(next + 0x20));
      } else {
        out.push_back(static_cast<char>(next));
      }
      ++i;
    } else {
      out.push_back(c);
    }
  }
  return out;
}

inline std::string remove_punct(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    if (!is_ascii_punct(c)) out.push_back(c);
  }
  return out;
}

// Replaces whole-word occurrences of a/an/the with a single space, the
// regex-\b semantics of the reference scorer.
inline std::string remove_articles(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  std::size_t i = 0;
  while (i < s.size()) {
    if (!is_word_byte(s[i])) {
      out.push_back(s[i]);
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < s.size() && is_word_byte(s[j])) ++j;
    const std::string_view word = s.substr(i, j - i);
    if (word == "a" || word == "an" || word == "the") {
      out.push_back(' ');
    } else {
      out.append(word);
    }
    i = j;
  }
  return out;
}

inline std::string whitespace_fix(std::string_view s) {
  std::string out;
  for (const Token& t : tokenize_ws(s)) {
    if (!out.empty()) out.push_back(' ');
    out.append(t.text);
  }
  return out;
}

}  // namespace detail

// SQuAD v1.1 answer normalization: lowercase, strip ASCII punctuation, drop
// the articles a/an/the as whole words, and collapse whitespace — applied in
// exactly that order.
inline std::string normalize_answer(std::string_view s) {
  return detail::whitespace_fix(
      detail::remove_articles(detail::remove_punct(detail::lower(s))));
}

// 1 iff the normalized prediction equals any normalized gold answer.
inline int exact_match(std::string_view prediction,
                       const std::vector<std::string>& golds) {
  if (golds.empty()) {
    throw std::invalid_argument("exact_match: empty gold list");
  }
  const std::string norm_pred = normalize_answer(prediction);
  for (const std::string& g : golds) {
    if (norm_pred == normalize_answer(g)) return 1;
  }
  return 0;
}

// Scores a prediction set against the gold examples of a split. A missing
// prediction scores 0 and counts in n_missing (in strict mode it is an
// error); predictions whose ids have no gold example are reported back.
inline EvalResult evaluate(const PredictionSet& predictions,
                           const std::vector<Paragraph>& gold_split,
                           bool strict = false) {
  EvalResult result;
  std::vector<Violation> missing;
  std::set<std::string> gold_ids;
  std::size_t n_correct = 0;
  for (const Paragraph& p : gold_split) {
    for (const QAExample& qa : p.qas) {
      gold_ids.insert(qa.id);
      ++result.n_examples;
      const auto it = predictions.find(qa.id);
      if (it == predictions.end()) {
        ++result.n_missing;
        missing.push_back({qa.id, "missing prediction"});
        result.per_example[qa.id] = 0;
        continue;
      }
      ++result.n_scored;
      std::vector<std::string> golds;
      golds.reserve(qa.answers.size());
      for (const AnswerSpan& a : qa.answers) golds.push_back(a.text);
      const int em = exact_match(it->second, golds);
      result.per_example[qa.id] = em;
      n_correct += static_cast<std::size_t>(em);
    }
  }
  if (strict && !missing.empty()) {
    throw ValidationError("strict evaluation: missing predictions",
                          std::move(missing));
  }
  if (result.n_examples == 0) {
    throw std::invalid_argument("evaluate: gold split has no examples");
  }
  for (const auto& [id, text] : predictions) {
    if (!gold_ids.contains(id)) result.unknown_prediction_ids.push_back(id);
  }
  result.em = 100.0 * static_cast<double>(n_correct) /
              static_cast<double>(result.n_examples);
  return result;
}

// Official predictions format: a single JSON object mapping id -> string.
inline PredictionSet load_predictions(const std::string& path) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(read_file(path));
  } catch (const nlohmann::json::parse_error& e) {
    throw std::runtime_error(path + ": malformed JSON: " + e.what());
  }
  if (!doc.is_object()) {
    throw std::runtime_error(path + ": predictions must be a JSON object");
  }
  PredictionSet out;
  for (const auto& [id, value] : doc.items()) {
    if (!value.is_string()) {
      throw std::runtime_error(path + ": prediction for '" + id +
                               "' is not a string");
    }
    out[id] = value.get<std::string>();
  }
  return out;
}

inline std::string to_eval_report_json(const EvalResult& r,
                                       bool per_example = false) {
  nlohmann::ordered_json doc{{"exact_match", r.em},
                             {"n_examples", r.n_examples},
                             {"n_scored", r.n_scored},
                             {"n_missing", r.n_missing},
                             {"unknown_prediction_ids",
                              r.unknown_prediction_ids}};
  if (per_example) doc["per_example"] = r.per_example;
  return doc.dump(2) + "\n";
}

}  // namespace qaconcur
