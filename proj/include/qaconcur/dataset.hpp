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
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qaconcur/text.hpp"

namespace qaconcur {

// One gold answer: a literal substring of the owning paragraph's context.
// char_start is a byte offset into the UTF-8 context and must not split a
// multi-byte character.
struct AnswerSpan {
  std::string text;
  std::size_t char_start = 0;

  bool operator==(const AnswerSpan&) const = default;
};

struct QAExample {
  std::string id;
  std::string question;
  std::vector<AnswerSpan> answers;  // non-empty

  bool operator==(const QAExample&) const = default;
};

struct Paragraph {
  std::string context;  // non-empty
  std::vector<QAExample> qas;

  bool operator==(const Paragraph&) const = default;
};

// A benchmark is a (train, dev) pair of splits. Example ids are unique
// across both splits.
struct ExtractiveBenchmark {
  std::string name;
  std::vector<Paragraph> train;
  std::vector<Paragraph> dev;

  bool operator==(const ExtractiveBenchmark&) const = default;
};

struct BenchmarkStats {
  std::size_t n_train_qas = 0;
  std::size_t n_dev_qas = 0;
  double avg_question_tokens = 0.0;
  double avg_passage_tokens = 0.0;

  bool operator==(const BenchmarkStats&) const = default;
};

// A single invariant violation; validation reports data, it does not throw.
struct Violation {
  std::string id;      // offending example id, or "" for paragraph-level
  std::string reason;
};

// Thrown by loaders and strict-mode paths that refuse invalid data.
class ValidationError : public std::runtime_error {
 public:
  ValidationError(const std::string& message, std::vector<Violation> violations)
      : std::runtime_error(message + format_ids(violations)),
        violations_(std::move(violations)) {}

  const std::vector<Violation>& violations() const noexcept {
    return violations_;
  }

 private:
  static std::string format_ids(const std::vector<Violation>& vs) {
    std::string out;
    for (const Violation& v : vs) {
      out += "\n  [" + (v.id.empty() ? std::string("-") : v.id) + "] " +
             v.reason;
    }
    return out;
  }

  std::vector<Violation> violations_;
};

inline std::size_t n_examples(const std::vector<Paragraph>& split) {
  std::size_t n = 0;
  for (const Paragraph& p : split) n += p.qas.size();
  return n;
}

namespace detail {

inline bool span_splits_utf8(const std::string& context, std::size_t start,
                             std::size_t len) {
  if (start < context.size() &&
      is_utf8_continuation(static_cast<unsigned char>(context[start]))) {
    return true;
  }
  const std::size_t end = start + len;
  if (end < context.size() &&
      is_utf8_continuation(static_cast<unsigned char>(context[end]))) {
    return true;
  }
  return false;
}

inline void validate_split(const std::vector<Paragraph>& split,
                           std::set<std::string>& seen_ids,
                           std::vector<Violation>& out) {
  for (const Paragraph& p : split) {
    if (p.context.empty()) {
      const std::string where = p.qas.empty() ? std::string() : p.qas[0].id;
      out.push_back({where, "paragraph context is empty"});
    }
    for (const QAExample& qa : p.qas) {
      if (!seen_ids.insert(qa.id).second) {
        out.push_back({qa.id, "duplicate example id"});
      }
      if (qa.answers.empty()) {
        out.push_back({qa.id, "example has no answers"});
        continue;
      }
      for (const AnswerSpan& a : qa.answers) {
        if (a.text.empty()) {
          out.push_back({qa.id, "answer text is empty"});
          continue;
        }
        if (a.char_start > p.context.size() ||
            a.char_start + a.text.size() > p.context.size()) {
          out.push_back({qa.id, "answer span out of context bounds"});
          continue;
        }
        if (p.context.compare(a.char_start, a.text.size(), a.text) != 0) {
          out.push_back(
              {qa.id, "answer span does not match context substring"});
          continue;
        }
        if (span_splits_utf8(p.context, a.char_start, a.text.size())) {
          out.push_back({qa.id, "answer span splits a multi-byte character"});
        }
      }
    }
  }
}

}  // namespace detail

// Checks every type invariant: non-empty contexts, globally unique ids,
// non-empty answer lists, span soundness, and UTF-8 boundary soundness.
inline std::vector<Violation> validate(const ExtractiveBenchmark& b) {
  std::vector<Violation> out;
  std::set<std::string> ids;
  detail::validate_split(b.train, ids, out);
  detail::validate_split(b.dev, ids, out);
  return out;
}

inline std::vector<Violation> validate_split(
    const std::vector<Paragraph>& split) {
  std::vector<Violation> out;
  std::set<std::string> ids;
  detail::validate_split(split, ids, out);
  return out;
}

// Corpus descriptors: question length averaged over all train+dev examples,
// passage length averaged over all train+dev paragraphs, with plain
// whitespace tokenization.
inline BenchmarkStats stats(const ExtractiveBenchmark& b) {
  BenchmarkStats s;
  s.n_train_qas = n_examples(b.train);
  s.n_dev_qas = n_examples(b.dev);
  std::size_t question_tokens = 0;
  std::size_t passage_tokens = 0;
  std::size_t n_paragraphs = 0;
  for (const std::vector<Paragraph>* split : {&b.train, &b.dev}) {
    for (const Paragraph& p : *split) {
      ++n_paragraphs;
      passage_tokens += count_ws_tokens(p.context);
      for (const QAExample& qa : p.qas) {
        question_tokens += count_ws_tokens(qa.question);
      }
    }
  }
  const std::size_t n_qas = s.n_train_qas + s.n_dev_qas;
  s.avg_question_tokens =
      n_qas == 0 ? 0.0
                 : static_cast<double>(question_tokens) /
                       static_cast<double>(n_qas);
  s.avg_passage_tokens =
      n_paragraphs == 0 ? 0.0
                        : static_cast<double>(passage_tokens) /
                              static_cast<double>(n_paragraphs);
  return s;
}

}  // namespace qaconcur
