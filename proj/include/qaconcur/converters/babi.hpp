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

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qaconcur/converters/cloze.hpp"
#include "qaconcur/dataset.hpp"
#include "qaconcur/io.hpp"
#include "qaconcur/text.hpp"

namespace qaconcur {

// One bAbI question with the story state visible at the question line. The
// supporting fact is the annotated story sentence containing the answer.
struct BabiExample {
  std::string id;
  std::vector<std::string> story_sentences;  // facts before the question
  std::string question;
  std::string answer;
  std::size_t supporting_fact_index = 0;  // 0-based into story_sentences
};

namespace detail {

// Word-run scan: finds the first whole-word occurrence of `word` in `text`,
// where words are maximal alphanumeric runs. Sentence punctuation ("cats.")
// therefore never blocks a match.
inline std::optional<std::size_t> find_word(std::string_view text,
                                            std::string_view word) {
  if (word.empty()) return std::nullopt;
  std::size_t i = 0;
  while (i < text.size()) {
    if (!is_ascii_alnum(text[i])) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < text.size() && is_ascii_alnum(text[j])) ++j;
    if (text.substr(i, j - i) == word) return i;
    i = j;
  }
  return std::nullopt;
}

}  // namespace detail

// Parses the bAbI task file format: stories of numbered lines, restarting at
// line number 1; question lines carry tab-separated question, answer, and
// supporting-fact line numbers. Each question yields one BabiExample whose
// story is every fact line seen so far in the story. Questions annotated
// with several supporting facts resolve to the first listed fact that
// contains the answer word (or its +s/+es pluralization), falling back to
// the first listed fact.
inline std::vector<BabiExample> parse_babi(const std::string& path) {
  std::vector<BabiExample> out;
  const std::string stem = std::filesystem::path(path).stem().string();
  std::vector<std::string> facts;
  std::map<long long, std::size_t> fact_index_of_line;
  long long prev_line_no = 0;
  std::size_t story_no = 0;
  std::size_t question_no = 0;
  const auto lines = split_lines(read_file(path));
  for (std::size_t ln = 0; ln < lines.size(); ++ln) {
    const std::string& raw = lines[ln];
    if (raw.empty()) continue;
    const std::string where = path + ":" + std::to_string(ln + 1);
    const std::size_t sp = raw.find(' ');
    if (sp == std::string::npos) {
      throw std::runtime_error(where + ": malformed bAbI line");
    }
    long long line_no = 0;
    try {
      line_no = std::stoll(raw.substr(0, sp));
    } catch (const std::exception&) {
      throw std::runtime_error(where + ": bAbI line must start with a number");
    }
    if (line_no <= prev_line_no) {  // new story
      facts.clear();
      fact_index_of_line.clear();
      ++story_no;
      question_no = 0;
    }
    prev_line_no = line_no;
    const std::string body = raw.substr(sp + 1);
    const std::size_t tab = body.find('\t');
    if (tab == std::string::npos) {
      fact_index_of_line[line_no] = facts.size();
      facts.push_back(body);
      continue;
    }
    // Question line: question \t answer \t supporting line numbers.
    const std::size_t tab2 = body.find('\t', tab + 1);
    if (tab2 == std::string::npos) {
      throw std::runtime_error(where + ": bAbI question line needs answer "
                                       "and supporting facts");
    }
    BabiExample ex;
    ex.question = body.substr(0, tab);
    ex.answer = body.substr(tab + 1, tab2 - tab - 1);
    ex.story_sentences = facts;
    std::vector<std::size_t> supports;
    for (const Token& t : tokenize_ws(body.substr(tab2 + 1))) {
      long long support_line = 0;
      try {
        support_line = std::stoll(std::string(t.text));
      } catch (const std::exception&) {
        throw std::runtime_error(where + ": bad supporting fact number");
      }
      const auto it = fact_index_of_line.find(support_line);
      if (it == fact_index_of_line.end()) {
        throw std::runtime_error(where +
                                 ": supporting fact refers to missing line");
      }
      supports.push_back(it->second);
    }
    if (supports.empty()) {
      throw std::runtime_error(where + ": question has no supporting facts");
    }
    ex.supporting_fact_index = supports[0];
    for (std::size_t s : supports) {
      if (detail::find_word(ex.story_sentences[s], ex.answer) ||
          detail::find_word(ex.story_sentences[s], ex.answer + "s") ||
          detail::find_word(ex.story_sentences[s], ex.answer + "es")) {
        ex.supporting_fact_index = s;
        break;
      }
    }
    ++question_no;
    ex.id = stem + "-s" + std::to_string(story_no) + "-q" +
            std::to_string(question_no);
    out.push_back(std::move(ex));
  }
  return out;
}

// Converts one bAbI question: passage = story sentences joined with single
// spaces; the answer is searched as a word within the supporting fact only,
// first verbatim, then with the "s" and "es" pluralization fallbacks (the
// span text is whatever form matched).
inline std::optional<Paragraph> babi_to_extractive(const BabiExample& ex,
                                                   std::string* why_skipped) {
  auto skip = [&](const std::string& reason) -> std::optional<Paragraph> {
    if (why_skipped) *why_skipped = reason;
    return std::nullopt;
  };
  if (ex.supporting_fact_index >= ex.story_sentences.size()) {
    return skip("supporting fact index out of range");
  }
  std::vector<std::size_t> sentence_offsets;
  const std::string passage = join_tokens(ex.story_sentences,
                                          &sentence_offsets);
  const std::string& fact = ex.story_sentences[ex.supporting_fact_index];
  for (const std::string& form :
       {ex.answer, ex.answer + "s", ex.answer + "es"}) {
    if (const auto pos = detail::find_word(fact, form)) {
      Paragraph p;
      p.context = passage;
      p.qas.push_back(QAExample{
          ex.id, ex.question,
          {AnswerSpan{form,
                      sentence_offsets[ex.supporting_fact_index] + *pos}}});
      return p;
    }
  }
  return skip("answer not in supporting fact (incl. pluralization)");
}

inline SplitConversion babi_split_to_extractive(
    const std::vector<BabiExample>& examples) {
  SplitConversion out;
  out.report.n_input = examples.size();
  for (const BabiExample& ex : examples) {
    std::string reason;
    if (auto p = babi_to_extractive(ex, &reason)) {
      out.paragraphs.push_back(std::move(*p));
      ++out.report.n_converted;
    } else {
      out.report.skipped.push_back({ex.id, reason});
    }
  }
  return out;
}

}  // namespace qaconcur
