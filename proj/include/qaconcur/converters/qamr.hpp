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
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "qaconcur/converters/cloze.hpp"
#include "qaconcur/dataset.hpp"
#include "qaconcur/io.hpp"
#include "qaconcur/metrics.hpp"

namespace qaconcur {

// One QAMR annotation: a question asked of one sentence of a passage, with
// the answer span relative to that sentence. Rows with an empty question
// contribute only their sentence text (sentences without questions still
// participate in passage reconstruction).
struct QamrItem {
  std::string passage_id;
  std::size_t sentence_index = 0;
  std::string sentence;
  std::string question;
  std::optional<AnswerSpan> answer;  // sentence-relative
};

// Rebuilds full passages by concatenating each passage's sentences (joined
// with single spaces, indices must be contiguous from 0) and shifts answer
// offsets from sentence-relative to passage-relative. Questions whose
// normalized text appears for more than one sentence of the same passage
// are removed entirely (all copies), reported as skipped.
inline SplitConversion qamr_reconstruct(const std::vector<QamrItem>& items) {
  // Group by passage_id, preserving first-appearance order.
  std::vector<std::string> passage_order;
  std::map<std::string, std::vector<const QamrItem*>> groups;
  for (const QamrItem& item : items) {
    auto [it, inserted] = groups.try_emplace(item.passage_id);
    if (inserted) passage_order.push_back(item.passage_id);
    it->second.push_back(&item);
  }

  SplitConversion out;
  for (const std::string& pid : passage_order) {
    const auto& group = groups[pid];

    // Collect sentences and check contiguity.
    std::map<std::size_t, std::string> sentences;
    for (const QamrItem* item : group) {
      auto [it, inserted] =
          sentences.try_emplace(item->sentence_index, item->sentence);
      if (!inserted && it->second != item->sentence) {
        throw std::runtime_error("qamr_reconstruct: passage '" + pid +
                                 "' has conflicting text for sentence " +
                                 std::to_string(item->sentence_index));
      }
    }
    for (std::size_t expect = 0; const auto& [idx, text] : sentences) {
      if (idx != expect++) {
        throw std::runtime_error("qamr_reconstruct: passage '" + pid +
                                 "' has a gap in sentence indices");
      }
    }

    std::vector<std::string> ordered;
    ordered.reserve(sentences.size());
    for (const auto& [idx, text] : sentences) ordered.push_back(text);
    std::vector<std::size_t> sentence_offsets;
    Paragraph p;
    p.context = join_tokens(ordered, &sentence_offsets);

    // A normalized question string seen on more than one distinct sentence
    // marks every copy for removal.
    std::map<std::string, std::set<std::size_t>> question_sentences;
    for (const QamrItem* item : group) {
      if (item->question.empty()) continue;
      question_sentences[normalize_answer(item->question)].insert(
          item->sentence_index);
    }

    std::size_t qa_no = 0;
    for (const QamrItem* item : group) {
      if (item->question.empty()) continue;
      ++out.report.n_input;
      ++qa_no;
      const std::string id = pid + "-q" + std::to_string(qa_no);
      if (question_sentences[normalize_answer(item->question)].size() > 1) {
        out.report.skipped.push_back(
            {id, "question duplicated across sentences"});
        continue;
      }
      if (!item->answer) {
        out.report.skipped.push_back({id, "question has no answer span"});
        continue;
      }
      AnswerSpan shifted = *item->answer;
      if (shifted.char_start + shifted.text.size() > item->sentence.size() ||
          item->sentence.compare(shifted.char_start, shifted.text.size(),
                                 shifted.text) != 0) {
        out.report.skipped.push_back(
            {id, "answer span does not match its sentence"});
        continue;
      }
      shifted.char_start += sentence_offsets[item->sentence_index];
      p.qas.push_back(QAExample{id, item->question, {std::move(shifted)}});
      ++out.report.n_converted;
    }
    out.paragraphs.push_back(std::move(p));
  }
  return out;
}

// QAMR TSV rows: passage_id, sentence_index, sentence, then optionally
// question, answer_start, answer_text. Three-field rows register a sentence
// without a question.
inline std::vector<QamrItem> parse_qamr_tsv(const std::string& path) {
  std::vector<QamrItem> out;
  const auto lines = split_lines(read_file(path));
  for (std::size_t ln = 0; ln < lines.size(); ++ln) {
    const std::string& line = lines[ln];
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
      const std::size_t tab = line.find('\t', start);
      fields.push_back(line.substr(
          start, tab == std::string::npos ? std::string::npos : tab - start));
      if (tab == std::string::npos) break;
      start = tab + 1;
    }
    const std::string where = path + ":" + std::to_string(ln + 1);
    if (fields.size() != 3 && fields.size() != 6) {
      throw std::runtime_error(where + ": expected 3 or 6 tab-separated "
                                       "fields");
    }
    QamrItem item;
    item.passage_id = fields[0];
    try {
      item.sentence_index = std::stoull(fields[1]);
    } catch (const std::exception&) {
      throw std::runtime_error(where + ": bad sentence index");
    }
    item.sentence = fields[2];
    if (fields.size() == 6) {
      item.question = fields[3];
      AnswerSpan a;
      try {
        a.char_start = std::stoull(fields[4]);
      } catch (const std::exception&) {
        throw std::runtime_error(where + ": bad answer offset");
      }
      a.text = fields[5];
      item.answer = std::move(a);
    }
    out.push_back(std::move(item));
  }
  return out;
}

}  // namespace qaconcur
