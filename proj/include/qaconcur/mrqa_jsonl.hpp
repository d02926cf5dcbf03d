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
#include <vector>

#include <nlohmann/json.hpp>

#include "qaconcur/dataset.hpp"
#include "qaconcur/io.hpp"

namespace qaconcur {

// Reads an MRQA 2019 shared-task JSONL file: a {"header": ...} line followed
// by one record per line with context, qas, and detected_answers whose
// char_spans are *inclusive* [start, end] pairs. Every span of every
// detected answer is preserved as one AnswerSpan; span text is taken from
// the context substring, which is the authoritative form.
inline std::vector<Paragraph> load_mrqa_jsonl(const std::string& path) {
  const std::vector<std::string> lines = split_lines(read_file(path));
  if (lines.empty()) {
    throw std::runtime_error(path + ": missing MRQA header line");
  }
  nlohmann::json header;
  try {
    header = nlohmann::json::parse(lines[0]);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::runtime_error(path + ": malformed header line: " + e.what());
  }
  if (!header.is_object() || !header.contains("header")) {
    throw std::runtime_error(path + ": first line is not an MRQA header");
  }

  std::vector<Paragraph> split;
  for (std::size_t ln = 1; ln < lines.size(); ++ln) {
    if (lines[ln].empty()) continue;
    nlohmann::json rec;
    try {
      rec = nlohmann::json::parse(lines[ln]);
    } catch (const nlohmann::json::parse_error& e) {
      throw std::runtime_error(path + ":" + std::to_string(ln + 1) +
                               ": malformed record: " + e.what());
    }
    try {
      Paragraph p;
      p.context = rec.at("context").get<std::string>();
      for (const auto& qa : rec.at("qas")) {
        QAExample ex;
        ex.id = qa.contains("qid") ? qa.at("qid").get<std::string>()
                                   : qa.at("id").get<std::string>();
        ex.question = qa.at("question").get<std::string>();
        for (const auto& det : qa.at("detected_answers")) {
          for (const auto& span : det.at("char_spans")) {
            const long long start = span.at(0).get<long long>();
            const long long end = span.at(1).get<long long>();
            if (start < 0 || end < start) {
              throw std::runtime_error(path + ": qa '" + ex.id +
                                       "': char span end < start");
            }
            if (static_cast<std::size_t>(end) >= p.context.size()) {
              throw std::runtime_error(path + ": qa '" + ex.id +
                                       "': char span outside context bounds");
            }
            AnswerSpan a;
            a.char_start = static_cast<std::size_t>(start);
            a.text = p.context.substr(a.char_start,
                                      static_cast<std::size_t>(end - start) + 1);
            ex.answers.push_back(std::move(a));
          }
        }
        p.qas.push_back(std::move(ex));
      }
      split.push_back(std::move(p));
    } catch (const nlohmann::json::exception& e) {
      throw std::runtime_error(path + ":" + std::to_string(ln + 1) +
                               ": not MRQA record schema: " + e.what());
    }
  }
  if (auto violations = validate_split(split); !violations.empty()) {
    throw ValidationError(path + ": invalid examples", std::move(violations));
  }
  return split;
}

}  // namespace qaconcur
