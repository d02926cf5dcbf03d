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

// Reads one split from a SQuAD v1.1 JSON file (data -> paragraphs -> qas ->
// answers{text, answer_start}). The loader never transforms text; it loads
// everything, then rejects the file with a ValidationError listing every
// offending example id if any span disagrees with its context.
inline std::vector<Paragraph> load_squad_json(const std::string& path) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(read_file(path));
  } catch (const nlohmann::json::parse_error& e) {
    throw std::runtime_error(path + ": malformed JSON: " + e.what());
  }
  std::vector<Paragraph> split;
  try {
    for (const auto& article : doc.at("data")) {
      for (const auto& para : article.at("paragraphs")) {
        Paragraph p;
        p.context = para.at("context").get<std::string>();
        for (const auto& qa : para.at("qas")) {
          QAExample ex;
          ex.id = qa.at("id").get<std::string>();
          ex.question = qa.at("question").get<std::string>();
          for (const auto& ans : qa.at("answers")) {
            AnswerSpan span;
            span.text = ans.at("text").get<std::string>();
            const auto start = ans.at("answer_start");
            if (!start.is_number_integer() || start.get<long long>() < 0) {
              throw std::runtime_error(path + ": qa '" + ex.id +
                                       "': answer_start must be a "
                                       "non-negative integer");
            }
            span.char_start = start.get<std::size_t>();
            ex.answers.push_back(std::move(span));
          }
          p.qas.push_back(std::move(ex));
        }
        split.push_back(std::move(p));
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(path + ": not SQuAD v1.1 schema: " + e.what());
  }
  if (auto violations = validate_split(split); !violations.empty()) {
    throw ValidationError(path + ": invalid examples", std::move(violations));
  }
  return split;
}

namespace detail {

inline nlohmann::ordered_json split_to_squad_json(
    const std::string& title, const std::vector<Paragraph>& split) {
  nlohmann::ordered_json paragraphs = nlohmann::ordered_json::array();
  for (const Paragraph& p : split) {
    nlohmann::ordered_json qas = nlohmann::ordered_json::array();
    for (const QAExample& qa : p.qas) {
      nlohmann::ordered_json answers = nlohmann::ordered_json::array();
      for (const AnswerSpan& a : qa.answers) {
        answers.push_back({{"text", a.text}, {"answer_start", a.char_start}});
      }
      qas.push_back({{"id", qa.id},
                     {"question", qa.question},
                     {"answers", std::move(answers)}});
    }
    paragraphs.push_back(
        {{"context", p.context}, {"qas", std::move(qas)}});
  }
  return nlohmann::ordered_json{
      {"version", "1.1"},
      {"data", nlohmann::ordered_json::array(
                   {{{"title", title}, {"paragraphs", std::move(paragraphs)}}})}};
}

}  // namespace detail

// Serializes a split in SQuAD v1.1 layout. Key order and number formatting
// are fixed, so identical splits produce byte-identical files.
inline std::string to_squad_json(const std::string& title,
                                 const std::vector<Paragraph>& split) {
  return detail::split_to_squad_json(title, split).dump() + "\n";
}

inline void save_squad_json(const std::string& path, const std::string& title,
                            const std::vector<Paragraph>& split) {
  write_file(path, to_squad_json(title, split));
}

}  // namespace qaconcur
