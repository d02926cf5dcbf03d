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

#include <algorithm>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "qaconcur/dataset.hpp"
#include "qaconcur/io.hpp"
#include "qaconcur/text.hpp"

namespace qaconcur {

// A fill-in-the-blank example: the cloze question contains exactly one mask
// token standing in for answer_token. Source-format answer candidate lists
// are discarded by the ingest adapters.
struct ClozeExample {
  std::string id;
  std::string passage;
  std::string question;      // mask token retained verbatim
  std::string answer_token;
  std::string mask_token = "XXXXX";
};

struct SkippedExample {
  std::string id;
  std::string reason;
};

// Conversions are total-or-reported: n_input == n_converted + |skipped|.
struct ConversionReport {
  std::size_t n_input = 0;
  std::size_t n_converted = 0;
  std::vector<SkippedExample> skipped;
};

struct SplitConversion {
  std::vector<Paragraph> paragraphs;
  ConversionReport report;
};

namespace detail {

inline std::size_t count_occurrences(std::string_view haystack,
                                     std::string_view needle) {
  if (needle.empty()) return 0;
  std::size_t n = 0;
  std::size_t pos = 0;
  while ((pos = haystack.find(needle, pos)) != std::string_view::npos) {
    ++n;
    pos += needle.size();
  }
  return n;
}

}  // namespace detail

// Converts one cloze example: passage and question are kept verbatim and the
// answer span is the first occurrence of answer_token as a whole
// whitespace-delimited passage token (token equality, not substring search,
// so "cat" never matches inside "category"). Returns nullopt with a reason
// when the example cannot be converted.
inline std::optional<Paragraph> cloze_to_extractive(const ClozeExample& ex,
                                                    std::string* why_skipped) {
  auto skip = [&](const std::string& reason) -> std::optional<Paragraph> {
    if (why_skipped) *why_skipped = reason;
    return std::nullopt;
  };
  if (ex.mask_token.empty()) return skip("empty mask token");
  const std::size_t mask_count =
      detail::count_occurrences(ex.question, ex.mask_token);
  if (mask_count != 1) {
    return skip("question must contain the mask token exactly once");
  }
  if (ex.answer_token.empty()) return skip("empty answer token");
  for (const Token& t : tokenize_ws(ex.passage)) {
    if (t.text == ex.answer_token) {
      Paragraph p;
      p.context = ex.passage;
      p.qas.push_back(QAExample{
          ex.id, ex.question,
          {AnswerSpan{std::string(t.text), t.offset}}});
      return p;
    }
  }
  return skip("answer token not found in passage");
}

// Batch conversion; output order equals input order, one paragraph per
// converted example.
inline SplitConversion cloze_split_to_extractive(
    const std::vector<ClozeExample>& examples) {
  SplitConversion out;
  out.report.n_input = examples.size();
  for (const ClozeExample& ex : examples) {
    std::string reason;
    if (auto p = cloze_to_extractive(ex, &reason)) {
      out.paragraphs.push_back(std::move(*p));
      ++out.report.n_converted;
    } else {
      out.report.skipped.push_back({ex.id, reason});
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Ingest adapters. Each normalizes a source format to ClozeExample.
// ---------------------------------------------------------------------------

// Generic cloze JSONL: one {"id", "passage", "question", "answer"} object
// per line, optional "mask" field per record. This is also the ingest path
// for LAMBADA-style data prepared externally.
inline std::vector<ClozeExample> parse_cloze_jsonl(
    const std::string& path, const std::string& default_mask = "XXXXX") {
  std::vector<ClozeExample> out;
  const auto lines = split_lines(read_file(path));
  for (std::size_t ln = 0; ln < lines.size(); ++ln) {
    if (lines[ln].empty()) continue;
    nlohmann::json rec;
    try {
      rec = nlohmann::json::parse(lines[ln]);
      ClozeExample ex;
      ex.id = rec.contains("id") ? rec.at("id").get<std::string>()
                                 : path + "#" + std::to_string(ln + 1);
      ex.passage = rec.at("passage").get<std::string>();
      ex.question = rec.at("question").get<std::string>();
      ex.answer_token = rec.at("answer").get<std::string>();
      ex.mask_token = rec.contains("mask") ? rec.at("mask").get<std::string>()
                                           : default_mask;
      out.push_back(std::move(ex));
    } catch (const nlohmann::json::exception& e) {
      throw std::runtime_error(path + ":" + std::to_string(ln + 1) + ": " +
                               e.what());
    }
  }
  return out;
}

// Children's Book Test: blocks of 20 numbered context lines followed by line
// "21 <question>\t<answer>\t\t<candidate|...>". The passage is the 20
// sentences joined with single spaces; candidates are discarded.
inline std::vector<ClozeExample> parse_cbt(const std::string& path) {
  std::vector<ClozeExample> out;
  const std::string stem = std::filesystem::path(path).stem().string();
  std::vector<std::string> sentences;
  for (const std::string& raw : split_lines(read_file(path))) {
    if (raw.empty()) {
      sentences.clear();  // block separator
      continue;
    }
    const std::size_t sp = raw.find(' ');
    if (sp == std::string::npos) {
      throw std::runtime_error(path + ": malformed CBT line: " + raw);
    }
    const std::string body = raw.substr(sp + 1);
    if (body.find('\t') == std::string::npos) {
      sentences.push_back(body);
      continue;
    }
    // Question line: question \t answer \t ignored \t candidates.
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
      const std::size_t tab = body.find('\t', start);
      fields.push_back(body.substr(
          start, tab == std::string::npos ? std::string::npos : tab - start));
      if (tab == std::string::npos) break;
      start = tab + 1;
    }
    if (fields.size() < 2) {
      throw std::runtime_error(path + ": malformed CBT question line: " + raw);
    }
    ClozeExample ex;
    ex.id = stem + "-" + std::to_string(out.size() + 1);
    std::vector<std::string> ctx(sentences.begin(), sentences.end());
    ex.passage = join_tokens(ctx);
    ex.question = fields[0];
    ex.answer_token = fields[1];
    ex.mask_token = "XXXXX";
    out.push_back(std::move(ex));
    sentences.clear();
  }
  return out;
}

// One CNN/Daily Mail ".question" file: blank-line-separated sections — url,
// passage, cloze question (mask "@placeholder"), answer entity, then entity
// mapping lines (discarded).
inline ClozeExample parse_cnn_question_file(const std::string& path) {
  const auto lines = split_lines(read_file(path));
  std::vector<std::string> sections;
  std::string current;
  for (const std::string& line : lines) {
    if (line.empty()) {
      if (!current.empty()) sections.push_back(current);
      current.clear();
    } else {
      if (!current.empty()) current.push_back('\n');
      current += line;
    }
  }
  if (!current.empty()) sections.push_back(current);
  if (sections.size() < 4) {
    throw std::runtime_error(path + ": expected url/passage/question/answer "
                                    "sections in CNN question file");
  }
  ClozeExample ex;
  ex.id = std::filesystem::path(path).stem().string();
  ex.passage = sections[1];
  ex.question = sections[2];
  ex.answer_token = sections[3];
  ex.mask_token = "@placeholder";
  return ex;
}

// A directory of CNN ".question" files, read in sorted filename order so
// conversion output is independent of directory enumeration order.
inline std::vector<ClozeExample> parse_cnn_dir(const std::string& dir) {
  std::vector<std::string> paths;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".question") {
      paths.push_back(entry.path().string());
    }
  }
  std::sort(paths.begin(), paths.end());
  std::vector<ClozeExample> out;
  out.reserve(paths.size());
  for (const std::string& p : paths) out.push_back(parse_cnn_question_file(p));
  return out;
}

// ReCoRD JSON: data[*].passage.text plus qas[*].query with "@placeholder";
// the first listed answer supplies the answer token.
inline std::vector<ClozeExample> parse_record_json(const std::string& path) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(read_file(path));
  } catch (const nlohmann::json::parse_error& e) {
    throw std::runtime_error(path + ": malformed JSON: " + e.what());
  }
  std::vector<ClozeExample> out;
  try {
    for (const auto& article : doc.at("data")) {
      const std::string passage =
          article.at("passage").at("text").get<std::string>();
      for (const auto& qa : article.at("qas")) {
        ClozeExample ex;
        ex.id = qa.at("id").get<std::string>();
        ex.passage = passage;
        ex.question = qa.at("query").get<std::string>();
        const auto& answers = qa.at("answers");
        if (answers.empty()) {
          throw std::runtime_error(path + ": qa '" + ex.id + "' has no answers");
        }
        ex.answer_token = answers.at(0).at("text").get<std::string>();
        ex.mask_token = "@placeholder";
        out.push_back(std::move(ex));
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(path + ": not ReCoRD schema: " + e.what());
  }
  return out;
}

}  // namespace qaconcur
