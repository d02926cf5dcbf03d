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
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "qaconcur/fuzzypm/vocabulary.hpp"
#include "qaconcur/io.hpp"
#include "qaconcur/rng.hpp"
#include "qaconcur/text.hpp"

namespace qaconcur::fuzzypm {

// A passage source draws token sequences of a fixed length.
class PassageSource {
 public:
  virtual ~PassageSource() = default;
  virtual std::vector<std::string> sample(std::size_t len, Rng& rng) const = 0;
};

// Tokens drawn i.i.d. uniformly from the vocabulary.
class UniformSource : public PassageSource {
 public:
  explicit UniformSource(const Vocabulary& vocab) : vocab_(&vocab) {
    if (vocab.tokens.empty()) {
      throw std::invalid_argument("UniformSource: empty vocabulary");
    }
  }

  std::vector<std::string> sample(std::size_t len, Rng& rng) const override {
    std::vector<std::string> out;
    out.reserve(len);
    for (std::size_t i = 0; i < len; ++i) {
      out.push_back(vocab_->tokens[rng.next_index(vocab_->tokens.size())]);
    }
    return out;
  }

 private:
  const Vocabulary* vocab_;
};

// Contiguous token windows from real text. The corpus file holds paragraphs
// separated by blank lines; paragraphs shorter than the requested length are
// not eligible.
class CorpusSource : public PassageSource {
 public:
  explicit CorpusSource(std::vector<std::vector<std::string>> paragraphs)
      : paragraphs_(std::move(paragraphs)) {
    if (paragraphs_.empty()) {
      throw std::invalid_argument("CorpusSource: no paragraphs");
    }
  }

  std::vector<std::string> sample(std::size_t len, Rng& rng) const override {
    std::vector<std::size_t> eligible;
    for (std::size_t i = 0; i < paragraphs_.size(); ++i) {
      if (paragraphs_[i].size() >= len) eligible.push_back(i);
    }
    if (eligible.empty()) {
      throw std::runtime_error(
          "CorpusSource: no paragraph has >= " + std::to_string(len) +
          " tokens");
    }
    const auto& para = paragraphs_[eligible[rng.next_index(eligible.size())]];
    const std::size_t start = rng.next_index(para.size() - len + 1);
    return {para.begin() + static_cast<std::ptrdiff_t>(start),
            para.begin() + static_cast<std::ptrdiff_t>(start + len)};
  }

 private:
  std::vector<std::vector<std::string>> paragraphs_;
};

// Maximum-likelihood n-gram language model with begin-of-sequence priming:
// sampling starts from a context of n-1 BOS symbols, and unseen contexts
// back off by dropping their oldest token until a seen context (ultimately
// the unigram distribution) is found.
class NgramSource : public PassageSource {
 public:
  NgramSource(std::size_t order,
              const std::vector<std::vector<std::string>>& sequences)
      : order_(order) {
    if (order_ < 1) throw std::invalid_argument("NgramSource: order must be >= 1");
    bool any = false;
    for (const auto& seq : sequences) {
      if (seq.empty()) continue;
      any = true;
      std::vector<std::string> ctx(order_ - 1, kBos);
      for (const std::string& token : seq) {
        for (std::size_t drop = 0; drop <= ctx.size(); ++drop) {
          add_count(
              std::vector<std::string>(ctx.begin() + drop, ctx.end()), token);
        }
        if (order_ > 1) {
          ctx.erase(ctx.begin());
          ctx.push_back(token);
        }
      }
    }
    if (!any) throw std::invalid_argument("NgramSource: empty training corpus");
  }

  std::vector<std::string> sample(std::size_t len, Rng& rng) const override {
    std::vector<std::string> out;
    out.reserve(len);
    std::vector<std::string> ctx(order_ - 1, kBos);
    for (std::size_t i = 0; i < len; ++i) {
      const std::string token = sample_next(ctx, rng);
      out.push_back(token);
      if (order_ > 1) {
        ctx.erase(ctx.begin());
        ctx.push_back(token);
      }
    }
    return out;
  }

 private:
  static constexpr const char* kBos = "<s>";

  struct Distribution {
    // Sorted by token for deterministic sampling order.
    std::vector<std::pair<std::string, std::size_t>> counts;
    std::size_t total = 0;
  };

  static std::string key_of(const std::vector<std::string>& ctx) {
    std::string key;
    for (const std::string& t : ctx) {
      key += t;
      key.push_back('\x1f');
    }
    return key;
  }

  void add_count(const std::vector<std::string>& ctx,
                 const std::string& token) {
    Distribution& d = table_[key_of(ctx)];
    auto it = std::lower_bound(
        d.counts.begin(), d.counts.end(), token,
        [](const auto& entry, const std::string& t) { return entry.first < t; });
    if (it != d.counts.end() && it->first == token) {
      ++it->second;
    } else {
      d.counts.insert(it, {token, 1});
    }
    ++d.total;
  }

  std::string sample_next(const std::vector<std::string>& ctx,
                          Rng& rng) const {
    for (std::size_t drop = 0; drop <= ctx.size(); ++drop) {
      const auto it = table_.find(
          key_of(std::vector<std::string>(ctx.begin() + drop, ctx.end())));
      if (it == table_.end()) continue;
      const Distribution& d = it->second;
      std::size_t pick = rng.next_index(d.total);
      for (const auto& [token, count] : d.counts) {
        if (pick < count) return token;
        pick -= count;
      }
    }
    throw std::logic_error("NgramSource: unigram distribution missing");
  }

  std::size_t order_;
  std::map<std::string, Distribution> table_;
};

// Corpus file: paragraphs separated by blank lines; tokens separated by
// whitespace.
inline std::vector<std::vector<std::string>> load_corpus_paragraphs(
    const std::string& path) {
  std::vector<std::vector<std::string>> paragraphs;
  std::vector<std::string> current;
  auto flush = [&] {
    if (!current.empty()) paragraphs.push_back(std::move(current));
    current = {};
  };
  for (const std::string& line : split_lines(read_file(path))) {
    if (line.empty()) {
      flush();
      continue;
    }
    for (const Token& t : tokenize_ws(line)) current.emplace_back(t.text);
  }
  flush();
  if (paragraphs.empty()) {
    throw std::runtime_error(path + ": corpus has no paragraphs");
  }
  return paragraphs;
}

}  // namespace qaconcur::fuzzypm
