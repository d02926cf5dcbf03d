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

#include "qaconcur/dataset.hpp"
#include "qaconcur/fuzzypm/corruption.hpp"
#include "qaconcur/fuzzypm/passage_source.hpp"
#include "qaconcur/rng.hpp"
#include "qaconcur/text.hpp"

namespace qaconcur::fuzzypm {

struct GeneratorConfig {
  std::string name = "FuzzyPM";
  std::size_t n_passages = 2000;  // per split
  std::size_t questions_per_passage = 5;
  std::size_t passage_len = 150;
  std::size_t cloze_window = 10;
  CorruptionConfig corruption;
  std::uint64_t seed = 0;

  void check(const Vocabulary& vocab) const {
    corruption.check();
    if (passage_len < 1) {
      throw std::invalid_argument("generate_fuzzypm: passage_len must be >= 1");
    }
    if (questions_per_passage > passage_len) {
      throw std::invalid_argument(
          "generate_fuzzypm: questions_per_passage exceeds passage_len");
    }
    if (vocab.contains(corruption.mask_token)) {
      throw std::invalid_argument(
          "generate_fuzzypm: vocabulary must not contain the mask token '" +
          corruption.mask_token + "'");
    }
  }
};

namespace detail {

inline std::vector<Paragraph> generate_split(
    const GeneratorConfig& config, const PassageSource& source,
    const Vocabulary& vocab, const EmbeddingIndex& index,
    const std::string& split_tag) {
  const std::uint64_t split_seed = derive_seed(config.seed, split_tag);
  std::vector<Paragraph> split;
  split.reserve(config.n_passages);
  for (std::size_t pi = 0; pi < config.n_passages; ++pi) {
    // One derived stream per passage: generation order never matters.
    Rng rng(derive_seed(split_seed, "passage", pi));
    const std::vector<std::string> tokens =
        source.sample(config.passage_len, rng);
    std::vector<std::size_t> offsets;
    Paragraph p;
    p.context = join_tokens(tokens, &offsets);
    const std::vector<std::size_t> answer_positions = rng.permutation_prefix(
        config.passage_len, config.questions_per_passage);
    for (std::size_t qi = 0; qi < answer_positions.size(); ++qi) {
      const std::size_t pos = answer_positions[qi];
      std::vector<std::string> cloze =
          make_cloze(tokens, pos, config.corruption.mask_token,
                     config.cloze_window);
      cloze = corrupt(cloze, config.corruption, vocab, index, rng);
      QAExample ex;
      ex.id = "fuzzypm-" + split_tag + "-p" + std::to_string(pi) + "-q" +
              std::to_string(qi);
      ex.question = join_tokens(cloze);
      ex.answers.push_back(AnswerSpan{tokens[pos], offsets[pos]});
      p.qas.push_back(std::move(ex));
    }
    split.push_back(std::move(p));
  }
  return split;
}

}  // namespace detail

// Generates a FuzzyPM benchmark: per split, n_passages passages sampled from
// the source, questions_per_passage distinct answer positions per passage,
// each question a corrupted cloze window around its answer. The answer span
// is located by the chosen token index (recorded offset, never string
// search). Train and dev use disjoint sub-seeds of config.seed.
inline ExtractiveBenchmark generate_fuzzypm(const GeneratorConfig& config,
                                            const PassageSource& source,
                                            const Vocabulary& vocab,
                                            const EmbeddingIndex& index) {
  config.check(vocab);
  ExtractiveBenchmark b;
  b.name = config.name;
  b.train = detail::generate_split(config, source, vocab, index, "train");
  b.dev = detail::generate_split(config, source, vocab, index, "dev");
  return b;
}

}  // namespace qaconcur::fuzzypm
