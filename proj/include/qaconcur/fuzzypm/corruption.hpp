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
#include <stdexcept>
#include <string>
#include <vector>

#include "qaconcur/fuzzypm/embedding_index.hpp"
#include "qaconcur/fuzzypm/vocabulary.hpp"
#include "qaconcur/rng.hpp"

namespace qaconcur::fuzzypm {

struct CorruptionConfig {
  double replace_prob = 0.3;       // per-token neighbor-replacement chance
  std::size_t neighbor_k = 100;    // k used when building the index
  std::size_t permute_window = 3;  // max local-permutation displacement
  double dropout_rate = 0.2;       // per-token word-dropout chance
  std::string mask_token = "XXXXX";

  void check() const {
    if (replace_prob < 0.0 || replace_prob > 1.0 || dropout_rate < 0.0 ||
        dropout_rate > 1.0) {
      throw std::invalid_argument(
          "CorruptionConfig: probabilities must be in [0,1]");
    }
    if (neighbor_k == 0) {
      throw std::invalid_argument("CorruptionConfig: neighbor_k must be >= 1");
    }
  }
};

struct ReplacementEvent {
  std::size_t position = 0;  // pre-permutation position
  std::string original;
  std::string replacement;
};

// Optional audit record of one corruption run; lets tests check the
// replaced-token-within-k-NN and displacement invariants after the fact.
struct CorruptionTrace {
  std::vector<ReplacementEvent> replacements;
  // |pre-dropout position - input position| per input token (mask included,
  // always 0 for it).
  std::vector<std::size_t> displacement;
  std::size_t n_dropped = 0;
  std::size_t n_non_mask_input = 0;
};

// Extracts the local-context window around the answer: up to `window` tokens
// total — the answer plus 5 to the left and 4 to the right at window=10 —
// with each side truncated independently at the passage boundary and the
// answer position replaced by mask_token.
inline std::vector<std::string> make_cloze(
    const std::vector<std::string>& passage, std::size_t answer_index,
    const std::string& mask_token, std::size_t window = 10) {
  if (answer_index >= passage.size()) {
    throw std::out_of_range("make_cloze: answer index out of range");
  }
  if (window < 1) throw std::invalid_argument("make_cloze: window must be >= 1");
  const std::size_t left = std::min(window / 2, answer_index);
  const std::size_t right = std::min(window - 1 - window / 2,
                                     passage.size() - answer_index - 1);
  std::vector<std::string> out;
  out.reserve(left + right + 1);
  for (std::size_t i = answer_index - left; i <= answer_index + right; ++i) {
    out.push_back(i == answer_index ? mask_token : passage[i]);
  }
  return out;
}

// Applies the three corruption steps in order: (1) each non-mask token is,
// with probability replace_prob, replaced by a uniform draw from its nearest
// neighbors; (2) tokens are locally permuted by sorting on jittered keys
// key(i) = i + u_i with u_i uniform in [0, permute_window), which bounds
// every token's displacement by permute_window; (3) word dropout removes
// each token with probability dropout_rate. The mask token takes no part in
// any step: it is never replaced, keeps its position, and is never dropped.
inline std::vector<std::string> corrupt(const std::vector<std::string>& question,
                                        const CorruptionConfig& config,
                                        const Vocabulary& vocab,
                                        const EmbeddingIndex& index,
                                        Rng& rng,
                                        CorruptionTrace* trace = nullptr) {
  config.check();
  std::size_t n_mask = 0;
  for (const std::string& t : question) n_mask += (t == config.mask_token);
  if (n_mask != 1) {
    throw std::invalid_argument(
        "corrupt: question must contain the mask token exactly once");
  }

  // Step 1: related-token replacement.
  std::vector<std::string> tokens = question;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (tokens[i] == config.mask_token) continue;
    if (rng.next_unit() >= config.replace_prob) continue;
    const auto it = vocab.index.find(tokens[i]);
    if (it == vocab.index.end() || !index.has_neighbors(it->second)) {
      continue;  // out-of-embedding tokens are never replaced
    }
    const auto& nn = index.neighbors[it->second];
    const std::size_t pick = nn[rng.next_index(nn.size())];
    if (trace) {
      trace->replacements.push_back({i, tokens[i], vocab.tokens[pick]});
    }
    tokens[i] = vocab.tokens[pick];
  }

  // Step 2: local permutation. The mask position is pinned; the remaining
  // tokens are sorted by jittered key and written back into the non-mask
  // slots in order. Keys differ by at least (position gap - window), so a
  // token never travels farther than permute_window positions.
  std::vector<std::size_t> non_mask_positions;
  std::size_t mask_position = 0;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (tokens[i] == config.mask_token) {
      mask_position = i;
    } else {
      non_mask_positions.push_back(i);
    }
  }
  struct Keyed {
    double key;
    std::size_t position;
  };
  std::vector<Keyed> keyed;
  keyed.reserve(non_mask_positions.size());
  for (const std::size_t pos : non_mask_positions) {
    const double jitter =
        rng.next_unit() * static_cast<double>(config.permute_window);
    keyed.push_back({static_cast<double>(pos) + jitter, pos});
  }
  std::stable_sort(keyed.begin(), keyed.end(),
                   [](const Keyed& a, const Keyed& b) { return a.key < b.key; });
  std::vector<std::string> permuted(tokens.size());
  permuted[mask_position] = config.mask_token;
  if (trace) trace->displacement.assign(tokens.size(), 0);
  for (std::size_t slot = 0; slot < keyed.size(); ++slot) {
    const std::size_t to = non_mask_positions[slot];
    const std::size_t from = keyed[slot].position;
    permuted[to] = tokens[from];
    if (trace) {
      trace->displacement[from] = to > from ? to - from : from - to;
    }
  }

  // Step 3: word dropout.
  std::vector<std::string> out;
  out.reserve(permuted.size());
  for (std::size_t i = 0; i < permuted.size(); ++i) {
    if (i == mask_position) {
      out.push_back(permuted[i]);
      continue;
    }
    if (trace) ++trace->n_non_mask_input;
    if (rng.next_unit() < config.dropout_rate) {
      if (trace) ++trace->n_dropped;
      continue;
    }
    out.push_back(permuted[i]);
  }
  return out;
}

}  // namespace qaconcur::fuzzypm
