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
#include <cmath>
#include <string>
#include <vector>

#include "qaconcur/fuzzypm/vocabulary.hpp"
#include "qaconcur/io.hpp"
#include "qaconcur/text.hpp"

namespace qaconcur::fuzzypm {

// Per-token nearest-neighbor lists over unit-normalized embedding vectors,
// Euclidean distance. Neighbors are computed exactly by brute force (the
// vocabularies here are small enough that an approximate index would only
// blur the replaced-token-within-k-NN invariant).
struct EmbeddingIndex {
  std::size_t dim = 0;
  std::size_t k = 0;
  // Parallel to Vocabulary::tokens. Tokens without a usable embedding have
  // an empty list and are never replaced (and never serve as a replacement).
  std::vector<std::vector<std::size_t>> neighbors;
  std::vector<std::string> warnings;

  bool has_neighbors(std::size_t vocab_index) const {
    return vocab_index < neighbors.size() && !neighbors[vocab_index].empty();
  }
};

// Embedding text format: one token per line, the token followed by its
// whitespace-separated float components. Tokens outside the vocabulary are
// ignored; vocabulary tokens missing from the file or carrying a zero vector
// are excluded with a warning.
inline EmbeddingIndex build_neighbor_index(const std::string& embedding_path,
                                           const Vocabulary& vocab,
                                           std::size_t k) {
  if (k == 0) throw std::invalid_argument("build_neighbor_index: k must be >= 1");
  EmbeddingIndex index;
  index.k = k;
  index.neighbors.assign(vocab.tokens.size(), {});

  std::vector<std::vector<double>> vectors(vocab.tokens.size());
  const auto lines = split_lines(read_file(embedding_path));
  for (std::size_t ln = 0; ln < lines.size(); ++ln) {
    if (lines[ln].empty()) continue;
    const std::string where =
        embedding_path + ":" + std::to_string(ln + 1);
    const auto tokens = tokenize_ws(lines[ln]);
    if (tokens.size() < 2) {
      throw std::runtime_error(where + ": malformed embedding line");
    }
    const std::string word(tokens[0].text);
    std::vector<double> vec;
    vec.reserve(tokens.size() - 1);
    for (std::size_t t = 1; t < tokens.size(); ++t) {
      const std::string field(tokens[t].text);
      try {
        std::size_t pos = 0;
        vec.push_back(std::stod(field, &pos));
        if (pos != field.size()) throw std::invalid_argument(field);
      } catch (const std::exception&) {
        throw std::runtime_error(where + ": invalid float '" + field + "'");
      }
    }
    if (index.dim == 0) {
      index.dim = vec.size();
    } else if (vec.size() != index.dim) {
      throw std::runtime_error(where + ": dimension mismatch (got " +
                               std::to_string(vec.size()) + ", expected " +
                               std::to_string(index.dim) + ")");
    }
    const auto it = vocab.index.find(word);
    if (it == vocab.index.end()) continue;
    if (!vectors[it->second].empty()) {
      index.warnings.push_back("duplicate embedding for token '" + word +
                               "'; first occurrence kept");
      continue;
    }
    double norm_sq = 0.0;
    for (double x : vec) norm_sq += x * x;
    if (norm_sq == 0.0) {
      index.warnings.push_back("token '" + word +
                               "' has a zero vector; cannot normalize, "
                               "token excluded");
      continue;
    }
    const double inv = 1.0 / std::sqrt(norm_sq);
    for (double& x : vec) x *= inv;
    vectors[it->second] = std::move(vec);
  }

  std::vector<std::size_t> embedded;
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    if (!vectors[i].empty()) embedded.push_back(i);
  }
  if (embedded.empty()) {
    throw std::runtime_error(embedding_path +
                             ": no vocabulary token has an embedding");
  }
  if (embedded.size() < vocab.tokens.size()) {
    index.warnings.push_back(
        std::to_string(vocab.tokens.size() - embedded.size()) +
        " vocabulary token(s) have no embedding; they will never be "
        "replaced");
  }

  // Exact k-NN. Ties in distance break toward the lower vocabulary index so
  // neighbor lists are reproducible.
  for (const std::size_t i : embedded) {
    std::vector<std::pair<double, std::size_t>> dist;
    dist.reserve(embedded.size() - 1);
    for (const std::size_t j : embedded) {
      if (j == i) continue;
      double d2 = 0.0;
      for (std::size_t c = 0; c < index.dim; ++c) {
        const double d = vectors[i][c] - vectors[j][c];
        d2 += d * d;
      }
      dist.emplace_back(d2, j);
    }
    const std::size_t take = std::min(k, dist.size());
    std::partial_sort(dist.begin(), dist.begin() + take, dist.end());
    index.neighbors[i].reserve(take);
    for (std::size_t t = 0; t < take; ++t) {
      index.neighbors[i].push_back(dist[t].second);
    }
  }
  return index;
}

}  // namespace qaconcur::fuzzypm
