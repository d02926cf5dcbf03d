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

#include <set>
#include <stdexcept>
#include <vector>

#include "qaconcur/dataset.hpp"
#include "qaconcur/rng.hpp"

namespace qaconcur {

// Keeps the first n examples of the seeded permutation of all examples in
// the split. Because the permutation depends only on the seed, samples nest:
// with one seed, the n1-example subset is contained in the n2-example subset
// for every n1 < n2, making downsampling ladders comparable. Paragraph order
// and within-paragraph example order are preserved; paragraphs left with no
// examples are dropped.
inline std::vector<Paragraph> downsample_split(
    const std::vector<Paragraph>& split, std::size_t n, std::uint64_t seed) {
  const std::size_t total = n_examples(split);
  if (n > total) {
    throw std::invalid_argument(
        "downsample: n (" + std::to_string(n) + ") exceeds example count (" +
        std::to_string(total) + ")");
  }
  Rng rng(derive_seed(seed, "downsample"));
  const std::vector<std::size_t> keep_list = rng.permutation_prefix(total, n);
  const std::set<std::size_t> keep(keep_list.begin(), keep_list.end());
  std::vector<Paragraph> out;
  std::size_t flat = 0;
  for (const Paragraph& p : split) {
    Paragraph kept;
    kept.context = p.context;
    for (const QAExample& qa : p.qas) {
      if (keep.contains(flat++)) kept.qas.push_back(qa);
    }
    if (!kept.qas.empty()) out.push_back(std::move(kept));
  }
  return out;
}

// Downsamples the train split; the dev split always passes through intact.
inline ExtractiveBenchmark downsample(const ExtractiveBenchmark& b,
                                      std::size_t n, std::uint64_t seed) {
  ExtractiveBenchmark out;
  out.name = b.name;
  out.train = downsample_split(b.train, n, seed);
  out.dev = b.dev;
  return out;
}

}  // namespace qaconcur
