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

#include <cstdint>
#include <limits>
#include <random>
#include <stdexcept>
#include <string_view>
#include <utility>
#include <vector>

namespace qaconcur {

// SplitMix64 finalizer (Steele, Lea & Flood 2014). Used to mix structural
// tags into derived stream seeds.
constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

constexpr std::uint64_t fnv1a64(std::string_view s) noexcept {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

// Derives an independent stream seed from a base seed, a structural tag
// (e.g. a split name) and an index (e.g. a passage number). Generators use
// one derived stream per passage so that output is independent of how work
// is scheduled across threads.
constexpr std::uint64_t derive_seed(std::uint64_t base, std::string_view tag,
                                    std::uint64_t index = 0) noexcept {
  return splitmix64(splitmix64(base ^ fnv1a64(tag)) ^ index);
}

// Deterministic random stream. std::mt19937_64's output sequence is fully
// specified by the standard, but the standard *distributions* are not; every
// draw helper here is hand-rolled on top of the raw engine output so that
// identical seeds give identical results on every platform and compiler.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform integer in [0, bound), bias-free via rejection sampling.
  std::uint64_t next_below(std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("Rng::next_below: bound == 0");
    // Reject draws landing in the final partial copy of [0, bound).
    const std::uint64_t residue = (0ULL - bound) % bound;  // 2^64 mod bound
    for (;;) {
      const std::uint64_t r = engine_();
      if (residue == 0 ||
          r <= std::numeric_limits<std::uint64_t>::max() - residue) {
        return r % bound;
      }
    }
  }

  std::size_t next_index(std::size_t n) {
    return static_cast<std::size_t>(next_below(n));
  }

  // Uniform double in [0, 1) with 53-bit resolution.
  double next_unit() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  // Fisher-Yates, ascending form: stopping after k swaps leaves the first k
  // elements equal to the first k of the full permutation, which is what
  // gives downsampling its nested-prefix property.
  template <typename T>
  void shuffle(std::vector<T>& v) {
    if (v.size() < 2) return;
    for (std::size_t i = 0; i + 1 < v.size(); ++i) {
      const std::size_t j = i + next_index(v.size() - i);
      using std::swap;
      swap(v[i], v[j]);
    }
  }

  // First k elements of the seeded permutation of {0, ..., n-1}.
  std::vector<std::size_t> permutation_prefix(std::size_t n, std::size_t k) {
    if (k > n) {
      throw std::invalid_argument("Rng::permutation_prefix: k > n");
    }
    std::vector<std::size_t> idx(n);
    for (std::size_t i = 0; i < n; ++i) idx[i] = i;
    for (std::size_t i = 0; i < k && i + 1 < n; ++i) {
      const std::size_t j = i + next_index(n - i);
      std::swap(idx[i], idx[j]);
    }
    idx.resize(k);
    return idx;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace qaconcur
