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

#include "qaconcur/rng.hpp"

#include <algorithm>
#include <set>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

using qaconcur::Rng;
using qaconcur::derive_seed;

TEST_CASE("same seed gives the same stream") {
  Rng a(42);
  Rng b(42);
  for (int i = 0; i < 100; ++i) {
    REQUIRE(a.next_u64() == b.next_u64());
  }
}

TEST_CASE("derived seeds separate by tag and index") {
  std::set<std::uint64_t> seen;
  for (const char* tag : {"train", "dev", "passage"}) {
    for (std::uint64_t i = 0; i < 50; ++i) {
      seen.insert(derive_seed(7, tag, i));
    }
  }
  REQUIRE(seen.size() == 150);
  REQUIRE(derive_seed(7, "train", 3) == derive_seed(7, "train", 3));
  REQUIRE(derive_seed(7, "train") == derive_seed(7, "train", 0));
}

TEST_CASE("next_below stays in range and hits every value") {
  Rng rng(1);
  std::set<std::uint64_t> seen;
  for (int i = 0; i < 2000; ++i) {
    const std::uint64_t v = rng.next_below(7);
    REQUIRE(v < 7);
    seen.insert(v);
  }
  REQUIRE(seen.size() == 7);
  REQUIRE_THROWS_AS(rng.next_below(0), std::invalid_argument);
}

TEST_CASE("next_unit lies in the half-open unit interval") {
  Rng rng(9);
  for (int i = 0; i < 5000; ++i) {
    const double u = rng.next_unit();
    REQUIRE(u >= 0.0);
    REQUIRE(u < 1.0);
  }
}

TEST_CASE("shuffle produces a permutation") {
  Rng rng(5);
  std::vector<int> v{0, 1, 2, 3, 4, 5, 6, 7, 8, 9};
  rng.shuffle(v);
  std::vector<int> sorted = v;
  std::sort(sorted.begin(), sorted.end());
  REQUIRE(sorted == std::vector<int>{0, 1, 2, 3, 4, 5, 6, 7, 8, 9});
}

TEST_CASE("permutation prefixes nest") {
  // The k-element prefix must equal the first k elements of any longer
  // prefix under the same seed: sampling 10 then 20 keeps the first 10.
  for (std::uint64_t seed : {0ULL, 1ULL, 99ULL}) {
    const std::vector<std::size_t> full =
        Rng(seed).permutation_prefix(50, 50);
    for (std::size_t k : {0, 1, 7, 25, 49}) {
      const std::vector<std::size_t> prefix =
          Rng(seed).permutation_prefix(50, k);
      REQUIRE(prefix ==
              std::vector<std::size_t>(full.begin(), full.begin() + k));
    }
  }
}

TEST_CASE("permutation prefix is a k-subset without repeats") {
  Rng rng(123);
  const auto picks = rng.permutation_prefix(30, 12);
  REQUIRE(picks.size() == 12);
  const std::set<std::size_t> unique(picks.begin(), picks.end());
  REQUIRE(unique.size() == 12);
  for (const std::size_t p : picks) REQUIRE(p < 30);
  REQUIRE_THROWS_AS(rng.permutation_prefix(3, 4), std::invalid_argument);
}
