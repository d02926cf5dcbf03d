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

#include "qaconcur/correlation.hpp"

#include <cmath>
#include <optional>
#include <random>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

using qaconcur::kendall_tau_b;
using qaconcur::pearson;

namespace {

// Straightforward pair-counting oracle for tau-b. Counting every pair once
// keeps the counts integral, so the assembled value is reproducible exactly.
std::optional<double> tau_b_oracle(const std::vector<double>& x,
                                   const std::vector<double>& y) {
  const std::size_t n = x.size();
  long long concordant = 0, discordant = 0, tied_x = 0, tied_y = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const bool tx = x[i] == x[j];
      const bool ty = y[i] == y[j];
      if (tx) ++tied_x;
      if (ty) ++tied_y;
      if (tx || ty) continue;
      const bool same_direction = (x[i] < x[j]) == (y[i] < y[j]);
      (same_direction ? concordant : discordant) += 1;
    }
  }
  const long long n0 = static_cast<long long>(n) * (n - 1) / 2;
  if (n0 == tied_x || n0 == tied_y) return std::nullopt;
  return static_cast<double>(
      static_cast<long double>(concordant - discordant) /
      std::sqrt(static_cast<long double>(n0 - tied_x) *
                static_cast<long double>(n0 - tied_y)));
}

std::optional<double> pearson_oracle(const std::vector<double>& x,
                                     const std::vector<double>& y) {
  const std::size_t n = x.size();
  long double mx = 0.0L, my = 0.0L;
  for (std::size_t i = 0; i < n; ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  long double sxy = 0.0L, sxx = 0.0L, syy = 0.0L;
  for (std::size_t i = 0; i < n; ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
    syy += (y[i] - my) * (y[i] - my);
  }
  if (sxx == 0.0L || syy == 0.0L) return std::nullopt;
  return static_cast<double>(sxy / std::sqrt(sxx * syy));
}

}  // namespace

TEST_CASE("pearson on a short hand-checked vector") {
  const std::vector<double> x{1, 2, 2, 4};
  const std::vector<double> y{1, 3, 2, 5};
  // By hand: cov* = 6.25, var_x* = 4.75, var_y* = 8.75,
  // r = 6.25 / sqrt(4.75 * 8.75).
  const auto r = pearson(x, y);
  REQUIRE(r.has_value());
  REQUIRE_THAT(*r, Catch::Matchers::WithinAbs(0.9694584179118518, 1e-12));
}

TEST_CASE("tau-b on the tied textbook vector is 0.8") {
  // C = 4, D = 0, one tied pair per side, n0 = 6: 4 / sqrt(5 * 5).
  const std::vector<double> x{1, 2, 2, 3};
  const std::vector<double> y{1, 2, 3, 3};
  const auto tau = kendall_tau_b(x, y);
  REQUIRE(tau.has_value());
  REQUIRE_THAT(*tau, Catch::Matchers::WithinAbs(0.8, 1e-15));
}

TEST_CASE("perfect agreement and reversal") {
  const std::vector<double> up{1, 2, 3, 4, 5};
  const std::vector<double> down{5, 4, 3, 2, 1};
  REQUIRE(*kendall_tau_b(up, up) == 1.0);
  REQUIRE(*kendall_tau_b(up, down) == -1.0);
  REQUIRE_THAT(*pearson(up, down), Catch::Matchers::WithinAbs(-1.0, 1e-15));
}

TEST_CASE("degenerate inputs are undefined, not zero") {
  const std::vector<double> constant{3, 3, 3, 3};
  const std::vector<double> varied{1, 2, 3, 4};
  REQUIRE_FALSE(pearson(constant, varied).has_value());
  REQUIRE_FALSE(pearson(varied, constant).has_value());
  REQUIRE_FALSE(kendall_tau_b(constant, varied).has_value());
  REQUIRE_FALSE(kendall_tau_b(varied, constant).has_value());
}

TEST_CASE("length mismatch and tiny inputs throw") {
  const std::vector<double> empty;
  const std::vector<double> one{1};
  const std::vector<double> two{1, 2};
  const std::vector<double> three{1, 2, 3};
  REQUIRE_THROWS_AS(pearson(two, three), std::invalid_argument);
  REQUIRE_THROWS_AS(kendall_tau_b(two, one), std::invalid_argument);
  REQUIRE_THROWS_AS(pearson(one, one), std::invalid_argument);
  REQUIRE_THROWS_AS(kendall_tau_b(empty, empty), std::invalid_argument);
}

TEST_CASE("results never leave [-1, 1]") {
  std::mt19937_64 gen(2024);
  std::uniform_real_distribution<double> value(0.0, 100.0);
  std::uniform_int_distribution<int> len(2, 40);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = len(gen);
    std::vector<double> x(n), y(n);
    for (int i = 0; i < n; ++i) {
      x[i] = value(gen);
      y[i] = value(gen);
    }
    if (const auto r = pearson(x, y)) {
      REQUIRE(std::fabs(*r) <= 1.0);
    }
    if (const auto t = kendall_tau_b(x, y)) {
      REQUIRE(std::fabs(*t) <= 1.0);
    }
  }
}

TEST_CASE("agrees with the pair-counting and two-pass oracles") {
  std::mt19937_64 gen(99);
  std::uniform_int_distribution<int> len(2, 50);
  std::uniform_int_distribution<int> tie_heavy(0, 1);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = len(gen);
    // Alternate continuous values with small-integer grids to inject ties.
    std::vector<double> x(n), y(n);
    if (tie_heavy(gen) == 1) {
      std::uniform_int_distribution<int> grid(0, 4);
      for (int i = 0; i < n; ++i) {
        x[i] = grid(gen);
        y[i] = grid(gen);
      }
    } else {
      std::uniform_real_distribution<double> value(-10.0, 10.0);
      for (int i = 0; i < n; ++i) {
        x[i] = value(gen);
        y[i] = value(gen);
      }
    }
    const auto tau = kendall_tau_b(x, y);
    const auto tau_expected = tau_b_oracle(x, y);
    REQUIRE(tau.has_value() == tau_expected.has_value());
    if (tau) REQUIRE(*tau == *tau_expected);

    const auto r = pearson(x, y);
    const auto r_expected = pearson_oracle(x, y);
    REQUIRE(r.has_value() == r_expected.has_value());
    if (r) {
      REQUIRE_THAT(*r, Catch::Matchers::WithinAbs(*r_expected, 1e-12));
    }
  }
}
