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
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>

namespace qaconcur {

// Correlations return nullopt when mathematically undefined (zero variance /
// fully tied input). Undefined is a distinguished state, never silently 0.

namespace detail {

inline void check_lengths(std::span<const double> x,
                          std::span<const double> y) {
  if (x.size() != y.size()) {
    throw std::invalid_argument("correlation: length mismatch");
  }
  if (x.size() < 2) {
    throw std::invalid_argument("correlation: need at least 2 points");
  }
}

inline double clamp_unit(double v) noexcept {
  return std::min(1.0, std::max(-1.0, v));
}

}  // namespace detail

// Sample Pearson correlation, two-pass (mean first, then centered sums) with
// extended-precision accumulation.
inline std::optional<double> pearson(std::span<const double> x,
                                     std::span<const double> y) {
  detail::check_lengths(x, y);
  const std::size_t n = x.size();
  long double mx = 0.0L, my = 0.0L;
  for (std::size_t i = 0; i < n; ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= static_cast<long double>(n);
  my /= static_cast<long double>(n);
  long double sxy = 0.0L, sxx = 0.0L, syy = 0.0L;
  for (std::size_t i = 0; i < n; ++i) {
    const long double dx = x[i] - mx;
    const long double dy = y[i] - my;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  if (sxx == 0.0L || syy == 0.0L) return std::nullopt;
  return detail::clamp_unit(
      static_cast<double>(sxy / std::sqrt(sxx * syy)));
}

// Kendall rank correlation, tie-corrected variant:
//
//   tau_b = (C - D) / sqrt((n0 - t_x) (n0 - t_y)),  n0 = n(n-1)/2,
//
// where C/D count concordant/discordant pairs, t_x counts pairs tied in x
// and t_y pairs tied in y (pairs tied in both count toward each). Computed
// by direct O(n^2) pair enumeration: input vectors are per-approach score
// columns of at most a few hundred entries, so auditability wins over the
// O(n log n) algorithm. Tie detection uses exact floating-point equality,
// which is the intended semantics for tabulated EM percentages.
inline std::optional<double> kendall_tau_b(std::span<const double> x,
                                           std::span<const double> y) {
  detail::check_lengths(x, y);
  const std::size_t n = x.size();
  std::int64_t concordant = 0, discordant = 0, tied_x = 0, tied_y = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const bool eq_x = x[i] == x[j];
      const bool eq_y = y[i] == y[j];
      if (eq_x || eq_y) {
        if (eq_x) ++tied_x;
        if (eq_y) ++tied_y;
      } else if ((x[i] < x[j]) == (y[i] < y[j])) {
        ++concordant;
      } else {
        ++discordant;
      }
    }
  }
  const std::int64_t n0 =
      static_cast<std::int64_t>(n) * static_cast<std::int64_t>(n - 1) / 2;
  if (n0 == tied_x || n0 == tied_y) return std::nullopt;
  const long double denom =
      std::sqrt(static_cast<long double>(n0 - tied_x) *
                static_cast<long double>(n0 - tied_y));
  return detail::clamp_unit(
      static_cast<double>(static_cast<long double>(concordant - discordant) /
                          denom));
}

}  // namespace qaconcur
