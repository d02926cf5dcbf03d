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
#include <charconv>
#include <optional>
#include <string>
#include <vector>

#include "qaconcur/correlation.hpp"
#include "qaconcur/csv.hpp"
#include "qaconcur/io.hpp"
#include "qaconcur/score_table.hpp"

namespace qaconcur {

enum class Subset { kAll, kPretrained, kNonPretrained };

inline std::string to_string(Subset s) {
  switch (s) {
    case Subset::kPretrained: return "pretrained";
    case Subset::kNonPretrained: return "non-pretrained";
    default: return "all";
  }
}

struct ScatterPoint {
  std::string approach_id;
  bool pretrained = false;
  double em_a = 0.0;
  double em_b = 0.0;
};

// Concurrence of a benchmark pair: the correlation between the two EM score
// vectors over the approaches that have a value on both benchmarks.
struct ConcurrenceReport {
  std::string benchmark_a;
  std::string benchmark_b;
  std::optional<double> pearson_r;    // nullopt: undefined (zero variance)
  std::optional<double> kendall_tau;  // nullopt: undefined (all tied)
  std::size_t n = 0;                  // approaches surviving pairwise drops
  Subset subset = Subset::kAll;
  std::vector<ScatterPoint> points;
};

struct ConcurrenceMatrix {
  std::vector<std::string> benchmarks;
  // tau[i][j] / r[i][j]: nullopt marks an undefined cell (all-tied column or
  // fewer than 2 shared approaches), distinguishable from any real value.
  std::vector<std::vector<std::optional<double>>> tau;
  std::vector<std::vector<std::optional<double>>> r;
  std::vector<std::vector<std::size_t>> n;
};

// Shortest round-trip decimal rendering; keeps exports byte-deterministic.
inline std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

namespace detail {

inline bool subset_keeps(Subset subset, bool pretrained) {
  switch (subset) {
    case Subset::kPretrained: return pretrained;
    case Subset::kNonPretrained: return !pretrained;
    default: return true;
  }
}

inline ConcurrenceReport concur_on_columns(const ScoreTable& aggregated,
                                           std::size_t col_a,
                                           std::size_t col_b, Subset subset) {
  ConcurrenceReport report;
  report.benchmark_a = aggregated.columns[col_a];
  report.benchmark_b = aggregated.columns[col_b];
  report.subset = subset;
  for (std::size_t r = 0; r < aggregated.rows.size(); ++r) {
    const ApproachRecord& rec = aggregated.rows[r];
    if (!subset_keeps(subset, rec.pretrained)) continue;
    const auto& a = aggregated.values[r][col_a];
    const auto& b = aggregated.values[r][col_b];
    if (!a || !b) continue;  // pairwise drop, reflected in n
    report.points.push_back({rec.approach_id, rec.pretrained, *a, *b});
  }
  report.n = report.points.size();
  if (report.n >= 2) {
    std::vector<double> xs, ys;
    xs.reserve(report.n);
    ys.reserve(report.n);
    for (const ScatterPoint& p : report.points) {
      xs.push_back(p.em_a);
      ys.push_back(p.em_b);
    }
    report.pearson_r = pearson(xs, ys);
    report.kendall_tau = kendall_tau_b(xs, ys);
  }
  return report;
}

}  // namespace detail

// Concur(B1, B2): filters rows by subset, aggregates hyperparameter runs by
// policy, drops rows missing either benchmark, and correlates the rest.
inline ConcurrenceReport concur(const ScoreTable& table,
                                const std::string& benchmark_a,
                                const std::string& benchmark_b,
                                Subset subset = Subset::kAll,
                                AggregatePolicy policy = AggregatePolicy::kBest) {
  const auto col_a = table.column_index(benchmark_a);
  const auto col_b = table.column_index(benchmark_b);
  if (!col_a) {
    throw std::invalid_argument("concur: unknown benchmark '" + benchmark_a +
                                "'");
  }
  if (!col_b) {
    throw std::invalid_argument("concur: unknown benchmark '" + benchmark_b +
                                "'");
  }
  const ScoreTable aggregated = aggregate_runs(table, policy);
  ConcurrenceReport report =
      detail::concur_on_columns(aggregated, *col_a, *col_b, subset);
  if (report.n < 2) {
    throw std::invalid_argument(
        "concur: fewer than 2 approaches scored on both '" + benchmark_a +
        "' and '" + benchmark_b + "'");
  }
  return report;
}

// Full pairwise matrix over all columns. Cells that cannot be computed
// (fewer than 2 shared approaches, or an all-tied column) stay undefined
// rather than aborting the whole matrix.
inline ConcurrenceMatrix concurrence_matrix(
    const ScoreTable& table, Subset subset = Subset::kAll,
    AggregatePolicy policy = AggregatePolicy::kBest) {
  if (table.columns.size() < 2) {
    throw std::invalid_argument("concurrence_matrix: need >= 2 benchmarks");
  }
  const ScoreTable aggregated = aggregate_runs(table, policy);
  const std::size_t m = aggregated.columns.size();
  ConcurrenceMatrix matrix;
  matrix.benchmarks = aggregated.columns;
  matrix.tau.assign(m, std::vector<std::optional<double>>(m, std::nullopt));
  matrix.r.assign(m, std::vector<std::optional<double>>(m, std::nullopt));
  matrix.n.assign(m, std::vector<std::size_t>(m, 0));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i; j < m; ++j) {
      const ConcurrenceReport cell =
          detail::concur_on_columns(aggregated, i, j, subset);
      matrix.n[i][j] = matrix.n[j][i] = cell.n;
      if (cell.n >= 2) {
        matrix.tau[i][j] = matrix.tau[j][i] = cell.kendall_tau;
        matrix.r[i][j] = matrix.r[j][i] = cell.pearson_r;
      }
    }
  }
  return matrix;
}

// Scatter CSV backing external plots; rows sorted by approach_id so repeated
// exports are byte-identical.
inline std::string to_scatter_csv(const ConcurrenceReport& report) {
  std::vector<ScatterPoint> points = report.points;
  std::sort(points.begin(), points.end(),
            [](const ScatterPoint& a, const ScatterPoint& b) {
              return a.approach_id < b.approach_id;
            });
  std::string out = csv::format_row({"approach_id", "pretrained", "em_a", "em_b"});
  for (const ScatterPoint& p : points) {
    out += csv::format_row({p.approach_id, p.pretrained ? "true" : "false",
                            format_double(p.em_a), format_double(p.em_b)});
  }
  return out;
}

inline void export_scatter(const ConcurrenceReport& report,
                           const std::string& path) {
  write_file(path, to_scatter_csv(report));
}

// Heatmap CSV: first column benchmark names, cells tau (or r); undefined
// cells render as the distinguished marker "undefined".
inline std::string to_matrix_csv(
    const std::vector<std::string>& benchmarks,
    const std::vector<std::vector<std::optional<double>>>& cells) {
  std::vector<std::string> header{"benchmark"};
  header.insert(header.end(), benchmarks.begin(), benchmarks.end());
  std::string out = csv::format_row(header);
  for (std::size_t i = 0; i < benchmarks.size(); ++i) {
    std::vector<std::string> row{benchmarks[i]};
    for (std::size_t j = 0; j < benchmarks.size(); ++j) {
      row.push_back(cells[i][j] ? format_double(*cells[i][j]) : "undefined");
    }
    out += csv::format_row(row);
  }
  return out;
}

}  // namespace qaconcur
