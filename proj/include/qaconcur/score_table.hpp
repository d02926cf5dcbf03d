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
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "qaconcur/csv.hpp"
#include "qaconcur/io.hpp"

namespace qaconcur {

// One scored run of a modeling approach. run_id labels the hyperparameter
// setting; (approach_id, run_id) is unique within a table.
struct ApproachRecord {
  std::string approach_id;
  bool pretrained = false;
  std::string run_id;

  bool operator==(const ApproachRecord&) const = default;
};

// EM percentages of approach runs (rows) on benchmarks (columns). Missing
// cells (runs never scored on a benchmark) are nullopt.
struct ScoreTable {
  std::vector<ApproachRecord> rows;
  std::vector<std::string> columns;                       // benchmark names
  std::vector<std::vector<std::optional<double>>> values;  // rows x columns

  std::optional<std::size_t> column_index(std::string_view benchmark) const {
    for (std::size_t i = 0; i < columns.size(); ++i) {
      if (columns[i] == benchmark) return i;
    }
    return std::nullopt;
  }
};

enum class AggregatePolicy { kBest, kMean };

inline std::string to_string(AggregatePolicy p) {
  return p == AggregatePolicy::kBest ? "best" : "mean";
}

namespace detail {

inline bool parse_bool_cell(const std::string& raw, const std::string& where) {
  std::string v;
  for (char c : raw) v.push_back(c >= 'A' && c <= 'Z' ? c + 32 : c);
  if (v == "true" || v == "1" || v == "yes") return true;
  if (v == "false" || v == "0" || v == "no") return false;
  throw std::runtime_error(where + ": invalid pretrained flag '" + raw + "'");
}

}  // namespace detail

// Score-table CSV: header `approach_id,pretrained,run_id,<benchmark>...`;
// cells are EM percentages or empty for missing.
inline ScoreTable load_score_csv(const std::string& path) {
  const auto rows = csv::parse(read_file(path));
  if (rows.empty()) throw std::runtime_error(path + ": empty score CSV");
  const auto& header = rows[0];
  if (header.size() < 4 || header[0] != "approach_id" ||
      header[1] != "pretrained" || header[2] != "run_id") {
    throw std::runtime_error(
        path + ": header must be approach_id,pretrained,run_id,<benchmark>...");
  }
  ScoreTable table;
  table.columns.assign(header.begin() + 3, header.end());
  std::set<std::string> seen_columns(table.columns.begin(),
                                     table.columns.end());
  if (seen_columns.size() != table.columns.size()) {
    throw std::runtime_error(path + ": duplicate benchmark column");
  }
  std::set<std::pair<std::string, std::string>> seen_runs;
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const auto& row = rows[r];
    if (row.size() == 1 && row[0].empty()) continue;  // stray blank line
    const std::string where = path + ":" + std::to_string(r + 1);
    if (row.size() != header.size()) {
      throw std::runtime_error(where + ": wrong field count");
    }
    ApproachRecord rec;
    rec.approach_id = row[0];
    rec.pretrained = detail::parse_bool_cell(row[1], where);
    rec.run_id = row[2];
    if (!seen_runs.insert({rec.approach_id, rec.run_id}).second) {
      throw std::runtime_error(where + ": duplicate (approach_id, run_id)");
    }
    std::vector<std::optional<double>> cells;
    for (std::size_t c = 3; c < row.size(); ++c) {
      if (row[c].empty()) {
        cells.push_back(std::nullopt);
        continue;
      }
      double v = 0.0;
      try {
        std::size_t pos = 0;
        v = std::stod(row[c], &pos);
        if (pos != row[c].size()) throw std::invalid_argument(row[c]);
      } catch (const std::exception&) {
        throw std::runtime_error(where + ": invalid EM value '" + row[c] +
                                 "'");
      }
      if (v < 0.0 || v > 100.0) {
        throw std::runtime_error(where + ": EM value out of [0,100]: '" +
                                 row[c] + "'");
      }
      cells.push_back(v);
    }
    table.rows.push_back(std::move(rec));
    table.values.push_back(std::move(cells));
  }
  return table;
}

// Collapses multiple hyperparameter runs into one row per approach: max
// (best) or mean of the present values per benchmark; a cell stays missing
// only if it is missing in every run.
inline ScoreTable aggregate_runs(const ScoreTable& table,
                                 AggregatePolicy policy) {
  ScoreTable out;
  out.columns = table.columns;
  std::map<std::string, std::size_t> row_of;  // approach_id -> out row
  std::vector<std::vector<std::size_t>> counts;
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    const ApproachRecord& rec = table.rows[r];
    auto [it, inserted] = row_of.try_emplace(rec.approach_id, out.rows.size());
    if (inserted) {
      out.rows.push_back(
          {rec.approach_id, rec.pretrained, to_string(policy)});
      out.values.emplace_back(table.columns.size(), std::nullopt);
      counts.emplace_back(table.columns.size(), 0);
    } else if (out.rows[it->second].pretrained != rec.pretrained) {
      throw std::runtime_error("aggregate_runs: approach '" +
                               rec.approach_id +
                               "' has inconsistent pretrained flags");
    }
    const std::size_t o = it->second;
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
      const std::optional<double>& cell = table.values[r][c];
      if (!cell) continue;
      std::optional<double>& acc = out.values[o][c];
      ++counts[o][c];
      if (!acc) {
        acc = *cell;
      } else if (policy == AggregatePolicy::kBest) {
        acc = std::max(*acc, *cell);
      } else {
        acc = *acc + *cell;  // summed here, divided below
      }
    }
  }
  if (policy == AggregatePolicy::kMean) {
    for (std::size_t o = 0; o < out.values.size(); ++o) {
      for (std::size_t c = 0; c < out.values[o].size(); ++c) {
        if (out.values[o][c]) {
          out.values[o][c] =
              *out.values[o][c] / static_cast<double>(counts[o][c]);
        }
      }
    }
  }
  return out;
}

}  // namespace qaconcur
