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
#include <cstddef>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qaconcur/concurrence.hpp"  // format_double
#include "qaconcur/wikidata/graph.hpp"

namespace qaconcur::wikidata {

struct PageRankOptions {
  double damping = 0.85;
  double tol = 1e-9;        // L1 change between iterations
  std::size_t max_iter = 200;
};

// Power-iteration PageRank over the directed entity graph. Every
// entity-valued triple contributes one subject -> object edge; parallel
// edges collapse, self-loops stay. Teleport is uniform and the mass of
// dangling nodes is redistributed uniformly, so the scores always sum to 1.
// The iteration stops once the L1 change drops to `tol`; failure to converge
// within `max_iter` iterations raises an error reporting the residual.
inline std::vector<double> pagerank_scores(const KnowledgeGraph& graph,
                                           const PageRankOptions& options = {}) {
  const std::size_t n = graph.entities.size();
  if (n == 0) throw std::invalid_argument("pagerank: graph has no entities");
  if (!(options.damping >= 0.0 && options.damping <= 1.0)) {
    throw std::invalid_argument("pagerank: damping must lie in [0, 1]");
  }

  std::set<std::pair<std::size_t, std::size_t>> edge_set;
  for (const Triple& t : graph.triples) {
    if (t.object_is_entity) edge_set.emplace(t.subject, t.object_entity);
  }
  std::vector<std::vector<std::size_t>> out(n);
  for (const auto& [u, v] : edge_set) out[u].push_back(v);

  const double d = options.damping;
  std::vector<double> scores(n, 1.0 / static_cast<double>(n));
  std::vector<double> next(n);
  for (std::size_t iter = 0; iter < options.max_iter; ++iter) {
    double dangling = 0.0;
    for (std::size_t u = 0; u < n; ++u) {
      if (out[u].empty()) dangling += scores[u];
    }
    const double base =
        ((1.0 - d) + d * dangling) / static_cast<double>(n);
    std::fill(next.begin(), next.end(), base);
    for (std::size_t u = 0; u < n; ++u) {
      if (out[u].empty()) continue;
      const double share =
          d * scores[u] / static_cast<double>(out[u].size());
      for (const std::size_t v : out[u]) next[v] += share;
    }
    double residual = 0.0;
    for (std::size_t v = 0; v < n; ++v) residual += std::fabs(next[v] - scores[v]);
    scores.swap(next);
    if (residual <= options.tol) return scores;
  }

  double residual = 0.0;
  for (std::size_t v = 0; v < n; ++v) residual += std::fabs(scores[v] - next[v]);
  throw std::runtime_error(
      "pagerank: no convergence after " + std::to_string(options.max_iter) +
      " iterations (L1 residual " + format_double(residual) + ")");
}

// Same scores keyed by entity id, for reporting.
inline std::map<std::string, double> pagerank(const KnowledgeGraph& graph,
                                              const PageRankOptions& options = {}) {
  const std::vector<double> scores = pagerank_scores(graph, options);
  std::map<std::string, double> by_id;
  for (std::size_t i = 0; i < graph.entities.size(); ++i) {
    by_id[graph.entities[i].id] = scores[i];
  }
  return by_id;
}

}  // namespace qaconcur::wikidata
