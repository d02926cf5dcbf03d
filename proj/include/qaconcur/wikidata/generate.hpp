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
#include <array>
#include <cstddef>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qaconcur/dataset.hpp"
#include "qaconcur/rng.hpp"
#include "qaconcur/wikidata/graph.hpp"
#include "qaconcur/wikidata/pagerank.hpp"

namespace qaconcur::wikidata {

// Synthetic cloze-style QA over a knowledge graph. Passages are linearized
// bags of triples around a high-PageRank seed entity; questions mask one
// element of one triple and re-realize the rest, optionally swapping the
// triple for its inverse or lifting entities to a hypernym.
struct WikidataGenConfig {
  std::string name = "WikidataSyntheticQA";
  std::uint64_t seed = 0;
  std::size_t n_train = 10000;  // question quota, train split
  std::size_t n_dev = 10000;    // question quota, dev split
  std::size_t pool = 10000;     // seed entities drawn from the top `pool`
  std::size_t n_triples = 50;   // triples sampled per passage (at most)
  std::size_t train_questions_min = 1;  // per-passage question count, train
  std::size_t train_questions_max = 5;
  std::size_t dev_questions = 5;  // fixed per-passage count, dev
  double inverse_prob = 0.5;
  double hypernym_prob = 0.5;
  std::string mask_token = "XXXXX";
  PageRankOptions pagerank;

  void check() const {
    if (mask_token.empty()) {
      throw std::invalid_argument("wikidata config: mask_token is empty");
    }
    if (pool == 0) throw std::invalid_argument("wikidata config: pool is 0");
    if (n_triples == 0) {
      throw std::invalid_argument("wikidata config: n_triples is 0");
    }
    if (train_questions_min == 0 ||
        train_questions_min > train_questions_max) {
      throw std::invalid_argument(
          "wikidata config: need 1 <= train_questions_min <= "
          "train_questions_max");
    }
    if (dev_questions == 0) {
      throw std::invalid_argument("wikidata config: dev_questions is 0");
    }
    for (const double p : {inverse_prob, hypernym_prob}) {
      if (!(p >= 0.0 && p <= 1.0)) {
        throw std::invalid_argument(
            "wikidata config: transform probabilities must lie in [0, 1]");
      }
    }
  }
};

// A triple as it appears in a passage: the chosen surface form and byte
// offset of each element (subject, predicate, object).
struct RealizedTriple {
  std::size_t triple_index = 0;  // into KnowledgeGraph::triples
  std::array<std::string, 3> surface;
  std::array<std::size_t, 3> offset = {0, 0, 0};
};

struct BuiltPassage {
  std::string context;
  std::vector<RealizedTriple> realized;
  std::vector<std::string> warnings;  // triples skipped as unrealizable
};

struct Selection {
  std::size_t seed_entity = 0;
  std::vector<std::size_t> triples;  // in the order sampled
  bool small_candidate_set = false;  // fewer candidates than requested
};

struct GeneratedQuestion {
  std::string question;
  AnswerSpan answer;  // the masked element as realized in the passage
  bool inverse_applied = false;
  std::array<bool, 3> hypernym_applied = {false, false, false};
};

struct GenerationReport {
  std::size_t n_passages = 0;        // passages emitted
  std::size_t n_questions = 0;       // questions emitted
  std::size_t n_empty_passages = 0;  // attempts with no realizable triple
  std::size_t n_small_candidate_passages = 0;
  std::size_t n_duplicates_dropped = 0;
  std::size_t n_skipped_triples = 0;  // unrealizable at passage build time
};

namespace detail {

inline std::vector<std::string> entity_surfaces(const WdEntity& e) {
  std::vector<std::string> out;
  if (!e.label.empty()) out.push_back(e.label);
  for (const std::string& a : e.aliases) {
    if (!a.empty()) out.push_back(a);
  }
  return out;
}

inline std::vector<std::string> property_surfaces(const WdProperty& p) {
  std::vector<std::string> out;
  if (!p.label.empty()) out.push_back(p.label);
  for (const std::string& a : p.aliases) {
    if (!a.empty()) out.push_back(a);
  }
  return out;
}

}  // namespace detail

// Picks a seed entity uniformly from the `pool` highest-PageRank entities
// (ties broken by entity id) and samples up to `n_triples` triples without
// replacement from the triples incident to the seed or to any of its
// one-hop neighbours. Small candidate sets are allowed and flagged.
inline Selection select_seed_and_triples(const KnowledgeGraph& graph,
                                         const std::vector<double>& scores,
                                         std::size_t pool,
                                         std::size_t n_triples, Rng& rng) {
  if (graph.entities.empty()) {
    throw std::invalid_argument("select_seed_and_triples: empty graph");
  }
  if (scores.size() != graph.entities.size()) {
    throw std::invalid_argument(
        "select_seed_and_triples: scores do not match the entity list");
  }
  std::vector<std::size_t> order(graph.entities.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (scores[a] != scores[b]) return scores[a] > scores[b];
    return graph.entities[a].id < graph.entities[b].id;
  });

  Selection sel;
  const std::size_t pool_n = std::min(pool, order.size());
  sel.seed_entity = order[rng.next_index(pool_n)];

  std::set<std::size_t> nodes = {sel.seed_entity};
  for (const std::size_t t : graph.incident[sel.seed_entity]) {
    nodes.insert(graph.triples[t].subject);
    if (graph.triples[t].object_is_entity) {
      nodes.insert(graph.triples[t].object_entity);
    }
  }
  std::set<std::size_t> candidate_set;
  for (const std::size_t node : nodes) {
    for (const std::size_t t : graph.incident[node]) candidate_set.insert(t);
  }
  const std::vector<std::size_t> candidates(candidate_set.begin(),
                                            candidate_set.end());

  sel.small_candidate_set = candidates.size() < n_triples;
  const std::size_t k = std::min(n_triples, candidates.size());
  for (const std::size_t pick : rng.permutation_prefix(candidates.size(), k)) {
    sel.triples.push_back(candidates[pick]);
  }
  return sel;
}

// Realizes the triples in order, choosing one surface form per element
// uniformly at random (labels and aliases are equally likely; literals are
// used verbatim). Elements are joined with single spaces and consecutive
// triples are separated by " . ". A triple with an unrealizable element
// (empty label, no aliases) is skipped with a warning before any drawing.
inline BuiltPassage build_passage(const KnowledgeGraph& graph,
                                  const std::vector<std::size_t>& triples,
                                  Rng& rng) {
  BuiltPassage out;
  for (const std::size_t t : triples) {
    const Triple& triple = graph.triples[t];
    const auto subject_forms =
        detail::entity_surfaces(graph.entities[triple.subject]);
    const auto predicate_forms =
        detail::property_surfaces(graph.properties[triple.predicate]);
    std::vector<std::string> object_forms;
    if (triple.object_is_entity) {
      object_forms = detail::entity_surfaces(graph.entities[triple.object_entity]);
    } else if (!triple.literal.empty()) {
      object_forms.push_back(triple.literal);
    }
    if (subject_forms.empty() || predicate_forms.empty() ||
        object_forms.empty()) {
      out.warnings.push_back("triple " + std::to_string(t) +
                             " has an element with no surface form; skipped");
      continue;
    }

    RealizedTriple r;
    r.triple_index = t;
    r.surface[0] = subject_forms[rng.next_index(subject_forms.size())];
    r.surface[1] = predicate_forms[rng.next_index(predicate_forms.size())];
    // Literals have a single form but still cost one draw, so that surface
    // choices elsewhere in the passage do not depend on object kinds.
    r.surface[2] = object_forms[rng.next_index(object_forms.size())];
    out.realized.push_back(std::move(r));
  }

  for (std::size_t i = 0; i < out.realized.size(); ++i) {
    if (i > 0) out.context += " . ";
    RealizedTriple& r = out.realized[i];
    for (std::size_t slot = 0; slot < 3; ++slot) {
      if (slot > 0) out.context += ' ';
      r.offset[slot] = out.context.size();
      out.context += r.surface[slot];
    }
  }
  return out;
}

// Turns one (realized triple, element) pair into a cloze question. The
// masked slot becomes `mask_token`; the other elements are re-realized with
// fresh surface draws, so the question need not repeat the passage wording.
// Two transforms fire independently when applicable:
//   - inverse (one uniform draw when the predicate has a realizable inverse
//     and the mask is on the subject or object): swap subject and object and
//     substitute the inverse property, moving the mask to the other end;
//   - hypernym (one uniform draw per unmasked entity slot, subject first):
//     replace the entity with one of its hypernyms, picked uniformly among
//     those with a surface form.
// The answer is always the masked element as it appears in the passage.
inline GeneratedQuestion gen_question(const KnowledgeGraph& graph,
                                      const RealizedTriple& realized,
                                      std::size_t element_slot,
                                      const WikidataGenConfig& config,
                                      Rng& rng) {
  if (element_slot > 2) {
    throw std::invalid_argument("gen_question: element_slot must be 0, 1 or 2");
  }
  const Triple& triple = graph.triples[realized.triple_index];

  struct Slot {
    enum Kind { kEntity, kProperty, kLiteral } kind = kLiteral;
    std::size_t index = 0;
    std::string literal;
  };
  std::array<Slot, 3> slots;
  slots[0] = {Slot::kEntity, triple.subject, {}};
  slots[1] = {Slot::kProperty, triple.predicate, {}};
  slots[2] = triple.object_is_entity
                 ? Slot{Slot::kEntity, triple.object_entity, {}}
                 : Slot{Slot::kLiteral, 0, triple.literal};

  GeneratedQuestion out;
  out.answer = AnswerSpan{realized.surface[element_slot],
                          realized.offset[element_slot]};
  std::size_t masked_slot = element_slot;

  if (masked_slot != 1) {
    const std::size_t inv = graph.properties[triple.predicate].inverse;
    if (inv != WdProperty::npos &&
        !detail::property_surfaces(graph.properties[inv]).empty() &&
        rng.next_unit() < config.inverse_prob) {
      std::swap(slots[0], slots[2]);
      slots[1].index = inv;
      masked_slot = 2 - masked_slot;
      out.inverse_applied = true;
    }
  }

  for (const std::size_t slot : {std::size_t{0}, std::size_t{2}}) {
    if (slot == masked_slot || slots[slot].kind != Slot::kEntity) continue;
    std::vector<std::size_t> candidates;
    for (const std::size_t h : graph.entities[slots[slot].index].hypernyms) {
      if (!detail::entity_surfaces(graph.entities[h]).empty()) {
        candidates.push_back(h);
      }
    }
    if (candidates.empty()) continue;
    if (rng.next_unit() < config.hypernym_prob) {
      slots[slot].index = candidates[rng.next_index(candidates.size())];
      out.hypernym_applied[slot] = true;
    }
  }

  for (std::size_t slot = 0; slot < 3; ++slot) {
    if (slot > 0) out.question += ' ';
    if (slot == masked_slot) {
      out.question += config.mask_token;
      continue;
    }
    switch (slots[slot].kind) {
      case Slot::kEntity: {
        const auto forms = detail::entity_surfaces(graph.entities[slots[slot].index]);
        out.question += forms[rng.next_index(forms.size())];
        break;
      }
      case Slot::kProperty: {
        const auto forms =
            detail::property_surfaces(graph.properties[slots[slot].index]);
        out.question += forms[rng.next_index(forms.size())];
        break;
      }
      case Slot::kLiteral:
        out.question += slots[slot].literal;
        break;
    }
  }
  return out;
}

namespace detail {

inline std::vector<Paragraph> generate_wikidata_split(
    const KnowledgeGraph& graph, const std::vector<double>& scores,
    const WikidataGenConfig& config, const std::string& split_tag,
    std::size_t quota, std::size_t q_min, std::size_t q_max,
    GenerationReport* report) {
  std::vector<Paragraph> split;
  if (quota == 0) return split;

  const std::uint64_t split_seed = derive_seed(config.seed, split_tag);
  const std::size_t max_attempts = 1000 + 20 * quota;
  std::size_t produced = 0;
  std::size_t emitted = 0;
  for (std::size_t attempt = 0; produced < quota; ++attempt) {
    if (attempt >= max_attempts) {
      throw std::runtime_error(
          "wikidata generation stalled: produced " + std::to_string(produced) +
          " of " + std::to_string(quota) + " questions after " +
          std::to_string(attempt) + " passages; the graph is too small or "
          "too repetitive for the requested quota");
    }
    Rng rng(derive_seed(split_seed, "passage", attempt));
    const Selection sel = select_seed_and_triples(graph, scores, config.pool,
                                                  config.n_triples, rng);
    if (report && sel.small_candidate_set) {
      ++report->n_small_candidate_passages;
    }
    const BuiltPassage built = build_passage(graph, sel.triples, rng);
    if (report) report->n_skipped_triples += built.warnings.size();
    if (built.realized.empty()) {
      if (report) ++report->n_empty_passages;
      continue;
    }

    // The per-passage question count is drawn before clamping to the quota,
    // so a passage's content depends only on its attempt index.
    std::size_t q_target =
        q_min == q_max ? q_min : q_min + rng.next_below(q_max - q_min + 1);
    q_target = std::min(q_target, quota - produced);

    const std::size_t n_pairs = built.realized.size() * 3;
    const std::vector<std::size_t> order =
        rng.permutation_prefix(n_pairs, n_pairs);

    Paragraph paragraph;
    paragraph.context = built.context;
    std::set<std::pair<std::string, std::string>> seen;
    for (const std::size_t pair_index : order) {
      if (paragraph.qas.size() == q_target) break;
      const std::size_t realized_index = pair_index / 3;
      const std::size_t slot = pair_index % 3;
      const GeneratedQuestion q = gen_question(
          graph, built.realized[realized_index], slot, config, rng);
      if (!seen.emplace(q.question, q.answer.text).second) {
        if (report) ++report->n_duplicates_dropped;
        continue;
      }
      QAExample example;
      example.id = "wikidata-" + split_tag + "-p" + std::to_string(emitted) +
                   "-q" + std::to_string(paragraph.qas.size());
      example.question = q.question;
      example.answers.push_back(q.answer);
      paragraph.qas.push_back(std::move(example));
    }
    if (paragraph.qas.empty()) continue;
    produced += paragraph.qas.size();
    ++emitted;
    split.push_back(std::move(paragraph));
  }
  if (report) {
    report->n_passages += emitted;
    report->n_questions += produced;
  }
  return split;
}

}  // namespace detail

// Generates the full benchmark: PageRank once, then passages per split until
// the question quotas are met. Train passages carry a uniform 1-5 questions,
// dev passages a fixed 5 (both configurable). Per-passage RNG streams are
// derived from (seed, split, attempt index), so generation is reproducible
// and splits are independent.
inline ExtractiveBenchmark generate_wikidata_qa(const KnowledgeGraph& graph,
                                                const WikidataGenConfig& config,
                                                GenerationReport* report = nullptr) {
  config.check();
  const std::vector<double> scores = pagerank_scores(graph, config.pagerank);

  ExtractiveBenchmark benchmark;
  benchmark.name = config.name;
  benchmark.train = detail::generate_wikidata_split(
      graph, scores, config, "train", config.n_train,
      config.train_questions_min, config.train_questions_max, report);
  benchmark.dev = detail::generate_wikidata_split(
      graph, scores, config, "dev", config.n_dev, config.dev_questions,
      config.dev_questions, report);
  return benchmark;
}

}  // namespace qaconcur::wikidata
