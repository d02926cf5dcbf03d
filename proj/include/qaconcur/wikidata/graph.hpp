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
#include <string>
#include <tuple>
#include <unordered_map>
#include <vector>

#include <nlohmann/json.hpp>

#include "qaconcur/io.hpp"

namespace qaconcur::wikidata {

// An entity with its surface forms. Hypernyms are the more general entities
// reachable via instance-of / subclass-of, recorded by the dump slicer.
struct WdEntity {
  std::string id;
  std::string label;
  std::vector<std::string> aliases;
  std::vector<std::size_t> hypernyms;  // entity indices
};

struct WdProperty {
  std::string id;
  std::string label;
  std::vector<std::string> aliases;
  // Index of the inverse property, or npos. Kept symmetric: one-sided
  // declarations are completed, conflicting ones dropped with a warning.
  std::size_t inverse = npos;

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
};

// (subject, predicate, object); the object is either another entity or a
// literal string (number, date, ...).
struct Triple {
  std::size_t subject = 0;    // entity index
  std::size_t predicate = 0;  // property index
  bool object_is_entity = false;
  std::size_t object_entity = 0;  // entity index, when object_is_entity
  std::string literal;            // literal value, otherwise
};

struct GraphLoadReport {
  std::size_t n_entities = 0;
  std::size_t n_properties = 0;
  std::size_t n_triples = 0;
  std::size_t n_dropped_triples = 0;    // unresolved references
  std::size_t n_duplicate_triples = 0;  // exact duplicates removed
  std::vector<std::string> warnings;
};

struct KnowledgeGraph {
  std::vector<WdEntity> entities;
  std::vector<WdProperty> properties;
  std::vector<Triple> triples;  // deduplicated, file order
  std::unordered_map<std::string, std::size_t> entity_index;
  std::unordered_map<std::string, std::size_t> property_index;
  // Entity index -> indices of incident triples (as subject or as
  // entity-valued object), each triple listed once.
  std::vector<std::vector<std::size_t>> incident;
  GraphLoadReport report;
};

namespace detail {

inline std::vector<nlohmann::json> parse_jsonl(const std::string& path) {
  std::vector<nlohmann::json> records;
  const auto lines = split_lines(read_file(path));
  for (std::size_t ln = 0; ln < lines.size(); ++ln) {
    if (lines[ln].empty()) continue;
    try {
      records.push_back(nlohmann::json::parse(lines[ln]));
    } catch (const nlohmann::json::parse_error& e) {
      throw std::runtime_error(path + ":" + std::to_string(ln + 1) + ": " +
                               e.what());
    }
  }
  return records;
}

inline std::vector<std::string> string_array(const nlohmann::json& rec,
                                             const char* key) {
  std::vector<std::string> out;
  if (rec.contains(key)) {
    for (const auto& v : rec.at(key)) out.push_back(v.get<std::string>());
  }
  return out;
}

}  // namespace detail

// Loads a pre-sliced graph. Entities JSONL: {id, label, aliases, instance_of,
// subclass_of}; properties JSONL: {id, label, aliases, inverse}; triples
// JSONL: {s, p, o} with o = {"entity": id} or {"literal": string}. Records
// referencing unknown ids are dropped with a warning, duplicate triples are
// deduplicated, and one-sided inverse declarations are made symmetric.
inline KnowledgeGraph load_graph(const std::string& entities_path,
                                 const std::string& properties_path,
                                 const std::string& triples_path) {
  KnowledgeGraph g;
  auto warn = [&](const std::string& message) {
    g.report.warnings.push_back(message);
  };

  // Entities: two passes, so hypernym references can point anywhere in the
  // file.
  const auto entity_records = detail::parse_jsonl(entities_path);
  std::vector<const nlohmann::json*> accepted;  // record behind each entity
  for (const auto& rec : entity_records) {
    try {
      WdEntity e;
      e.id = rec.at("id").get<std::string>();
      e.label = rec.at("label").get<std::string>();
      e.aliases = detail::string_array(rec, "aliases");
      if (!g.entity_index.emplace(e.id, g.entities.size()).second) {
        warn(entities_path + ": duplicate entity id '" + e.id +
             "'; first kept");
        continue;
      }
      if (e.label.empty()) {
        warn(entities_path + ": entity '" + e.id + "' has an empty label");
      }
      g.entities.push_back(std::move(e));
      accepted.push_back(&rec);
    } catch (const nlohmann::json::exception& e) {
      throw std::runtime_error(entities_path + ": bad entity record: " +
                               e.what());
    }
  }
  for (std::size_t i = 0; i < g.entities.size(); ++i) {
    WdEntity& e = g.entities[i];
    for (const char* key : {"instance_of", "subclass_of"}) {
      for (const std::string& hid : detail::string_array(*accepted[i], key)) {
        const auto hit = g.entity_index.find(hid);
        if (hit == g.entity_index.end()) {
          warn(entities_path + ": entity '" + e.id +
               "' references unknown hypernym '" + hid + "'; dropped");
          continue;
        }
        e.hypernyms.push_back(hit->second);
      }
    }
  }

  // Properties, then inverse resolution.
  std::vector<std::string> inverse_ids;
  for (const auto& rec : detail::parse_jsonl(properties_path)) {
    try {
      WdProperty p;
      p.id = rec.at("id").get<std::string>();
      p.label = rec.at("label").get<std::string>();
      p.aliases = detail::string_array(rec, "aliases");
      if (!g.property_index.emplace(p.id, g.properties.size()).second) {
        warn(properties_path + ": duplicate property id '" + p.id +
             "'; first kept");
        continue;
      }
      inverse_ids.push_back(rec.contains("inverse") && !rec.at("inverse").is_null()
                                ? rec.at("inverse").get<std::string>()
                                : std::string());
      g.properties.push_back(std::move(p));
    } catch (const nlohmann::json::exception& e) {
      throw std::runtime_error(properties_path + ": bad property record: " +
                               e.what());
    }
  }
  for (std::size_t i = 0; i < g.properties.size(); ++i) {
    const std::string& inv_id = inverse_ids[i];
    if (inv_id.empty()) continue;
    const auto it = g.property_index.find(inv_id);
    if (it == g.property_index.end()) {
      warn(properties_path + ": property '" + g.properties[i].id +
           "' declares unknown inverse '" + inv_id + "'; dropped");
      continue;
    }
    g.properties[i].inverse = it->second;
  }
  for (std::size_t i = 0; i < g.properties.size(); ++i) {
    const std::size_t j = g.properties[i].inverse;
    if (j == WdProperty::npos) continue;
    if (g.properties[j].inverse == WdProperty::npos) {
      g.properties[j].inverse = i;  // complete the one-sided declaration
    } else if (g.properties[j].inverse != i) {
      warn(properties_path + ": inverse declarations of '" +
           g.properties[i].id + "' and '" + g.properties[j].id +
           "' conflict; '" + g.properties[i].id + "' loses its inverse");
      g.properties[i].inverse = WdProperty::npos;
    }
  }

  // Triples: resolve, drop unresolved, deduplicate.
  std::set<std::tuple<std::size_t, std::size_t, bool, std::size_t, std::string>>
      seen;
  const auto triple_records = detail::parse_jsonl(triples_path);
  for (std::size_t k = 0; k < triple_records.size(); ++k) {
    const auto& rec = triple_records[k];
    const std::string where =
        triples_path + " record " + std::to_string(k + 1);
    try {
      Triple t;
      const std::string s = rec.at("s").get<std::string>();
      const std::string p = rec.at("p").get<std::string>();
      const auto s_it = g.entity_index.find(s);
      if (s_it == g.entity_index.end()) {
        warn(where + ": unknown subject '" + s + "'; triple dropped");
        ++g.report.n_dropped_triples;
        continue;
      }
      const auto p_it = g.property_index.find(p);
      if (p_it == g.property_index.end()) {
        warn(where + ": unknown property '" + p + "'; triple dropped");
        ++g.report.n_dropped_triples;
        continue;
      }
      t.subject = s_it->second;
      t.predicate = p_it->second;
      const auto& o = rec.at("o");
      if (o.contains("entity")) {
        const std::string oid = o.at("entity").get<std::string>();
        const auto o_it = g.entity_index.find(oid);
        if (o_it == g.entity_index.end()) {
          warn(where + ": unknown object entity '" + oid +
               "'; triple dropped");
          ++g.report.n_dropped_triples;
          continue;
        }
        t.object_is_entity = true;
        t.object_entity = o_it->second;
      } else if (o.contains("literal")) {
        t.object_is_entity = false;
        t.literal = o.at("literal").get<std::string>();
      } else {
        throw std::runtime_error(where +
                                 ": object must carry 'entity' or 'literal'");
      }
      if (!seen
               .emplace(t.subject, t.predicate, t.object_is_entity,
                        t.object_is_entity ? t.object_entity : 0, t.literal)
               .second) {
        ++g.report.n_duplicate_triples;
        continue;
      }
      g.triples.push_back(std::move(t));
    } catch (const nlohmann::json::exception& e) {
      throw std::runtime_error(where + ": bad triple record: " + e.what());
    }
  }

  g.incident.assign(g.entities.size(), {});
  for (std::size_t t = 0; t < g.triples.size(); ++t) {
    const Triple& tr = g.triples[t];
    g.incident[tr.subject].push_back(t);
    if (tr.object_is_entity && tr.object_entity != tr.subject) {
      g.incident[tr.object_entity].push_back(t);
    }
  }

  g.report.n_entities = g.entities.size();
  g.report.n_properties = g.properties.size();
  g.report.n_triples = g.triples.size();
  return g;
}

}  // namespace qaconcur::wikidata
