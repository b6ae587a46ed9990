// Copyright 2026 The ArchOnto Migration Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Class and property usage counts, grouped by source ontology.

#ifndef ARCHONTO_STATS_HPP_
#define ARCHONTO_STATS_HPP_

#include <algorithm>
#include <cstdio>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "archonto/graph.hpp"
#include "archonto/schema.hpp"

namespace archonto {

inline constexpr std::string_view kUnknownOntology = "unknown";

struct UsageCount {
  std::string ontology;
  std::string id;
  std::string label;
  std::size_t count = 0;

  friend bool operator==(const UsageCount&, const UsageCount&) = default;
};

struct UsageReport {
  std::vector<UsageCount> class_counts;     // count desc, id asc
  std::vector<UsageCount> property_counts;  // count desc, id asc
  std::map<std::string, std::size_t> ontology_totals;        // properties
  std::map<std::string, std::size_t> class_ontology_totals;  // nodes
  std::vector<std::string> unknown_ids;

  std::size_t property_total() const {
    std::size_t total = 0;
    for (const auto& [ontology, n] : ontology_totals) total += n;
    return total;
  }

  std::size_t count_of(std::string_view id) const {
    for (const auto* list : {&class_counts, &property_counts}) {
      for (const auto& row : *list) {
        if (row.id == id) return row.count;
      }
    }
    return 0;
  }

  friend bool operator==(const UsageReport&, const UsageReport&) = default;
};

namespace detail {

inline std::vector<UsageCount> ranked(const std::map<std::string, UsageCount>& tally) {
  std::vector<UsageCount> out;
  for (const auto& [id, row] : tally) out.push_back(row);
  std::stable_sort(out.begin(), out.end(),
                   [](const UsageCount& a, const UsageCount& b) { return a.count > b.count; });
  return out;
}

}  // namespace detail

// Serializer type assertions are not triples and are never counted.
inline UsageReport usage_report(const Graph& graph, const Schema& schema = builtin_schema()) {
  UsageReport report;
  std::map<std::string, UsageCount> classes, properties;
  for (const auto& [iri, node] : graph.nodes()) {
    auto& row = classes[node.asserted_class];
    if (row.count == 0) {
      row.id = node.asserted_class;
      if (const auto* c = schema.find_class(node.asserted_class)) {
        row.ontology = std::string(to_string(c->source));
        row.label = c->label;
      } else {
        row.ontology = std::string(kUnknownOntology);
        report.unknown_ids.push_back("class " + node.asserted_class);
      }
    }
    ++row.count;
    ++report.class_ontology_totals[row.ontology];
  }
  for (const auto& t : graph.triples()) {
    auto& row = properties[t.property];
    if (row.count == 0) {
      row.id = t.property;
      if (const auto* p = schema.find_property(t.property)) {
        row.ontology = std::string(to_string(p->source));
        row.label = p->label;
      } else {
        row.ontology = std::string(kUnknownOntology);
        report.unknown_ids.push_back("property " + t.property);
      }
    }
    ++row.count;
    ++report.ontology_totals[row.ontology];
  }
  report.class_counts = detail::ranked(classes);
  report.property_counts = detail::ranked(properties);
  return report;
}

// `ONTOLOGY<TAB>ID<TAB>COUNT`: classes, then properties, then one
// `ONTOLOGY<TAB>*<TAB>TOTAL` line per ontology (property totals).
inline std::string format_usage_tsv(const UsageReport& report) {
  std::string out;
  for (const auto* list : {&report.class_counts, &report.property_counts}) {
    for (const auto& row : *list) {
      out += row.ontology + "\t" + row.id + "\t" + std::to_string(row.count) + "\n";
    }
  }
  for (const auto& [ontology, n] : report.ontology_totals) {
    out += ontology + "\t*\t" + std::to_string(n) + "\n";
  }
  return out;
}

inline std::string format_usage_text(const UsageReport& report) {
  std::string out;
  auto table = [&](const char* title, const char* kind, const std::vector<UsageCount>& rows) {
    std::size_t w_ont = 8, w_name = std::string_view(kind).size();
    for (const auto& row : rows) {
      w_ont = std::max(w_ont, row.ontology.size());
      w_name = std::max(w_name, row.id.size() + 1 + row.label.size());
    }
    out += title;
    out += "\n";
    char line[512];
    std::snprintf(line, sizeof line, "%-*s  %-*s  %s\n", static_cast<int>(w_ont), "Ontology",
                  static_cast<int>(w_name), kind, "Occurrences");
    out += line;
    for (const auto& row : rows) {
      const std::string name = row.label.empty() ? row.id : row.id + " " + row.label;
      std::snprintf(line, sizeof line, "%-*s  %-*s  %11zu\n", static_cast<int>(w_ont),
                    row.ontology.c_str(), static_cast<int>(w_name), name.c_str(), row.count);
      out += line;
    }
    out += "\n";
  };
  table("Classes", "Class", report.class_counts);
  table("Properties", "Property", report.property_counts);
  out += "Properties by ontology\n";
  for (const auto& [ontology, n] : report.ontology_totals) {
    out += "  " + ontology + ": " + std::to_string(n) + "\n";
  }
  out += "  total: " + std::to_string(report.property_total()) + "\n";
  return out;
}

}  // namespace archonto

#endif  // ARCHONTO_STATS_HPP_
