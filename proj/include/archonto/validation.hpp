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

// Graph validation against the schema, controlled vocabularies, DataObject
// lexical forms and the level-of-description nesting graph. Problems are
// findings, never exceptions.

#ifndef ARCHONTO_VALIDATION_HPP_
#define ARCHONTO_VALIDATION_HPP_

#include <algorithm>
#include <cstdio>
#include <map>
#include <regex>
#include <set>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "archonto/datetime.hpp"
#include "archonto/graph.hpp"
#include "archonto/migration.hpp"
#include "archonto/schema.hpp"
#include "archonto/vocabulary.hpp"

namespace archonto {

namespace finding {
inline constexpr std::string_view kDomain = "domain-violation";
inline constexpr std::string_view kRange = "range-violation";
inline constexpr std::string_view kVocabulary = "vocabulary-violation";
inline constexpr std::string_view kLexical = "lexical-violation";
inline constexpr std::string_view kNesting = "nesting-violation";
inline constexpr std::string_view kLevelCardinality = "level-cardinality";
inline constexpr std::string_view kRegex = "regex-mismatch";
inline constexpr std::string_view kUnknownProperty = "unknown-property";
inline constexpr std::string_view kUnknownClass = "unknown-class";
inline constexpr std::string_view kUntypedNode = "untyped-node";
inline constexpr std::string_view kInverseMissing = "inverse-missing";
}  // namespace finding

struct ValidationFinding {
  Severity severity = Severity::kError;
  std::string code;
  std::string subject;
  std::string involved;  // property or class id
  std::string message;

  friend bool operator==(const ValidationFinding&, const ValidationFinding&) = default;
};

struct ValidationReport {
  std::vector<ValidationFinding> findings;

  std::size_t count(Severity severity) const {
    return static_cast<std::size_t>(std::count_if(
        findings.begin(), findings.end(), [&](const auto& f) { return f.severity == severity; }));
  }
  std::size_t errors() const { return count(Severity::kError); }
  std::size_t warnings() const { return count(Severity::kWarning); }

  std::set<std::string> codes() const {
    std::set<std::string> out;
    for (const auto& f : findings) out.insert(f.code);
    return out;
  }

  friend bool operator==(const ValidationReport&, const ValidationReport&) = default;
};

namespace detail {

inline bool is_datetime_property(std::string_view id) {
  return id == "DOP1" || id == "DOP2" || id == "DOP6" || id == "DOP8";
}

class Validator {
 public:
  Validator(const Graph& graph, const Schema& schema, const VocabularyRegistry& registry,
            const LevelNestingGraph& nesting)
      : graph_(graph), schema_(schema), registry_(registry), nesting_(nesting) {}

  ValidationReport run() {
    check_nodes();
    for (const auto& t : graph_.triples()) check_triple(t);
    check_levels();
    check_regex_strings();
    check_inverses();
    std::sort(report_.findings.begin(), report_.findings.end(), [](const auto& a, const auto& b) {
      return std::tie(a.subject, a.code, a.involved, a.message) <
             std::tie(b.subject, b.code, b.involved, b.message);
    });
    report_.findings.erase(std::unique(report_.findings.begin(), report_.findings.end()),
                           report_.findings.end());
    return std::move(report_);
  }

 private:
  void add(Severity severity, std::string_view code, const std::string& subject,
           const std::string& involved, std::string message) {
    report_.findings.push_back(
        {severity, std::string(code), subject, involved, std::move(message)});
  }

  const NodeRef* typed(const std::string& iri) {
    const auto* node = graph_.find_node(iri);
    if (node == nullptr || node->asserted_class.empty()) {
      add(Severity::kError, finding::kUntypedNode, iri, {}, "node has no class assertion");
      return nullptr;
    }
    return schema_.find_class(node->asserted_class) != nullptr ? node : nullptr;
  }

  void check_nodes() {
    for (const auto& [iri, node] : graph_.nodes()) {
      if (node.asserted_class.empty()) continue;
      if (schema_.find_class(node.asserted_class) == nullptr) {
        add(Severity::kError, finding::kUnknownClass, iri, node.asserted_class,
            "class " + node.asserted_class + " is not in the schema");
        continue;
      }
      if (!node.value) continue;
      if (registry_.contains(node.asserted_class, *node.value) == Membership::kNotMember) {
        add(Severity::kError, finding::kVocabulary, iri, node.asserted_class,
            "term '" + *node.value + "' is not in the " + node.asserted_class + " vocabulary");
      }
    }
  }

  void check_triple(const Triple& t) {
    const auto* property = schema_.find_property(t.property);
    if (property == nullptr) {
      add(Severity::kError, finding::kUnknownProperty, t.subject, t.property,
          "property " + t.property + " is not in the schema");
      return;
    }
    if (const auto* subject = typed(t.subject);
        subject != nullptr && !schema_.is_subclass(subject->asserted_class, property->domain)) {
      add(Severity::kError, finding::kDomain, t.subject, t.property,
          subject->asserted_class + " is outside the domain " + property->domain + " of " +
              t.property);
    }
    const bool literal_range = is_literal_range(property->range);
    if (t.has_literal()) {
      const auto& literal = t.literal();
      if (!literal_range) {
        add(Severity::kError, finding::kRange, t.subject, t.property,
            t.property + " expects a " + to_string(property->range) + " node, got a literal");
      } else if (std::get<Datatype>(property->range) != literal.datatype) {
        add(Severity::kError, finding::kRange, t.subject, t.property,
            t.property + " expects " + to_string(property->range) + ", got " +
                std::string(to_string(literal.datatype)));
      }
      if ((is_datetime_property(t.property) || literal.datatype == Datatype::kDateTime) &&
          !validate_datetime(literal.text)) {
        add(Severity::kError, finding::kLexical, t.subject, t.property,
            "'" + literal.text + "' is not a YYYY-MM-DDThh:mm:ss instant");
      }
      if (literal.datatype == Datatype::kDecimal && !detail::is_decimal(literal.text)) {
        add(Severity::kError, finding::kLexical, t.subject, t.property,
            "'" + literal.text + "' is not a decimal");
      }
      return;
    }
    if (literal_range) {
      add(Severity::kError, finding::kRange, t.subject, t.property,
          t.property + " expects " + to_string(property->range) + ", got a node");
      return;
    }
    if (const auto* object = typed(t.object_iri());
        object != nullptr &&
        !schema_.is_subclass(object->asserted_class, std::get<std::string>(property->range))) {
      add(Severity::kError, finding::kRange, t.subject, t.property,
          object->asserted_class + " is outside the range " + to_string(property->range) +
              " of " + t.property);
    }
  }

  // Level terms per document, from ARP12 edges.
  std::map<std::string, std::vector<std::string>> levels() const {
    std::map<std::string, std::vector<std::string>> out;
    for (const auto& t : graph_.triples()) {
      if (t.property != "ARP12" || t.has_literal()) continue;
      const auto* level = graph_.find_node(t.object_iri());
      out[t.subject].push_back(level && level->value ? *level->value : std::string());
    }
    return out;
  }

  void check_levels() {
    const auto by_document = levels();
    for (const auto& [iri, node] : graph_.nodes()) {
      if (schema_.find_class(node.asserted_class) == nullptr ||
          !schema_.is_subclass(node.asserted_class, "E31")) {
        continue;
      }
      auto it = by_document.find(iri);
      const std::size_t n = it == by_document.end() ? 0 : it->second.size();
      if (n != 1) {
        add(Severity::kWarning, finding::kLevelCardinality, iri, "ARP12",
            "document has " + std::to_string(n) + " levels of description, expected 1");
      }
    }
    for (const auto& t : graph_.triples()) {
      if (t.property != "P165" || t.has_literal()) continue;
      auto child = by_document.find(t.subject);
      auto parent = by_document.find(t.object_iri());
      if (child == by_document.end() || parent == by_document.end() ||
          child->second.size() != 1 || parent->second.size() != 1) {
        continue;
      }
      const auto& child_level = child->second.front();
      const auto& parent_level = parent->second.front();
      if (!nesting_.has_level(child_level) || !nesting_.has_level(parent_level)) {
        add(Severity::kError, finding::kNesting, t.subject, "P165",
            "level '" + (nesting_.has_level(child_level) ? parent_level : child_level) +
                "' is not in the nesting graph");
      } else if (!nesting_.allows(parent_level, child_level)) {
        add(Severity::kError, finding::kNesting, t.subject, "P165",
            "a " + child_level + " may not be incorporated by a " + parent_level);
      }
    }
  }

  void check_regex_strings() {
    for (const auto& [iri, node] : graph_.nodes()) {
      if (schema_.find_class(node.asserted_class) == nullptr ||
          !schema_.is_subclass(node.asserted_class, "DOE16")) {
        continue;
      }
      std::vector<std::string> patterns, values;
      for (const auto& t : graph_.match(iri, std::nullopt)) {
        if (!t.has_literal()) continue;
        if (t.property == "DOP4") patterns.push_back(t.literal().text);
        if (t.property == "DOP7") values.push_back(t.literal().text);
      }
      for (const auto& pattern : patterns) {
        std::regex re;
        try {
          re = std::regex(pattern, std::regex::ECMAScript);
        } catch (const std::regex_error&) {
          add(Severity::kError, finding::kRegex, iri, "DOP4",
              "pattern '" + pattern + "' does not compile");
          continue;
        }
        for (const auto& value : values) {
          if (!std::regex_match(value, re)) {
            add(Severity::kError, finding::kRegex, iri, "DOP7",
                "'" + value + "' does not match '" + pattern + "'");
          }
        }
      }
    }
  }

  void check_inverses() {
    for (const auto& t : graph_.triples()) {
      if (t.has_literal()) continue;
      const auto* property = schema_.find_property(t.property);
      if (property == nullptr || !property->inverse) continue;
      const Triple mirror{t.object_iri(), *property->inverse, t.subject};
      if (!graph_.triples().contains(mirror)) {
        add(Severity::kWarning, finding::kInverseMissing, t.subject, t.property,
            t.property + " edge lacks its inverse " + *property->inverse);
      }
    }
  }

  const Graph& graph_;
  const Schema& schema_;
  const VocabularyRegistry& registry_;
  const LevelNestingGraph& nesting_;
  ValidationReport report_;
};

}  // namespace detail

inline ValidationReport validate_graph(const Graph& graph, const Schema& schema = builtin_schema(),
                                       const VocabularyRegistry& registry = builtin_vocabularies(),
                                       const LevelNestingGraph& nesting = default_nesting()) {
  return detail::Validator(graph, schema, registry, nesting).run();
}

// `SEVERITY<TAB>CODE<TAB>SUBJECT<TAB>MESSAGE` lines.
inline std::string format_findings_tsv(const ValidationReport& report) {
  std::string out;
  for (const auto& f : report.findings) {
    out += std::string(to_string(f.severity)) + "\t" + f.code + "\t" + f.subject + "\t" +
           f.message + "\n";
  }
  return out;
}

inline std::string format_findings_text(const ValidationReport& report) {
  std::size_t code_width = 4;
  for (const auto& f : report.findings) code_width = std::max(code_width, f.code.size());
  std::string out;
  char buffer[64];
  for (const auto& f : report.findings) {
    std::snprintf(buffer, sizeof buffer, "%-8s%-*s  ", std::string(to_string(f.severity)).c_str(),
                  static_cast<int>(code_width), f.code.c_str());
    out += buffer + f.subject + "\n        " + f.message + "\n";
  }
  out += std::to_string(report.errors()) + " error(s), " + std::to_string(report.warnings()) +
         " warning(s)\n";
  return out;
}

}  // namespace archonto

#endif  // ARCHONTO_VALIDATION_HPP_
