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

#ifndef ARCHONTO_VOCABULARY_HPP_
#define ARCHONTO_VOCABULARY_HPP_

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "archonto/error.hpp"
#include "archonto/schema.hpp"
#include "archonto/text.hpp"

namespace archonto {

struct Vocabulary {
  std::string bound_class;
  std::string name;
  std::vector<std::string> terms;  // insertion order, unique, trimmed

  bool has(std::string_view term) const {
    return std::find(terms.begin(), terms.end(), term) != terms.end();
  }
};

enum class Membership { kMember, kNotMember, kUnconstrained };

class VocabularyRegistry {
 public:
  void add(Vocabulary vocabulary) {
    for (auto& term : vocabulary.terms) {
      term = std::string(trim(term));
      if (term.empty()) {
        throw Error(ErrorKind::kParse, "empty term in vocabulary for " + vocabulary.bound_class);
      }
    }
    std::set<std::string_view> seen;
    for (const auto& term : vocabulary.terms) {
      if (!seen.insert(term).second) {
        throw Error(ErrorKind::kDuplicate,
                    "duplicate term '" + term + "' in vocabulary for " + vocabulary.bound_class);
      }
    }
    const std::string key = vocabulary.bound_class;
    if (!vocabularies_.emplace(key, std::move(vocabulary)).second) {
      throw Error(ErrorKind::kDuplicate, "duplicate vocabulary for class " + key);
    }
  }

  const Vocabulary* find(std::string_view class_id) const {
    auto it = vocabularies_.find(class_id);
    return it == vocabularies_.end() ? nullptr : &it->second;
  }

  // Exact, case-sensitive match after trimming the candidate term.
  Membership contains(std::string_view class_id, std::string_view term) const {
    const auto* vocabulary = find(class_id);
    if (vocabulary == nullptr) return Membership::kUnconstrained;
    return vocabulary->has(trim(term)) ? Membership::kMember : Membership::kNotMember;
  }

  std::size_t size() const { return vocabularies_.size(); }
  bool empty() const { return vocabularies_.empty(); }
  const std::map<std::string, Vocabulary, std::less<>>& vocabularies() const {
    return vocabularies_;
  }

 private:
  std::map<std::string, Vocabulary, std::less<>> vocabularies_;
};

inline Membership contains(const VocabularyRegistry& registry, std::string_view class_id,
                           std::string_view term) {
  return registry.contains(class_id, term);
}

inline VocabularyRegistry builtin_vocabularies() {
  VocabularyRegistry registry;
  registry.add({"ARE1", "Level of description",
                {"Fonds", "Series", "Section", "File", "Item", "Subfonds", "Serie",
                 "Installation Unit"}});
  registry.add({"ARE2", "Title Type", {"Formal", "Supplied"}});
  registry.add({"ARE3", "Title Type", {"Formal", "Supplied"}});
  // The identifier-type terms used by the migration rules come first, then
  // the published examples.
  registry.add({"ARE5", "Identifier of collective person/group",
                {"Reference Code", "Physical Location", "Original Numbering", "Previous Location",
                 "PT", "VCT", "AGH01", "161016", "ADLSB", "600084892", "PT-LiBN"}});
  registry.add({"ARE6", "Type of time period",
                {"Exact dates", "Inferred dates", "Predominant dates", "Creation Date",
                 "Last Modification"}});
  registry.add({"ARE7", "Type of name of collective person/group",
                {"Authorized form of name", "Another form of the name", "Parallel name form"}});
  registry.add({"ARE8", "Role played", {"Producer", "Material Author", "Recipient"}});
  registry.add({"ARE9", "Type of time period",
                {"Exact dates", "Inferred dates", "Predominant dates"}});
  registry.add({"ARE11", "Documentary Typology", {"Certificate", "Income book", "Patent"}});
  registry.add({"ARE13", "Subject", {"Education", "Science", "Law", "Management"}});
  registry.add({"ARE14", "Type of jurisdictional entity",
                {"Ocean", "Archipelago", "Mountain range", "Country", "District"}});
  registry.add({"ARE15", "Transfer of Custody / Acquisition Identifier",
                {"Purchase", "Giving", "Donation", "Deposit", "Swap", "Legacy", "Reintegration",
                 "Transfer"}});
  registry.add({"ARE16", "Event Type", {"Evaluation", "Expertise", "Financial management"}});
  registry.add({"E56", "Language Identifier", {"Portuguese", "Latin", "French", "Greek"}});
  registry.add({"E57", "Support", {"Paper", "Parchment", "Photosensitive film"}});
  registry.add({"E58", "Measurement Unit", {"Centimeter", "Gram", "Byte", "Minute", "Pack"}});
  registry.add({"E98", "Currency", {"Euro", "Dollar", "Kwanza"}});
  return registry;
}

// Parses `CLASS_ID<TAB>TERM` lines. All lines of one class must be
// contiguous; a class that reappears after another class's block is a
// duplicate vocabulary.
inline VocabularyRegistry load_vocabularies(std::string_view text,
                                            const Schema& schema = builtin_schema()) {
  VocabularyRegistry registry;
  Vocabulary current;
  std::set<std::string> closed;
  auto flush = [&] {
    if (current.bound_class.empty()) return;
    closed.insert(current.bound_class);
    registry.add(std::move(current));
    current = {};
  };
  std::size_t line_no = 0;
  for (auto line : split_lines(text)) {
    ++line_no;
    if (trim(line).empty() || line.starts_with('#')) continue;
    auto tab = line.find('\t');
    if (tab == std::string_view::npos) {
      throw Error(ErrorKind::kParse, "line " + std::to_string(line_no) + ": expected CLASS<TAB>TERM",
                  line_no);
    }
    std::string class_id(trim(line.substr(0, tab)));
    std::string term(trim(line.substr(tab + 1)));
    if (class_id.empty() || term.empty()) {
      throw Error(ErrorKind::kParse, "line " + std::to_string(line_no) + ": empty class or term",
                  line_no);
    }
    if (schema.find_class(class_id) == nullptr) {
      throw Error(ErrorKind::kUnknownClass,
                  "line " + std::to_string(line_no) + ": unknown class " + class_id, line_no);
    }
    if (class_id != current.bound_class) {
      flush();
      if (closed.contains(class_id)) {
        throw Error(ErrorKind::kDuplicate,
                    "line " + std::to_string(line_no) + ": duplicate vocabulary for class " +
                        class_id,
                    line_no);
      }
      current.bound_class = class_id;
      current.name = schema.class_def(class_id).label;
    }
    if (current.has(term)) {
      throw Error(ErrorKind::kDuplicate,
                  "line " + std::to_string(line_no) + ": duplicate term '" + term + "'", line_no);
    }
    current.terms.push_back(std::move(term));
  }
  flush();
  return registry;
}

// Admissible nesting of levels of description. An upper edge (lower, upper)
// says units at `lower` may be aggregated into units at `upper`; the lower
// edges are its inverse.
class LevelNestingGraph {
 public:
  LevelNestingGraph() = default;

  // `edges` are (upper, lower) pairs.
  explicit LevelNestingGraph(const std::vector<std::pair<std::string, std::string>>& edges) {
    for (const auto& [upper, lower] : edges) {
      levels_.insert(upper);
      levels_.insert(lower);
      upper_of_[lower].insert(upper);
      lower_of_[upper].insert(lower);
    }
  }

  // (lower, upper) pairs.
  std::vector<std::pair<std::string, std::string>> upper_edges() const {
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& [lower, uppers] : upper_of_) {
      for (const auto& upper : uppers) out.emplace_back(lower, upper);
    }
    return out;
  }

  // (upper, lower) pairs.
  std::vector<std::pair<std::string, std::string>> lower_edges() const {
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& [upper, lowers] : lower_of_) {
      for (const auto& lower : lowers) out.emplace_back(upper, lower);
    }
    return out;
  }

  const std::set<std::string, std::less<>>& levels() const { return levels_; }
  bool has_level(std::string_view level) const { return levels_.contains(level); }

  // True iff `parent_level` is reachable from `child_level` along upper
  // edges (transitive, not reflexive).
  bool allows(std::string_view parent_level, std::string_view child_level) const {
    require(parent_level);
    require(child_level);
    return reachable(upper_of_, child_level, parent_level);
  }

  // Same question answered through the lower edges.
  bool allows_via_lower(std::string_view parent_level, std::string_view child_level) const {
    require(parent_level);
    require(child_level);
    return reachable(lower_of_, parent_level, child_level);
  }

 private:
  using Adjacency = std::map<std::string, std::set<std::string>, std::less<>>;

  void require(std::string_view level) const {
    if (!has_level(level)) {
      throw Error(ErrorKind::kUnknownLevel, "unknown level of description '" +
                                                std::string(level) + "'");
    }
  }

  static bool reachable(const Adjacency& adjacency, std::string_view from, std::string_view to) {
    std::set<std::string, std::less<>> seen;
    std::deque<std::string> queue{std::string(from)};
    while (!queue.empty()) {
      auto node = std::move(queue.front());
      queue.pop_front();
      auto it = adjacency.find(node);
      if (it == adjacency.end()) continue;
      for (const auto& next : it->second) {
        if (next == to) return true;
        if (seen.insert(next).second) queue.push_back(next);
      }
    }
    return false;
  }

  std::set<std::string, std::less<>> levels_;
  Adjacency upper_of_;
  Adjacency lower_of_;
};

inline bool nesting_allows(const LevelNestingGraph& graph, std::string_view parent_level,
                           std::string_view child_level) {
  return graph.allows(parent_level, child_level);
}

inline LevelNestingGraph default_nesting() {
  std::vector<std::pair<std::string, std::string>> edges;
  auto add = [&](const std::string& upper, std::initializer_list<const char*> lowers) {
    for (const auto* lower : lowers) edges.emplace_back(upper, lower);
  };
  add("Fonds", {"Subfonds", "Section", "Serie", "Series"});
  add("Subfonds", {"Serie", "Series"});
  add("Section", {"Serie", "Series", "File"});
  add("Serie", {"Installation Unit", "File", "Item"});
  add("Series", {"Installation Unit", "File", "Item"});
  add("Installation Unit", {"File", "Item"});
  add("File", {"Item"});
  return LevelNestingGraph(edges);
}

// Parses `UPPER_LEVEL<TAB>LOWER_LEVEL` lines.
inline LevelNestingGraph load_nesting(std::string_view text) {
  std::vector<std::pair<std::string, std::string>> edges;
  std::size_t line_no = 0;
  for (auto line : split_lines(text)) {
    ++line_no;
    if (trim(line).empty() || line.starts_with('#')) continue;
    auto tab = line.find('\t');
    if (tab == std::string_view::npos) {
      throw Error(ErrorKind::kParse,
                  "line " + std::to_string(line_no) + ": expected UPPER<TAB>LOWER", line_no);
    }
    std::string upper(trim(line.substr(0, tab)));
    std::string lower(trim(line.substr(tab + 1)));
    if (upper.empty() || lower.empty()) {
      throw Error(ErrorKind::kParse, "line " + std::to_string(line_no) + ": empty level",
                  line_no);
    }
    edges.emplace_back(std::move(upper), std::move(lower));
  }
  return LevelNestingGraph(edges);
}

}  // namespace archonto

#endif  // ARCHONTO_VOCABULARY_HPP_
