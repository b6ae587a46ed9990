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

// ISAD(G) description units, the reference-code forest that links them and
// multilevel inheritance of blank elements.
//
// Corpus format: JSON Lines, one record object per line. Keys are the
// ISAD(G) element ids ("1.1" ... "7.3") plus the structured sub-fields in
// kFieldCatalog and "parent_reference". "1.1" (reference code) is required.

#ifndef ARCHONTO_ISAD_HPP_
#define ARCHONTO_ISAD_HPP_

#include <algorithm>
#include <array>
#include <deque>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include <json.hpp>

#include "archonto/error.hpp"
#include "archonto/text.hpp"

namespace archonto {

enum class DimensionKind { kDimension, kExtension };

struct Dimension {
  std::string value;  // decimal lexical form
  std::string unit;
  DimensionKind kind = DimensionKind::kDimension;

  friend bool operator==(const Dimension&, const Dimension&) = default;
};

struct Creator {
  std::string name;
  std::string role;

  friend bool operator==(const Creator&, const Creator&) = default;
};

using FieldValue = std::variant<std::string, std::vector<std::string>, std::vector<Dimension>,
                                std::vector<Creator>>;

// Blank: absent, empty or whitespace-only text, or an empty list.
inline bool is_blank_value(const FieldValue& value) {
  if (const auto* text = std::get_if<std::string>(&value)) return is_blank(*text);
  return std::visit(
      [](const auto& v) {
        if constexpr (std::is_same_v<std::decay_t<decltype(v)>, std::string>) {
          return is_blank(v);
        } else {
          return v.empty();
        }
      },
      value);
}

enum class FieldKind { kText, kTextList, kDimensions, kCreators };

struct FieldSpec {
  std::string_view key;
  std::string_view name;
  FieldKind kind;
  std::string_view isad_property;  // empty when no ISAD Ontology property exists
};

inline constexpr std::array kFieldCatalog = {
    FieldSpec{"1.1", "Reference code", FieldKind::kText, "ISAD3"},
    FieldSpec{"1.2", "Title", FieldKind::kText, "ISAD1"},
    FieldSpec{"1.3", "Dates", FieldKind::kText, "ISAD5"},
    FieldSpec{"1.4", "Level of description", FieldKind::kText, "ISAD2"},
    FieldSpec{"1.5", "Extent and medium of the unit of description", FieldKind::kText, "ISAD6"},
    FieldSpec{"2.1", "Name of creator", FieldKind::kText, ""},
    FieldSpec{"2.2", "Administrative/biographical history", FieldKind::kText, "ISAD7"},
    FieldSpec{"2.3", "Archival history", FieldKind::kText, "ISAD8"},
    FieldSpec{"2.4", "Immediate source of acquisition or transfer", FieldKind::kText, "ISAD26"},
    FieldSpec{"3.1", "Scope and content", FieldKind::kText, "ISAD9"},
    FieldSpec{"3.2", "Appraisal, destruction and scheduling information", FieldKind::kText, ""},
    FieldSpec{"3.3", "Accruals", FieldKind::kText, "ISAD27"},
    FieldSpec{"3.4", "System of arrangement", FieldKind::kText, "ISAD19"},
    FieldSpec{"4.1", "Conditions governing access", FieldKind::kText, "ISAD10"},
    FieldSpec{"4.2", "Conditions governing reproduction", FieldKind::kText, "ISAD24"},
    FieldSpec{"4.3", "Language/scripts of material", FieldKind::kText, "ISAD14"},
    FieldSpec{"4.4", "Physical characteristics and technical requirements", FieldKind::kText,
              "ISAD20"},
    FieldSpec{"4.5", "Finding aids", FieldKind::kText, ""},
    FieldSpec{"5.1", "Existence and location of originals", FieldKind::kText, ""},
    FieldSpec{"5.2", "Existence and location of copies", FieldKind::kText, "ISAD16"},
    FieldSpec{"5.3", "Related units of description", FieldKind::kText, "ISAD15"},
    FieldSpec{"5.4", "Publication note", FieldKind::kText, "ISAD17"},
    FieldSpec{"6.1", "Note", FieldKind::kText, "ISAD18"},
    FieldSpec{"7.1", "Archivist's note", FieldKind::kText, ""},
    FieldSpec{"7.2", "Rules or conventions", FieldKind::kText, ""},
    FieldSpec{"7.3", "Date(s) of descriptions", FieldKind::kText, "ISAD21"},

    FieldSpec{"title_type", "Type of title", FieldKind::kText, "ISAD4"},
    FieldSpec{"production_date_start", "Production date (start)", FieldKind::kText, ""},
    FieldSpec{"production_date_end", "Production date (end)", FieldKind::kText, ""},
    FieldSpec{"production_date_single", "Production date", FieldKind::kText, ""},
    FieldSpec{"dimensions", "Dimensions", FieldKind::kDimensions, ""},
    FieldSpec{"support", "Support", FieldKind::kTextList, ""},
    FieldSpec{"language", "Language terms", FieldKind::kTextList, ""},
    FieldSpec{"physical_location", "Physical location", FieldKind::kText, "ISAD11"},
    FieldSpec{"original_numbering", "Original numbering", FieldKind::kText, "ISAD13"},
    FieldSpec{"previous_location", "Previous location", FieldKind::kText, "ISAD12"},
    FieldSpec{"description_creation_date", "Description creation date", FieldKind::kText,
              "ISAD21"},
    FieldSpec{"description_last_modification", "Description last modification",
              FieldKind::kText, "ISAD22"},
    FieldSpec{"creators", "Creators", FieldKind::kCreators, ""},
};

inline const FieldSpec* find_field(std::string_view key) {
  for (const auto& field : kFieldCatalog) {
    if (field.key == key) return &field;
  }
  return nullptr;
}

// Identity elements describe one unit only and are never inherited.
inline bool is_identity_field(std::string_view key) {
  return key == "1.1" || key == "1.2" || key == "1.4" || key == "title_type";
}

inline std::set<std::string, std::less<>> default_inheritable() {
  return {"2.2", "2.3", "2.4", "3.1", "3.2", "3.3", "3.4", "4.1", "4.2",
          "4.3", "4.4", "4.5", "5.1", "5.2", "5.3", "5.4", "language"};
}

struct Provenance {
  enum class Kind { kOwn, kInherited, kNone };
  Kind kind = Kind::kNone;
  std::string from;  // owning ancestor when kInherited

  static Provenance own() { return {Kind::kOwn, {}}; }
  static Provenance inherited(std::string from) { return {Kind::kInherited, std::move(from)}; }

  friend bool operator==(const Provenance&, const Provenance&) = default;
};

struct IsadRecord {
  std::string reference_code;
  std::optional<std::string> parent_reference;
  std::map<std::string, FieldValue, std::less<>> fields;
  std::map<std::string, Provenance, std::less<>> provenance;

  bool has(std::string_view key) const {
    auto it = fields.find(key);
    return it != fields.end() && !is_blank_value(it->second);
  }

  // Text of a non-blank text field, or empty.
  std::string text(std::string_view key) const {
    auto it = fields.find(key);
    if (it == fields.end()) return {};
    if (const auto* s = std::get_if<std::string>(&it->second); s && !is_blank(*s)) return *s;
    return {};
  }

  template <typename T>
  const std::vector<T>& list(std::string_view key) const {
    static const std::vector<T> kEmpty;
    auto it = fields.find(key);
    if (it == fields.end()) return kEmpty;
    const auto* v = std::get_if<std::vector<T>>(&it->second);
    return v ? *v : kEmpty;
  }

  friend bool operator==(const IsadRecord&, const IsadRecord&) = default;
};

class RecordTree {
 public:
  RecordTree() = default;

  // Validates uniqueness, parent links and acyclicity.
  static RecordTree build(std::vector<IsadRecord> records) {
    RecordTree tree;
    for (auto& record : records) {
      if (is_blank(record.reference_code)) {
        throw Error(ErrorKind::kParse, "record without reference code");
      }
      const std::string key = record.reference_code;
      if (!tree.records_.emplace(key, std::move(record)).second) {
        throw Error(ErrorKind::kDuplicate, "duplicate reference code " + key);
      }
    }
    for (const auto& [ref, record] : tree.records_) {
      if (!record.parent_reference) continue;
      if (!tree.records_.contains(*record.parent_reference)) {
        throw Error(ErrorKind::kDanglingParent,
                    "record " + ref + " names missing parent " + *record.parent_reference);
      }
    }
    for (const auto& [ref, record] : tree.records_) {
      std::set<std::string_view> chain{ref};
      const IsadRecord* cursor = &record;
      while (cursor->parent_reference) {
        if (!chain.insert(*cursor->parent_reference).second) {
          throw Error(ErrorKind::kCyclicParentage, "cyclic parentage through " + ref);
        }
        cursor = &tree.records_.at(*cursor->parent_reference);
      }
    }
    for (const auto& [ref, record] : tree.records_) {
      tree.children_[ref];
      if (record.parent_reference) tree.children_[*record.parent_reference].push_back(ref);
    }
    return tree;
  }

  const std::map<std::string, IsadRecord, std::less<>>& records() const { return records_; }
  const std::map<std::string, std::vector<std::string>, std::less<>>& children() const {
    return children_;
  }
  std::size_t size() const { return records_.size(); }
  bool empty() const { return records_.empty(); }

  const IsadRecord& at(std::string_view ref) const {
    auto it = records_.find(ref);
    if (it == records_.end()) {
      throw Error(ErrorKind::kDanglingParent, "no record " + std::string(ref));
    }
    return it->second;
  }

  std::vector<std::string> roots() const {
    std::vector<std::string> out;
    for (const auto& [ref, record] : records_) {
      if (!record.parent_reference) out.push_back(ref);
    }
    return out;
  }

  // Parents before children; siblings in reference-code order.
  std::vector<std::string> top_down_order() const {
    std::vector<std::string> order;
    std::deque<std::string> queue;
    for (auto& root : roots()) queue.push_back(std::move(root));
    while (!queue.empty()) {
      order.push_back(std::move(queue.front()));
      queue.pop_front();
      for (const auto& child : children_.at(order.back())) queue.push_back(child);
    }
    return order;
  }

  IsadRecord& mutable_record(std::string_view ref) { return records_.find(ref)->second; }

  friend bool operator==(const RecordTree&, const RecordTree&) = default;

 private:
  std::map<std::string, IsadRecord, std::less<>> records_;
  std::map<std::string, std::vector<std::string>, std::less<>> children_;
};

namespace detail {

inline std::string json_scalar_text(const nlohmann::json& value, std::string_view what,
                                    std::size_t line_no) {
  if (value.is_string()) return value.get<std::string>();
  if (value.is_number()) return value.dump();
  throw Error(ErrorKind::kParse,
              "line " + std::to_string(line_no) + ": " + std::string(what) + " must be text",
              line_no);
}

inline FieldValue parse_field(const FieldSpec& field, const nlohmann::json& value,
                              std::size_t line_no) {
  auto fail = [&](const std::string& why) {
    throw Error(ErrorKind::kParse,
                "line " + std::to_string(line_no) + ": field " + std::string(field.key) + " " + why,
                line_no);
  };
  switch (field.kind) {
    case FieldKind::kText:
      if (value.is_null()) return std::string();
      if (!value.is_string()) fail("must be a string");
      return value.get<std::string>();
    case FieldKind::kTextList: {
      if (value.is_null()) return std::vector<std::string>{};
      if (!value.is_array()) fail("must be an array of strings");
      std::vector<std::string> out;
      for (const auto& item : value) {
        if (!item.is_string()) fail("must be an array of strings");
        if (!is_blank(item.get<std::string>())) out.push_back(item.get<std::string>());
      }
      return out;
    }
    case FieldKind::kDimensions: {
      if (value.is_null()) return std::vector<Dimension>{};
      if (!value.is_array()) fail("must be an array of objects");
      std::vector<Dimension> out;
      for (const auto& item : value) {
        if (!item.is_object() || !item.contains("value") || !item.contains("unit")) {
          fail("entries need value and unit");
        }
        Dimension dim;
        dim.value = std::string(trim(json_scalar_text(item["value"], "dimension value", line_no)));
        dim.unit = std::string(trim(json_scalar_text(item["unit"], "dimension unit", line_no)));
        const std::string kind = item.value("kind", std::string("dimension"));
        if (kind == "dimension") {
          dim.kind = DimensionKind::kDimension;
        } else if (kind == "extension") {
          dim.kind = DimensionKind::kExtension;
        } else {
          fail("kind must be dimension or extension");
        }
        for (const auto& [k, v] : item.items()) {
          if (k != "value" && k != "unit" && k != "kind") fail("has unknown key " + k);
        }
        out.push_back(std::move(dim));
      }
      return out;
    }
    case FieldKind::kCreators: {
      if (value.is_null()) return std::vector<Creator>{};
      if (!value.is_array()) fail("must be an array of objects");
      std::vector<Creator> out;
      for (const auto& item : value) {
        if (!item.is_object() || !item.contains("name")) fail("entries need a name");
        Creator creator;
        creator.name = json_scalar_text(item["name"], "creator name", line_no);
        if (item.contains("role")) {
          creator.role = json_scalar_text(item["role"], "creator role", line_no);
        }
        for (const auto& [k, v] : item.items()) {
          if (k != "name" && k != "role") fail("has unknown key " + k);
        }
        out.push_back(std::move(creator));
      }
      return out;
    }
  }
  return std::string();
}

}  // namespace detail

inline IsadRecord parse_record(const nlohmann::json& object, std::size_t line_no = 0) {
  if (!object.is_object()) {
    throw Error(ErrorKind::kParse,
                "line " + std::to_string(line_no) + ": record must be a JSON object", line_no);
  }
  IsadRecord record;
  for (const auto& [key, value] : object.items()) {
    if (key == "parent_reference") {
      if (value.is_null()) continue;
      if (!value.is_string()) {
        throw Error(ErrorKind::kParse,
                    "line " + std::to_string(line_no) + ": parent_reference must be a string",
                    line_no);
      }
      if (!is_blank(value.get<std::string>())) {
        record.parent_reference = std::string(trim(value.get<std::string>()));
      }
      continue;
    }
    const auto* field = find_field(key);
    if (field == nullptr) {
      throw Error(ErrorKind::kParse,
                  "line " + std::to_string(line_no) + ": unknown element id '" + key + "'",
                  line_no);
    }
    record.fields[key] = detail::parse_field(*field, value, line_no);
  }
  record.reference_code = std::string(trim(record.text("1.1")));
  if (record.reference_code.empty()) {
    throw Error(ErrorKind::kParse,
                "line " + std::to_string(line_no) + ": element 1.1 (reference code) is required",
                line_no);
  }
  const auto level = record.text("1.4");
  if (level.find('\n') != std::string::npos) {
    throw Error(ErrorKind::kParse,
                "line " + std::to_string(line_no) + ": element 1.4 must be a single term",
                line_no);
  }
  const auto title_type = std::string(trim(record.text("title_type")));
  if (!title_type.empty() && title_type != "formal" && title_type != "supplied") {
    throw Error(ErrorKind::kParse,
                "line " + std::to_string(line_no) + ": title_type must be formal or supplied",
                line_no);
  }
  return record;
}

inline std::vector<IsadRecord> parse_records(std::string_view text) {
  std::vector<IsadRecord> records;
  std::size_t line_no = 0;
  for (auto line : split_lines(text)) {
    ++line_no;
    if (is_blank(line)) continue;
    nlohmann::json object;
    try {
      object = nlohmann::json::parse(line);
    } catch (const nlohmann::json::parse_error& e) {
      throw Error(ErrorKind::kParse,
                  "line " + std::to_string(line_no) + ", byte " + std::to_string(e.byte) + ": " +
                      e.what(),
                  line_no);
    }
    records.push_back(parse_record(object, line_no));
  }
  return records;
}

inline RecordTree parse_corpus(std::string_view text) {
  return RecordTree::build(parse_records(text));
}

inline nlohmann::json to_json(const IsadRecord& record) {
  nlohmann::json out = nlohmann::json::object();
  for (const auto& [key, value] : record.fields) {
    std::visit(
        [&](const auto& v) {
          using T = std::decay_t<decltype(v)>;
          if constexpr (std::is_same_v<T, std::string> ||
                        std::is_same_v<T, std::vector<std::string>>) {
            out[key] = v;
          } else if constexpr (std::is_same_v<T, std::vector<Dimension>>) {
            auto& array = out[key] = nlohmann::json::array();
            for (const auto& d : v) {
              array.push_back({{"value", d.value},
                               {"unit", d.unit},
                               {"kind", d.kind == DimensionKind::kDimension ? "dimension"
                                                                            : "extension"}});
            }
          } else {
            auto& array = out[key] = nlohmann::json::array();
            for (const auto& c : v) array.push_back({{"name", c.name}, {"role", c.role}});
          }
        },
        value);
  }
  if (record.parent_reference) out["parent_reference"] = *record.parent_reference;
  return out;
}

// Fills blank inheritable fields from the nearest ancestor that has a
// value. Own values are never overwritten. Identity fields are skipped even
// when requested. Every inheritable key gets a provenance entry.
inline RecordTree resolve_inheritance(
    const RecordTree& tree,
    const std::set<std::string, std::less<>>& inheritable = default_inheritable()) {
  RecordTree out = tree;
  for (const auto& ref : out.top_down_order()) {
    auto& record = out.mutable_record(ref);
    for (const auto& [key, value] : record.fields) {
      if (!is_blank_value(value) && !record.provenance.contains(key)) {
        record.provenance[key] = Provenance::own();
      }
    }
    for (const auto& key : inheritable) {
      if (is_identity_field(key) || record.has(key)) continue;
      if (record.parent_reference) {
        // The parent is already resolved (top-down order).
        const auto& parent = out.at(*record.parent_reference);
        if (parent.has(key)) {
          record.fields[key] = parent.fields.find(key)->second;
          const auto& source = parent.provenance.at(key);
          record.provenance[key] = source.kind == Provenance::Kind::kInherited
                                       ? source
                                       : Provenance::inherited(parent.reference_code);
          continue;
        }
      }
      record.provenance[key] = Provenance{};
    }
  }
  return out;
}

// Identity elements left blank, as (reference code, element id) pairs.
inline std::vector<std::pair<std::string, std::string>> blank_identity_elements(
    const RecordTree& tree) {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& [ref, record] : tree.records()) {
    for (std::string_view key : {"1.2", "1.4"}) {
      if (!record.has(key)) out.emplace_back(ref, std::string(key));
    }
  }
  return out;
}

}  // namespace archonto

#endif  // ARCHONTO_ISAD_HPP_
