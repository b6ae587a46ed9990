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

// The ArchOnto class and property catalog: CIDOC CRM subset, the ArchOnto
// extensions (ARE/ARP), DataObject (DOE/DOP), N-ary (PC/P0x), the ISAD
// Ontology (ISADn) and the Link2DataObject bridge (L2DO).

#ifndef ARCHONTO_SCHEMA_HPP_
#define ARCHONTO_SCHEMA_HPP_

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "archonto/error.hpp"

namespace archonto {

enum class SourceOntology { kCidoc, kArchOnto, kDataObject, kNary, kIsadOnt, kLink2Do };

constexpr std::string_view to_string(SourceOntology source) {
  switch (source) {
    case SourceOntology::kCidoc: return "CIDOC";
    case SourceOntology::kArchOnto: return "ArchOnto";
    case SourceOntology::kDataObject: return "DataObject";
    case SourceOntology::kNary: return "Nary";
    case SourceOntology::kIsadOnt: return "ISADOnt";
    case SourceOntology::kLink2Do: return "Link2DO";
  }
  return "unknown";
}

enum class Datatype { kString, kDateTime, kDecimal };

constexpr std::string_view to_string(Datatype type) {
  switch (type) {
    case Datatype::kString: return "xsd:string";
    case Datatype::kDateTime: return "xsd:dateTime";
    case Datatype::kDecimal: return "xsd:decimal";
  }
  return "xsd:string";
}

inline std::optional<Datatype> parse_datatype(std::string_view tag) {
  if (tag == "xsd:string") return Datatype::kString;
  if (tag == "xsd:dateTime") return Datatype::kDateTime;
  if (tag == "xsd:decimal") return Datatype::kDecimal;
  return std::nullopt;
}

struct ClassDef {
  std::string id;
  std::string label;
  SourceOntology source;
  std::vector<std::string> parents;
};

// A property range is either a class id or a literal datatype.
using Range = std::variant<std::string, Datatype>;

inline bool is_literal_range(const Range& range) {
  return std::holds_alternative<Datatype>(range);
}

inline std::string to_string(const Range& range) {
  if (const auto* type = std::get_if<Datatype>(&range)) return std::string(to_string(*type));
  return std::get<std::string>(range);
}

struct PropertyDef {
  std::string id;
  std::string label;
  SourceOntology source;
  std::string domain;
  Range range;
  std::vector<std::string> parents;
  std::optional<std::string> inverse;
};

struct Signature {
  std::string domain;
  Range range;

  friend bool operator==(const Signature&, const Signature&) = default;
};

class Schema {
 public:
  Schema(std::vector<ClassDef> classes, std::vector<PropertyDef> properties) {
    for (auto& c : classes) {
      check_prefix(c.id, c.source);
      const std::string id = c.id;
      if (!classes_.emplace(id, std::move(c)).second) {
        throw std::logic_error("duplicate class id " + id);
      }
    }
    for (auto& p : properties) {
      const std::string id = p.id;
      if (!properties_.emplace(id, std::move(p)).second) {
        throw std::logic_error("duplicate property id " + id);
      }
    }
    for (const auto& [id, c] : classes_) {
      for (const auto& parent : c.parents) {
        if (!classes_.contains(parent)) {
          throw std::logic_error("class " + id + " has undeclared parent " + parent);
        }
      }
    }
    for (const auto& [id, p] : properties_) {
      if (!classes_.contains(p.domain)) {
        throw std::logic_error("property " + id + " has undeclared domain " + p.domain);
      }
      if (const auto* range = std::get_if<std::string>(&p.range);
          range != nullptr && !classes_.contains(*range)) {
        throw std::logic_error("property " + id + " has undeclared range " + *range);
      }
      for (const auto& parent : p.parents) {
        if (!properties_.contains(parent)) {
          throw std::logic_error("property " + id + " has undeclared parent " + parent);
        }
      }
      if (p.inverse && !properties_.contains(*p.inverse)) {
        throw std::logic_error("property " + id + " has undeclared inverse " + *p.inverse);
      }
    }
    class_ancestors_ = closure(classes_);
    property_ancestors_ = closure(properties_);
  }

  const std::map<std::string, ClassDef, std::less<>>& classes() const { return classes_; }
  const std::map<std::string, PropertyDef, std::less<>>& properties() const {
    return properties_;
  }

  const ClassDef* find_class(std::string_view id) const {
    auto it = classes_.find(id);
    return it == classes_.end() ? nullptr : &it->second;
  }

  const PropertyDef* find_property(std::string_view id) const {
    auto it = properties_.find(id);
    return it == properties_.end() ? nullptr : &it->second;
  }

  const ClassDef& class_def(std::string_view id) const {
    if (const auto* c = find_class(id)) return *c;
    throw Error(ErrorKind::kUnknownClass, "unknown class " + std::string(id));
  }

  const PropertyDef& property_def(std::string_view id) const {
    if (const auto* p = find_property(id)) return *p;
    throw Error(ErrorKind::kUnknownProperty, "unknown property " + std::string(id));
  }

  // Reflexive-transitive subclass test.
  bool is_subclass(std::string_view child, std::string_view ancestor) const {
    class_def(ancestor);
    return class_ancestors_.at(class_def(child).id).contains(ancestor);
  }

  bool is_subproperty(std::string_view child, std::string_view ancestor) const {
    property_def(ancestor);
    return property_ancestors_.at(property_def(child).id).contains(ancestor);
  }

  Signature property_signature(std::string_view property) const {
    const auto& p = property_def(property);
    return {p.domain, p.range};
  }

  std::vector<std::pair<std::string, std::string>> subclass_edges() const {
    return edges(classes_);
  }

  std::vector<std::pair<std::string, std::string>> subproperty_edges() const {
    return edges(properties_);
  }

  // Sorted `kind<TAB>id<TAB>label<TAB>parent|domain,range` listing.
  std::string dump() const {
    std::vector<std::string> lines;
    for (const auto& [id, c] : classes_) {
      std::string parents;
      for (const auto& parent : c.parents) parents += (parents.empty() ? "" : ";") + parent;
      lines.push_back("class\t" + id + "\t" + c.label + "\t" + (parents.empty() ? "-" : parents));
    }
    for (const auto& [id, p] : properties_) {
      lines.push_back("property\t" + id + "\t" + p.label + "\t" + p.domain + "," +
                      to_string(p.range));
      for (const auto& parent : p.parents) {
        lines.push_back("subproperty\t" + id + "\t" + p.label + "\t" + parent);
      }
    }
    std::sort(lines.begin(), lines.end());
    std::string out;
    for (const auto& line : lines) out += line + "\n";
    return out;
  }

 private:
  using AncestorMap = std::map<std::string, std::set<std::string, std::less<>>, std::less<>>;

  static void check_prefix(const std::string& id, SourceOntology source) {
    auto starts = [&](std::string_view prefix) { return id.starts_with(prefix); };
    bool ok = true;
    switch (source) {
      case SourceOntology::kCidoc: ok = starts("E") || starts("P"); break;
      case SourceOntology::kArchOnto: ok = starts("ARE") || starts("ARP"); break;
      case SourceOntology::kDataObject: ok = starts("DOE") || starts("DOP"); break;
      case SourceOntology::kNary: ok = starts("PC") || starts("P0"); break;
      case SourceOntology::kIsadOnt: ok = starts("ISAD"); break;
      case SourceOntology::kLink2Do: ok = starts("L2DO"); break;
    }
    if (!ok) {
      throw std::logic_error("identifier " + id + " does not match its source ontology " +
                             std::string(to_string(source)));
    }
  }

  template <typename Map>
  static AncestorMap closure(const Map& defs) {
    AncestorMap result;
    enum class Mark { kNone, kActive, kDone };
    std::map<std::string, Mark, std::less<>> marks;
    std::function<void(const std::string&)> visit = [&](const std::string& id) {
      auto& mark = marks[id];
      if (mark == Mark::kDone) return;
      if (mark == Mark::kActive) throw std::logic_error("hierarchy cycle through " + id);
      mark = Mark::kActive;
      auto& set = result[id];
      set.insert(id);
      for (const auto& parent : defs.find(id)->second.parents) {
        visit(parent);
        set.insert(result[parent].begin(), result[parent].end());
      }
      marks[id] = Mark::kDone;
    };
    for (const auto& [id, def] : defs) visit(id);
    return result;
  }

  template <typename Map>
  static std::vector<std::pair<std::string, std::string>> edges(const Map& defs) {
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& [id, def] : defs) {
      for (const auto& parent : def.parents) out.emplace_back(id, parent);
    }
    return out;
  }

  std::map<std::string, ClassDef, std::less<>> classes_;
  std::map<std::string, PropertyDef, std::less<>> properties_;
  AncestorMap class_ancestors_;
  AncestorMap property_ancestors_;
};

namespace detail {

struct ClassRow {
  const char* id;
  const char* label;
  SourceOntology source;
  std::vector<std::string> parents;
};

struct PropertyRow {
  const char* id;
  const char* label;
  SourceOntology source;
  const char* domain;
  const char* range;  // class id or xsd tag
  std::vector<std::string> parents;
  const char* inverse = nullptr;
};

inline std::vector<ClassDef> builtin_classes() {
  using S = SourceOntology;
  // CIDOC CRM backbone classes (E2, E4, E18, E28, E70, E71, E73, E77, E89,
  // E90, ...) are declared so that real CRM domains and ranges resolve.
  // Intermediate CRM classes that nothing references (E11, E20, E72) are
  // collapsed into their children's parent lists.
  const std::vector<ClassRow> rows = {
      {"E1", "CRM Entity", S::kCidoc, {}},
      {"E2", "Temporal Entity", S::kCidoc, {"E1"}},
      {"E3", "Condition State", S::kCidoc, {"E2"}},
      {"E4", "Period", S::kCidoc, {"E2"}},
      {"E5", "Event", S::kCidoc, {"E4"}},
      {"E7", "Activity", S::kCidoc, {"E5"}},
      {"E8", "Acquisition", S::kCidoc, {"E7"}},
      {"E9", "Move", S::kCidoc, {"E7"}},
      {"E10", "Transfer of Custody", S::kCidoc, {"E7"}},
      {"E12", "Production", S::kCidoc, {"E7", "E63"}},
      {"E18", "Physical Thing", S::kCidoc, {"E70"}},
      {"E19", "Physical Object", S::kCidoc, {"E18"}},
      {"E21", "Person", S::kCidoc, {"E39"}},
      {"E22", "Human-Made Object", S::kCidoc, {"E19", "E24"}},
      {"E24", "Physical Human-Made Thing", S::kCidoc, {"E18", "E71"}},
      {"E28", "Conceptual Object", S::kCidoc, {"E71"}},
      {"E31", "Document", S::kCidoc, {"E73"}},
      {"E32", "Authority Document", S::kCidoc, {"E31"}},
      {"E33", "Linguistic Object", S::kCidoc, {"E73"}},
      {"E35", "Title", S::kCidoc, {"E33", "E41"}},
      {"E36", "Visual Item", S::kCidoc, {"E73"}},
      {"E39", "Actor", S::kCidoc, {"E77"}},
      {"E41", "Appellation", S::kCidoc, {"E90"}},
      {"E42", "Identifier", S::kCidoc, {"E41"}},
      {"E52", "Time-Span", S::kCidoc, {"E1"}},
      {"E53", "Place", S::kCidoc, {"E1"}},
      {"E54", "Dimension", S::kCidoc, {"E1"}},
      {"E55", "Type", S::kCidoc, {"E28"}},
      {"E56", "Language", S::kCidoc, {"E55"}},
      {"E57", "Material", S::kCidoc, {"E55"}},
      {"E58", "Measurement Unit", S::kCidoc, {"E55"}},
      {"E63", "Beginning of Existence", S::kCidoc, {"E5"}},
      {"E64", "End of Existence", S::kCidoc, {"E5"}},
      {"E65", "Creation", S::kCidoc, {"E7", "E63"}},
      {"E66", "Formation", S::kCidoc, {"E7", "E63"}},
      {"E67", "Birth", S::kCidoc, {"E63"}},
      {"E68", "Dissolution", S::kCidoc, {"E64"}},
      {"E69", "Death", S::kCidoc, {"E64"}},
      {"E70", "Thing", S::kCidoc, {"E77"}},
      {"E71", "Human-Made Thing", S::kCidoc, {"E70"}},
      {"E73", "Information Object", S::kCidoc, {"E89", "E90"}},
      {"E74", "Group", S::kCidoc, {"E39"}},
      {"E77", "Persistent Item", S::kCidoc, {"E1"}},
      {"E85", "Joining", S::kCidoc, {"E7"}},
      {"E86", "Leaving", S::kCidoc, {"E7"}},
      {"E89", "Propositional Object", S::kCidoc, {"E28"}},
      {"E90", "Symbolic Object", S::kCidoc, {"E28"}},
      {"E96", "Purchase", S::kCidoc, {"E8"}},
      {"E98", "Currency", S::kCidoc, {"E58"}},

      {"ARE1", "Level of Description", S::kArchOnto, {"E55"}},
      {"ARE2", "Formal Title", S::kArchOnto, {"E35"}},
      {"ARE3", "Supplied Title", S::kArchOnto, {"E35"}},
      {"ARE4", "Extension", S::kArchOnto, {"E54"}},
      {"ARE5", "Identifier Type", S::kArchOnto, {"E55"}},
      {"ARE6", "Date Type", S::kArchOnto, {"E55"}},
      {"ARE7", "Name Type", S::kArchOnto, {"E55"}},
      {"ARE8", "Role Type", S::kArchOnto, {"E55"}},
      {"ARE9", "Date Certainty", S::kArchOnto, {"E55"}},
      // ARE10 is never defined.
      {"ARE11", "Documentary Typology", S::kArchOnto, {"E55"}},
      {"ARE12", "Organisation", S::kArchOnto, {"E39"}},
      {"ARE13", "Subject Type", S::kArchOnto, {"E55"}},
      {"ARE14", "Place Type", S::kArchOnto, {"E55"}},
      {"ARE15", "Acquisition Type", S::kArchOnto, {"E55"}},
      {"ARE16", "Event Type", S::kArchOnto, {"E55"}},

      // DataObject and N-ary roots hang under E1 so that CRM properties with
      // an E1 domain (P2 has type on a DOE10 Instant) type-check.
      {"DOE1", "DataObject", S::kDataObject, {"E1"}},
      {"DOE2", "AuthorityFile", S::kDataObject, {"DOE1"}},
      {"DOE3", "Boolean", S::kDataObject, {"DOE1"}},
      {"DOE4", "Date", S::kDataObject, {"DOE1"}},
      {"DOE5", "Decimal", S::kDataObject, {"DOE1"}},
      {"DOE6", "GeospatialCoordinates", S::kDataObject, {"DOE1"}},
      {"DOE7", "Integer", S::kDataObject, {"DOE1"}},
      {"DOE8", "String", S::kDataObject, {"DOE1"}},
      {"DOE9", "Approximate", S::kDataObject, {"DOE4"}},
      {"DOE10", "Instant", S::kDataObject, {"DOE4"}},
      {"DOE11", "Interval", S::kDataObject, {"DOE4"}},
      {"DOE12", "Latitude", S::kDataObject, {"DOE6"}},
      {"DOE13", "Longitude", S::kDataObject, {"DOE6"}},
      {"DOE14", "Polygon", S::kDataObject, {"DOE6"}},
      {"DOE15", "AuthorityString", S::kDataObject, {"DOE8"}},
      {"DOE16", "RegexString", S::kDataObject, {"DOE8"}},
      {"DOE17", "PersonName", S::kDataObject, {"DOE15"}},

      {"PC0", "CRM Property", S::kNary, {"E1"}},
      {"PC14", "Carried Out By", S::kNary, {"PC0"}},
  };
  std::vector<ClassDef> out;
  out.reserve(rows.size());
  for (const auto& row : rows) out.push_back({row.id, row.label, row.source, row.parents});
  return out;
}

inline std::vector<PropertyDef> builtin_properties() {
  using S = SourceOntology;
  const std::vector<PropertyRow> rows = {
      {"ARP8", "upper level", S::kArchOnto, "ARE1", "ARE1", {}, "ARP9"},
      {"ARP9", "lower level", S::kArchOnto, "ARE1", "ARE1", {}, "ARP8"},
      {"ARP12", "has level of description", S::kArchOnto, "E31", "ARE1", {"P2"}},

      {"L2DO", "hasValue", S::kLink2Do, "E1", "DOE1", {}},

      {"P01", "has domain", S::kNary, "PC0", "E1", {}},
      {"P02", "has range", S::kNary, "PC0", "E1", {}},

      {"DOP1", "approximateDateValue", S::kDataObject, "DOE9", "xsd:dateTime", {}},
      {"DOP2", "endDateValue", S::kDataObject, "DOE11", "xsd:dateTime", {}},
      {"DOP3", "fileLocation", S::kDataObject, "DOE2", "xsd:string", {}},
      {"DOP4", "hasRegex", S::kDataObject, "DOE16", "xsd:string", {}},
      {"DOP5", "name", S::kDataObject, "DOE17", "xsd:string", {}},
      {"DOP6", "startDateValue", S::kDataObject, "DOE11", "xsd:dateTime", {}},
      {"DOP7", "stringValue", S::kDataObject, "DOE8", "xsd:string", {}},
      {"DOP8", "timestamp", S::kDataObject, "DOE10", "xsd:dateTime", {}},

      {"P1", "is identified by", S::kCidoc, "E1", "E41", {}},
      {"P2", "has type", S::kCidoc, "E1", "E55", {}},
      {"P3", "has note", S::kCidoc, "E1", "xsd:string", {}},
      {"P4", "has time-span", S::kCidoc, "E2", "E52", {}},
      {"P5", "consists of", S::kCidoc, "E3", "E3", {}},
      {"P7", "took place at", S::kCidoc, "E4", "E53", {}},
      {"P11", "had participant", S::kCidoc, "E5", "E39", {}},
      {"P12", "was present at", S::kCidoc, "E77", "E5", {}},
      {"P14", "carried out by", S::kCidoc, "E7", "E39", {}},
      {"P14.1", "in the role of", S::kCidoc, "PC14", "E55", {}},
      {"P17", "was motivated by", S::kCidoc, "E7", "E1", {}},
      {"P20", "had specific purpose", S::kCidoc, "E7", "E5", {}},
      {"P24", "changed ownership through", S::kCidoc, "E18", "E8", {}},
      {"P25", "moved by", S::kCidoc, "E19", "E9", {}},
      {"P26", "moved to", S::kCidoc, "E9", "E53", {}},
      {"P28", "custody surrendered by", S::kCidoc, "E10", "E39", {}},
      {"P29", "custody received by", S::kCidoc, "E10", "E39", {}},
      {"P30", "transferred custody of", S::kCidoc, "E10", "E18", {}},
      {"P43", "has dimension", S::kCidoc, "E70", "E54", {}},
      {"P44", "has condition", S::kCidoc, "E18", "E3", {}},
      {"P45", "consists of", S::kCidoc, "E18", "E57", {}},
      {"P46", "is composed of", S::kCidoc, "E18", "E18", {}},
      {"P48", "has preferred identifier", S::kCidoc, "E1", "E42", {}},
      {"P49", "has former or current keeper", S::kCidoc, "E18", "E39", {}},
      {"P50", "has current keeper", S::kCidoc, "E18", "E39", {}},
      {"P53", "has former or current location", S::kCidoc, "E18", "E53", {}},
      {"P54", "has current permanent location", S::kCidoc, "E19", "E53", {}},
      {"P67", "refers to", S::kCidoc, "E89", "E1", {}},
      {"P70", "documents", S::kCidoc, "E31", "E1", {}},
      {"P71", "is listed in", S::kCidoc, "E1", "E32", {}},
      {"P72", "has language", S::kCidoc, "E33", "E56", {}},
      {"P74", "has current or former residence", S::kCidoc, "E39", "E53", {}},
      {"P89", "falls within", S::kCidoc, "E53", "E53", {}},
      {"P90", "has value", S::kCidoc, "E54", "xsd:decimal", {}},
      {"P91", "has unit", S::kCidoc, "E54", "E58", {}},
      {"P94", "was created by", S::kCidoc, "E28", "E65", {}},
      {"P95", "was formed by", S::kCidoc, "E74", "E66", {}},
      {"P96", "by mother", S::kCidoc, "E67", "E21", {}},
      {"P97", "from father", S::kCidoc, "E67", "E21", {}},
      {"P98", "brought into life", S::kCidoc, "E67", "E21", {}},
      {"P99", "was dissolved by", S::kCidoc, "E74", "E68", {}},
      {"P100", "was death of", S::kCidoc, "E69", "E21", {}},
      {"P102", "has title", S::kCidoc, "E71", "E35", {}},
      {"P106", "is composed of", S::kCidoc, "E90", "E90", {}},
      {"P107", "has current or former member", S::kCidoc, "E74", "E39", {}},
      {"P108", "was produced by", S::kCidoc, "E24", "E12", {}},
      {"P121", "overlaps with", S::kCidoc, "E53", "E53", {}},
      {"P122", "borders with", S::kCidoc, "E53", "E53", {}},
      {"P128", "is carried by", S::kCidoc, "E90", "E18", {}},
      {"P129", "is about", S::kCidoc, "E89", "E1", {}},
      {"P130", "features are also found on", S::kCidoc, "E70", "E70", {}},
      {"P134", "continued", S::kCidoc, "E7", "E7", {}},
      {"P143", "joined", S::kCidoc, "E85", "E39", {}},
      {"P144", "joined with", S::kCidoc, "E85", "E74", {}},
      {"P145", "separated", S::kCidoc, "E86", "E39", {}},
      {"P146", "separated from", S::kCidoc, "E86", "E74", {}},
      {"P151", "was formed from", S::kCidoc, "E66", "E74", {}},
      {"P165", "incorporates", S::kCidoc, "E73", "E90", {}},
      {"P173", "ends with or after the start of", S::kCidoc, "E2", "E2", {}},
      {"P183", "starts after the end of", S::kCidoc, "E2", "E2", {}},

      {"ISAD1", "has title", S::kIsadOnt, "E31", "xsd:string", {"P3"}},
      {"ISAD2", "has level of description", S::kIsadOnt, "E31", "xsd:string", {"P3"}},
      {"ISAD3", "has reference code", S::kIsadOnt, "E31", "xsd:string", {"P3"}},
      {"ISAD4", "has type of title", S::kIsadOnt, "E31", "xsd:string", {"P3"}},
      {"ISAD5", "has date", S::kIsadOnt, "E31", "xsd:string", {"P3"}},
      {"ISAD6", "has dimension and support", S::kIsadOnt, "E31", "xsd:string", {"P3"}},
      {"ISAD7", "has administrative history", S::kIsadOnt, "E31", "xsd:string", {"P3"}},
      {"ISAD8", "has archival history", S::kIsadOnt, "E31", "xsd:string", {"P3"}},
      {"ISAD9", "has scope", S::kIsadOnt, "E31", "xsd:string", {"P3"}},
      {"ISAD10", "has access condition", S::kIsadOnt, "E31", "xsd:string", {"P3"}},
      {"ISAD11", "has current quota", S::kIsadOnt, "E31", "xsd:string", {"P3"}},
      {"ISAD12", "has old quota", S::kIsadOnt, "E31", "xsd:string", {"P3"}},
      {"ISAD13", "has original quota", S::kIsadOnt, "E31", "xsd:string", {"P3"}},
      {"ISAD14", "has language", S::kIsadOnt, "E31", "xsd:string", {"P3"}},
      {"ISAD15", "has related unit of description", S::kIsadOnt, "E31", "xsd:string", {"P3"}},
      {"ISAD16", "has existence and location of copies", S::kIsadOnt, "E31", "xsd:string",
       {"P3"}},
      {"ISAD17", "has publication notes", S::kIsadOnt, "E31", "xsd:string", {"P3"}},
      {"ISAD18", "has notes", S::kIsadOnt, "E31", "xsd:string", {"P3"}},
      {"ISAD19", "has system of arrangement", S::kIsadOnt, "E31", "xsd:string", {"P3"}},
      {"ISAD20", "has physical characteristics", S::kIsadOnt, "E31", "xsd:string", {"P3"}},
      {"ISAD21", "has description date", S::kIsadOnt, "E31", "xsd:string", {"P3"}},
      {"ISAD22", "has last modification", S::kIsadOnt, "E31", "xsd:string", {"P3"}},
      {"ISAD23", "has predominant date", S::kIsadOnt, "E31", "xsd:string", {"P3"}},
      {"ISAD24", "has conditions governing reproduction", S::kIsadOnt, "E31", "xsd:string",
       {"P3"}},
      {"ISAD25", "has conditions governing use", S::kIsadOnt, "E31", "xsd:string", {"P3"}},
      {"ISAD26", "has immediate source of acquisition or transfer", S::kIsadOnt, "E31",
       "xsd:string", {"P3"}},
      {"ISAD27", "has accruals", S::kIsadOnt, "E31", "xsd:string", {"P3"}},
  };
  std::vector<PropertyDef> out;
  out.reserve(rows.size());
  for (const auto& row : rows) {
    Range range = std::string(row.range);
    if (auto type = parse_datatype(row.range)) range = *type;
    std::optional<std::string> inverse;
    if (row.inverse != nullptr) inverse = row.inverse;
    out.push_back({row.id, row.label, row.source, row.domain, range, row.parents, inverse});
  }
  return out;
}

}  // namespace detail

// The built-in ArchOnto schema. Constructed once, immutable afterwards.
inline const Schema& builtin_schema() {
  static const Schema schema(detail::builtin_classes(), detail::builtin_properties());
  return schema;
}

}  // namespace archonto

#endif  // ARCHONTO_SCHEMA_HPP_
