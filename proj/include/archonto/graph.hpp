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

// Output knowledge graph. Nodes carry an IRI, an asserted class and an
// optional value (exported as rdfs:label). Triples use set semantics and
// serialization is sorted, so equal graphs give equal bytes.

#ifndef ARCHONTO_GRAPH_HPP_
#define ARCHONTO_GRAPH_HPP_

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <variant>
#include <vector>

#include "archonto/error.hpp"
#include "archonto/schema.hpp"
#include "archonto/text.hpp"

namespace archonto {

inline constexpr std::string_view kDefaultBaseIri = "https://example.org/archonto/";
inline constexpr std::string_view kCrmNamespace = "http://www.cidoc-crm.org/cidoc-crm/";
inline constexpr std::string_view kRdfNamespace = "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
inline constexpr std::string_view kRdfsNamespace = "http://www.w3.org/2000/01/rdf-schema#";
inline constexpr std::string_view kXsdNamespace = "http://www.w3.org/2001/XMLSchema#";

struct Literal {
  std::string text;
  Datatype datatype = Datatype::kString;

  friend auto operator<=>(const Literal&, const Literal&) = default;
};

struct NodeRef {
  std::string iri;
  std::string asserted_class;
  std::optional<std::string> value;

  friend bool operator==(const NodeRef&, const NodeRef&) = default;
};

// Object of a triple: a node IRI or a literal.
using Object = std::variant<std::string, Literal>;

struct Triple {
  std::string subject;
  std::string property;
  Object object;

  bool has_literal() const { return std::holds_alternative<Literal>(object); }
  const std::string& object_iri() const { return std::get<std::string>(object); }
  const Literal& literal() const { return std::get<Literal>(object); }

  friend auto operator<=>(const Triple&, const Triple&) = default;
};

enum class Format { kNTriples, kTurtle };

// Strips trailing slashes; rejects text that cannot head an absolute IRI.
inline std::string normalize_base_iri(std::string_view base) {
  std::string out(trim(base));
  while (!out.empty() && out.back() == '/') out.pop_back();
  const auto colon = out.find(':');
  bool ok = colon != std::string::npos && colon > 0 &&
            std::isalpha(static_cast<unsigned char>(out[0]));
  for (char c : out) {
    if (static_cast<unsigned char>(c) <= 0x20 || c == '<' || c == '>' || c == '"' || c == '{' ||
        c == '}' || c == '|' || c == '\\' || c == '^' || c == '`') {
      ok = false;
    }
  }
  if (!ok) throw Error(ErrorKind::kParse, "invalid base IRI '" + std::string(base) + "'");
  return out;
}

class Graph {
 public:
  explicit Graph(std::string_view base_iri = kDefaultBaseIri,
                 const Schema& schema = builtin_schema())
      : schema_(&schema), base_(normalize_base_iri(base_iri)) {}

  const Schema& schema() const { return *schema_; }
  const std::string& base_iri() const { return base_; }

  void set_strict(bool strict) { strict_ = strict; }
  bool strict() const { return strict_; }

  // <base>/<percent-encoded record_ref>/<role>/<discriminator>
  std::string node_iri(std::string_view record_ref, std::string_view role,
                       std::string_view discriminator) const {
    if (is_blank(record_ref)) throw Error(ErrorKind::kParse, "empty record reference");
    return base_ + "/" + percent_encode(record_ref) + "/" + percent_encode(role) + "/" +
           percent_encode(discriminator);
  }

  // <base>/vocab/<class>/<percent-encoded term>
  std::string term_iri(std::string_view class_id, std::string_view term) const {
    return base_ + "/vocab/" + percent_encode(class_id) + "/" + percent_encode(term);
  }

  const NodeRef& mint_node(std::string_view record_ref, std::string_view role,
                           std::string_view discriminator, std::string_view asserted_class,
                           std::optional<std::string> value = std::nullopt) {
    return register_node(
        {node_iri(record_ref, role, discriminator), std::string(asserted_class), std::move(value)});
  }

  // A corpus-wide individual for a controlled term.
  const NodeRef& mint_term(std::string_view class_id, std::string_view term) {
    return register_node(
        {term_iri(class_id, term), std::string(class_id), std::string(term)});
  }

  const NodeRef& register_node(NodeRef node) {
    schema_->class_def(node.asserted_class);
    return insert_node(std::move(node));
  }

  bool add_triple(const NodeRef& subject, std::string_view property, const NodeRef& object) {
    check_property(property, /*literal=*/false, {});
    require_indexed(subject);
    require_indexed(object);
    return triples_.insert({subject.iri, std::string(property), object.iri}).second;
  }

  bool add_triple(const NodeRef& subject, std::string_view property, Literal literal) {
    check_property(property, /*literal=*/true, literal.datatype);
    require_indexed(subject);
    return triples_.insert({subject.iri, std::string(property), std::move(literal)}).second;
  }

  // Loader entry points: no schema checks, unknown ids allowed.
  void insert_raw_node(NodeRef node) { insert_node(std::move(node)); }
  bool insert_raw(Triple triple) { return triples_.insert(std::move(triple)).second; }
  bool erase(const Triple& triple) { return triples_.erase(triple) > 0; }
  void erase_node(std::string_view iri) {
    auto it = nodes_.find(iri);
    if (it != nodes_.end()) nodes_.erase(it);
  }

  // Set union. Conflicting node definitions raise kNodeConflict.
  void merge(const Graph& other) {
    for (const auto& [iri, node] : other.nodes_) {
      auto it = nodes_.find(iri);
      if (it != nodes_.end() && !(it->second == node)) insert_node(node);  // throws
    }
    for (const auto& [iri, node] : other.nodes_) insert_node(node);
    triples_.insert(other.triples_.begin(), other.triples_.end());
  }

  const std::set<Triple>& triples() const { return triples_; }
  const std::map<std::string, NodeRef, std::less<>>& nodes() const { return nodes_; }
  std::size_t size() const { return triples_.size(); }
  bool empty() const { return triples_.empty() && nodes_.empty(); }

  const NodeRef* find_node(std::string_view iri) const {
    auto it = nodes_.find(iri);
    return it == nodes_.end() ? nullptr : &it->second;
  }

  std::vector<Triple> match(std::optional<std::string_view> subject,
                            std::optional<std::string_view> property) const {
    std::vector<Triple> out;
    for (const auto& t : triples_) {
      if (subject && t.subject != *subject) continue;
      if (property && t.property != *property) continue;
      out.push_back(t);
    }
    return out;
  }

  std::string class_iri(std::string_view id) const { return term_for(id, true); }
  std::string property_iri(std::string_view id) const { return term_for(id, false); }
  std::string ontology_namespace() const { return base_ + "/ontology/"; }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.base_ == b.base_ && a.nodes_ == b.nodes_ && a.triples_ == b.triples_;
  }

 private:
  const NodeRef& insert_node(NodeRef node) {
    auto [it, inserted] = nodes_.try_emplace(node.iri, node);
    if (!inserted && !(it->second == node)) {
      throw Error(ErrorKind::kNodeConflict,
                  "node " + node.iri + " already minted as " + it->second.asserted_class +
                      (it->second.value ? " '" + *it->second.value + "'" : std::string()) +
                      ", not " + node.asserted_class +
                      (node.value ? " '" + *node.value + "'" : std::string()));
    }
    return it->second;
  }

  void require_indexed(const NodeRef& node) {
    if (!nodes_.contains(node.iri)) register_node(node);
  }

  void check_property(std::string_view property, bool literal, Datatype datatype) const {
    const auto& def = schema_->property_def(property);
    if (!strict_) return;
    if (is_literal_range(def.range) != literal) {
      throw Error(ErrorKind::kRange, "property " + def.id + " expects " + to_string(def.range) +
                                         (literal ? ", got a literal" : ", got a node"));
    }
    if (literal && std::get<Datatype>(def.range) != datatype) {
      throw Error(ErrorKind::kRange, "property " + def.id + " expects " + to_string(def.range) +
                                         ", got " + std::string(to_string(datatype)));
    }
  }

  std::string term_for(std::string_view id, bool is_class) const {
    std::optional<SourceOntology> source;
    std::string label;
    if (is_class) {
      if (const auto* c = schema_->find_class(id)) source = c->source, label = c->label;
    } else if (const auto* p = schema_->find_property(id)) {
      source = p->source, label = p->label;
    }
    if (source == SourceOntology::kCidoc) {
      std::replace(label.begin(), label.end(), ' ', '_');
      return std::string(kCrmNamespace) + std::string(id) + "_" + percent_encode_label(label);
    }
    return ontology_namespace() + percent_encode(id);
  }

  static std::string percent_encode_label(std::string_view label) {
    std::string out;
    for (char c : label) {
      // CRM labels keep hyphen, underscore and dot; everything else is escaped.
      if (std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '_' || c == '.') {
        out.push_back(c);
      } else {
        out += percent_encode(std::string_view(&c, 1));
      }
    }
    return out;
  }

  const Schema* schema_;
  std::string base_;
  bool strict_ = false;
  std::map<std::string, NodeRef, std::less<>> nodes_;
  std::set<Triple> triples_;
};

// ---------------------------------------------------------------------------
// Serialization

namespace detail {

inline std::string escape_literal(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

inline std::string datatype_iri(Datatype type) {
  switch (type) {
    case Datatype::kString: return std::string(kXsdNamespace) + "string";
    case Datatype::kDateTime: return std::string(kXsdNamespace) + "dateTime";
    case Datatype::kDecimal: return std::string(kXsdNamespace) + "decimal";
  }
  return {};
}

// One statement with full IRIs in its three slots, before formatting.
struct Statement {
  std::string subject;
  std::string predicate;
  std::string object;  // IRI, or lexical form for literals
  std::optional<Datatype> datatype;

  friend auto operator<=>(const Statement&, const Statement&) = default;
};

inline std::vector<Statement> statements(const Graph& graph) {
  std::vector<Statement> out;
  out.reserve(graph.size() + graph.nodes().size() * 2);
  const std::string rdf_type = std::string(kRdfNamespace) + "type";
  const std::string rdfs_label = std::string(kRdfsNamespace) + "label";
  for (const auto& [iri, node] : graph.nodes()) {
    out.push_back({iri, rdf_type, graph.class_iri(node.asserted_class), std::nullopt});
    if (node.value) out.push_back({iri, rdfs_label, *node.value, Datatype::kString});
  }
  for (const auto& t : graph.triples()) {
    if (t.has_literal()) {
      out.push_back(
          {t.subject, graph.property_iri(t.property), t.literal().text, t.literal().datatype});
    } else {
      out.push_back({t.subject, graph.property_iri(t.property), t.object_iri(), std::nullopt});
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Prefixed name when the local part is a safe PN_LOCAL, else <iri>.
inline std::string turtle_term(std::string_view iri,
                               const std::vector<std::pair<std::string, std::string>>& prefixes) {
  for (const auto& [prefix, ns] : prefixes) {
    if (!iri.starts_with(ns)) continue;
    const auto local = iri.substr(ns.size());
    const bool safe =
        !local.empty() && local.back() != '.' && local.front() != '.' &&
        local.front() != '-' &&
        std::all_of(local.begin(), local.end(), [](char c) {
          return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == '.';
        });
    if (safe) return prefix + ":" + std::string(local);
  }
  return "<" + std::string(iri) + ">";
}

}  // namespace detail

inline std::string serialize(const Graph& graph, Format format = Format::kNTriples) {
  const auto rows = detail::statements(graph);
  std::string out;
  if (format == Format::kNTriples) {
    for (const auto& s : rows) {
      out += "<" + s.subject + "> <" + s.predicate + "> ";
      if (s.datatype) {
        out += "\"" + detail::escape_literal(s.object) + "\"^^<" + detail::datatype_iri(*s.datatype) +
               ">";
      } else {
        out += "<" + s.object + ">";
      }
      out += " .\n";
    }
    return out;
  }
  // Sorted by prefix name.
  const std::vector<std::pair<std::string, std::string>> prefixes = {
      {"ao", graph.ontology_namespace()},
      {"crm", std::string(kCrmNamespace)},
      {"rdf", std::string(kRdfNamespace)},
      {"rdfs", std::string(kRdfsNamespace)},
      {"xsd", std::string(kXsdNamespace)},
  };
  for (const auto& [prefix, ns] : prefixes) out += "@prefix " + prefix + ": <" + ns + "> .\n";
  if (!rows.empty()) out += "\n";
  for (const auto& s : rows) {
    out += "<" + s.subject + "> " + detail::turtle_term(s.predicate, prefixes) + " ";
    if (s.datatype) {
      out += "\"" + detail::escape_literal(s.object) + "\"^^" +
             detail::turtle_term(detail::datatype_iri(*s.datatype), prefixes);
    } else {
      out += detail::turtle_term(s.object, prefixes);
    }
    out += " .\n";
  }
  return out;
}

// ---------------------------------------------------------------------------
// N-Triples loading

namespace detail {

inline void append_utf8(std::string& out, std::uint32_t cp) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

class NTriplesLine {
 public:
  NTriplesLine(std::string_view line, std::size_t line_no) : s_(line), line_no_(line_no) {}

  std::string iri() {
    skip();
    expect('<');
    const auto end = s_.find('>', pos_);
    if (end == std::string_view::npos) fail("unterminated IRI");
    std::string out(s_.substr(pos_, end - pos_));
    pos_ = end + 1;
    return out;
  }

  bool at_literal() {
    skip();
    return pos_ < s_.size() && s_[pos_] == '"';
  }

  // Returns lexical form and datatype IRI (empty for plain or tagged).
  std::pair<std::string, std::string> literal() {
    skip();
    expect('"');
    std::string text;
    while (true) {
      if (pos_ >= s_.size()) fail("unterminated literal");
      const char c = s_[pos_++];
      if (c == '"') break;
      if (c != '\\') {
        text.push_back(c);
        continue;
      }
      if (pos_ >= s_.size()) fail("dangling escape");
      const char e = s_[pos_++];
      switch (e) {
        case 'n': text.push_back('\n'); break;
        case 'r': text.push_back('\r'); break;
        case 't': text.push_back('\t'); break;
        case 'b': text.push_back('\b'); break;
        case 'f': text.push_back('\f'); break;
        case '"': text.push_back('"'); break;
        case '\'': text.push_back('\''); break;
        case '\\': text.push_back('\\'); break;
        case 'u':
        case 'U': {
          const std::size_t width = e == 'u' ? 4 : 8;
          if (pos_ + width > s_.size()) fail("short unicode escape");
          std::uint32_t cp = 0;
          for (std::size_t i = 0; i < width; ++i) {
            const char h = s_[pos_++];
            cp <<= 4;
            if (h >= '0' && h <= '9') cp |= h - '0';
            else if (h >= 'a' && h <= 'f') cp |= h - 'a' + 10;
            else if (h >= 'A' && h <= 'F') cp |= h - 'A' + 10;
            else fail("bad unicode escape");
          }
          append_utf8(text, cp);
          break;
        }
        default:
          fail("unknown escape");
      }
    }
    std::string datatype;
    if (s_.substr(pos_, 2) == "^^") {
      pos_ += 2;
      datatype = iri();
    } else if (pos_ < s_.size() && s_[pos_] == '@') {
      while (pos_ < s_.size() && !is_space(s_[pos_]) && s_[pos_] != '.') ++pos_;
    }
    return {std::move(text), std::move(datatype)};
  }

  void finish() {
    skip();
    expect('.');
    skip();
    if (pos_ < s_.size() && s_[pos_] != '#') fail("trailing text");
  }

  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorKind::kParse,
                "line " + std::to_string(line_no_) + ", column " + std::to_string(pos_ + 1) +
                    ": " + why,
                line_no_);
  }

 private:
  void skip() {
    while (pos_ < s_.size() && is_space(s_[pos_])) ++pos_;
  }
  void expect(char c) {
    if (pos_ >= s_.size() || s_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::string_view s_;
  std::size_t line_no_;
  std::size_t pos_ = 0;
};

// Maps an ontology IRI back to its identifier. Unknown namespaces keep the
// full IRI, which no schema id can equal.
inline std::string term_id(std::string_view iri) {
  if (iri.starts_with(kCrmNamespace)) {
    auto local = iri.substr(kCrmNamespace.size());
    return std::string(local.substr(0, local.find('_')));
  }
  const auto at = iri.rfind("/ontology/");
  if (at != std::string_view::npos) return std::string(iri.substr(at + 10));
  return std::string(iri);
}

}  // namespace detail

// Reads N-Triples as written by serialize(). rdf:type lines give each node
// its asserted class and rdfs:label lines its value.
inline Graph parse_ntriples(std::string_view text, std::string_view base_iri = kDefaultBaseIri,
                            const Schema& schema = builtin_schema()) {
  Graph graph(base_iri, schema);
  const std::string rdf_type = std::string(kRdfNamespace) + "type";
  const std::string rdfs_label = std::string(kRdfsNamespace) + "label";
  std::map<std::string, std::string> classes;
  std::map<std::string, std::string> labels;
  std::vector<Triple> triples;
  std::size_t line_no = 0;
  for (auto line : split_lines(text)) {
    ++line_no;
    if (is_blank(line) || trim(line).front() == '#') continue;
    detail::NTriplesLine reader(line, line_no);
    const auto subject = reader.iri();
    const auto predicate = reader.iri();
    if (reader.at_literal()) {
      auto [lexical, datatype_iri] = reader.literal();
      reader.finish();
      if (predicate == rdfs_label) {
        labels[subject] = std::move(lexical);
        continue;
      }
      Datatype datatype = Datatype::kString;
      if (!datatype_iri.empty()) {
        if (!datatype_iri.starts_with(kXsdNamespace)) reader.fail("unsupported datatype");
        auto tag = parse_datatype("xsd:" + datatype_iri.substr(kXsdNamespace.size()));
        if (!tag) reader.fail("unsupported datatype " + datatype_iri);
        datatype = *tag;
      }
      triples.push_back({subject, detail::term_id(predicate), Literal{std::move(lexical), datatype}});
    } else {
      auto object = reader.iri();
      reader.finish();
      if (predicate == rdf_type) {
        auto [it, inserted] = classes.emplace(subject, detail::term_id(object));
        if (!inserted && it->second != detail::term_id(object)) {
          reader.fail("node " + subject + " has two types");
        }
        continue;
      }
      triples.push_back({subject, detail::term_id(predicate), std::move(object)});
    }
  }
  for (const auto& [iri, cls] : classes) {
    NodeRef node{iri, cls, std::nullopt};
    if (auto it = labels.find(iri); it != labels.end()) node.value = it->second;
    graph.insert_raw_node(std::move(node));
  }
  for (auto& t : triples) graph.insert_raw(std::move(t));
  return graph;
}

}  // namespace archonto

#endif  // ARCHONTO_GRAPH_HPP_
