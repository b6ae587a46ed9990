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

// Mapping Description Language: rule model, parser, canonical renderer and
// the built-in ISAD(G) to ArchOnto rule set.
//
//   RULE <n>: <selector> => <path>; <path>; ...
//
// A selector is `ISAD{V}` or `$V->Element Name{C1, C2}`. A path alternates
// class nodes and property edges joined by `->`. Node forms:
//
//   E31 Document{=D1}      class node bound to variable D1
//   ARE5{='Reference Code'} class node carrying a literal value
//   $D1                    node held by variable D1
//   FT                     emission of D1's captured text (terminal only)
//
// `#` starts a comment that runs to the end of the line.

#ifndef ARCHONTO_MDL_HPP_
#define ARCHONTO_MDL_HPP_

#include <algorithm>
#include <array>
#include <cctype>
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

enum class StepKind { kClassNode, kPropertyEdge };

enum class Binding {
  kNone,
  kAssign,         // {=V}
  kAssignLiteral,  // {='text'}
  kDeref,          // $V
  kEmit,           // V
};

struct PathStep {
  StepKind kind = StepKind::kClassNode;
  std::string id;     // empty for kDeref and kEmit steps
  std::string label;  // schema label of id
  Binding binding = Binding::kNone;
  std::string text;   // variable name or literal

  friend bool operator==(const PathStep&, const PathStep&) = default;
};

using Path = std::vector<PathStep>;

struct Selector {
  std::string anchor;   // empty for the ISAD form
  std::string element;  // "ISAD" or an entry of kSelectorElements
  std::vector<std::string> captures;

  friend bool operator==(const Selector&, const Selector&) = default;
};

struct MdlRule {
  int number = 0;
  Selector selector;
  std::vector<Path> paths;

  friend bool operator==(const MdlRule&, const MdlRule&) = default;
};

struct RuleSet {
  std::vector<MdlRule> rules;

  const MdlRule* find(int number) const {
    for (const auto& rule : rules) {
      if (rule.number == number) return &rule;
    }
    return nullptr;
  }

  friend bool operator==(const RuleSet&, const RuleSet&) = default;
};

// Selector elements the migration engine can instantiate, with the number
// of capture variables each accepts.
struct SelectorElement {
  std::string_view name;
  std::size_t min_captures;
  std::size_t max_captures;
};

inline constexpr std::array kSelectorElements = {
    SelectorElement{"ISAD", 1, 1},
    SelectorElement{"Description Level", 1, 1},
    SelectorElement{"Reference Code", 1, 1},
    SelectorElement{"Title", 1, 1},
    SelectorElement{"Formal Title", 1, 1},
    SelectorElement{"Supplied Title", 1, 1},
    SelectorElement{"Production Date", 1, 2},
    SelectorElement{"Dimension", 1, 2},
    SelectorElement{"Extension", 1, 2},
    SelectorElement{"Support", 1, 1},
    SelectorElement{"Language", 1, 1},
    SelectorElement{"Physical Location", 1, 1},
    SelectorElement{"Original Numbering", 1, 1},
    SelectorElement{"Previous Location", 1, 1},
    SelectorElement{"Creation Date", 1, 1},
    SelectorElement{"Parent Record", 1, 1},
    SelectorElement{"Creator", 1, 2},
};

inline const SelectorElement* find_selector_element(std::string_view name) {
  for (const auto& element : kSelectorElements) {
    if (element.name == name) return &element;
  }
  return nullptr;
}

inline const std::set<std::string>& default_anchors() {
  static const std::set<std::string> anchors{"D1", "HMO1", "LO1"};
  return anchors;
}

// Variables bound by rule 1: its selector captures plus every {=V} target.
// Falls back to D1, HMO1, LO1 when the set has no rule 1.
inline std::set<std::string> rule_anchors(const RuleSet& rules) {
  const auto* first = rules.find(1);
  if (first == nullptr) return default_anchors();
  std::set<std::string> out(first->selector.captures.begin(), first->selector.captures.end());
  for (const auto& path : first->paths) {
    for (const auto& step : path) {
      if (step.binding == Binding::kAssign) out.insert(step.text);
    }
  }
  return out;
}

namespace detail {

inline bool is_identifier(std::string_view s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) {
    return false;
  }
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

struct Segment {
  std::string text;
  std::size_t offset;
};

class MdlParser {
 public:
  MdlParser(std::string_view text, const Schema& schema) : text_(text), schema_(schema) {}

  RuleSet parse_rules() {
    RuleSet out;
    std::map<int, std::size_t> offsets;
    skip_blank();
    while (!eof()) {
      const std::size_t start = pos_;
      MdlRule rule = parse_rule();
      if (!offsets.emplace(rule.number, start).second) {
        throw Error(ErrorKind::kSyntax, "duplicate rule number " + std::to_string(rule.number),
                    start);
      }
      out.rules.push_back(std::move(rule));
      skip_blank();
    }
    const auto anchors = rule_anchors(out);
    for (const auto& rule : out.rules) check_hygiene(rule, anchors, offsets.at(rule.number));
    return out;
  }

  Path parse_single_path() {
    skip_blank();
    bool terminated = false;
    auto segments = read_segments(terminated);
    Path path = build_path(segments);
    skip_blank();
    if (!eof()) fail(ErrorKind::kSyntax, "unexpected text after path", pos_);
    return path;
  }

 private:
  [[noreturn]] void fail(ErrorKind kind, const std::string& message, std::size_t offset) const {
    throw Error(kind, message + " at offset " + std::to_string(offset), offset);
  }

  bool eof() const { return pos_ >= text_.size(); }

  void skip_blank() {
    while (!eof()) {
      if (is_space(text_[pos_])) {
        ++pos_;
      } else if (text_[pos_] == '#') {
        while (!eof() && text_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  bool at_rule_header(std::size_t at) const {
    if (text_.substr(at, 4) != "RULE") return false;
    std::size_t i = at + 4;
    if (i >= text_.size() || !is_space(text_[i])) return false;
    while (i < text_.size() && is_space(text_[i])) ++i;
    return i < text_.size() && std::isdigit(static_cast<unsigned char>(text_[i]));
  }

  MdlRule parse_rule() {
    if (!at_rule_header(pos_)) fail(ErrorKind::kSyntax, "expected 'RULE <n>:'", pos_);
    pos_ += 4;
    skip_blank();
    const std::size_t number_at = pos_;
    std::size_t end = pos_;
    while (end < text_.size() && std::isdigit(static_cast<unsigned char>(text_[end]))) ++end;
    if (end - number_at > 6) fail(ErrorKind::kSyntax, "rule number too large", number_at);
    MdlRule rule;
    rule.number = std::stoi(std::string(text_.substr(number_at, end - number_at)));
    if (rule.number < 1) fail(ErrorKind::kSyntax, "rule numbers start at 1", number_at);
    pos_ = end;
    skip_blank();
    if (eof() || text_[pos_] != ':') fail(ErrorKind::kSyntax, "expected ':'", pos_);
    ++pos_;
    rule.selector = parse_selector();

    while (true) {
      skip_blank();
      if (eof() || at_rule_header(pos_)) break;
      bool terminated = false;
      auto segments = read_segments(terminated);
      rule.paths.push_back(build_path(segments));
      if (!terminated) break;
    }
    if (rule.paths.empty()) {
      fail(ErrorKind::kSyntax, "rule " + std::to_string(rule.number) + " has no paths", pos_);
    }
    return rule;
  }

  Selector parse_selector() {
    skip_blank();
    const std::size_t start = pos_;
    const auto arrow = text_.find("=>", pos_);
    if (arrow == std::string_view::npos) fail(ErrorKind::kSyntax, "expected '=>'", pos_);
    std::string raw;
    for (std::size_t i = pos_; i < arrow; ++i) {
      if (text_[i] == '#') {
        while (i < arrow && text_[i] != '\n') ++i;
        raw.push_back(' ');
      } else {
        raw.push_back(text_[i]);
      }
    }
    pos_ = arrow + 2;

    Selector selector;
    std::string_view body = trim(raw);
    if (!body.empty() && body.front() == '$') {
      const auto link = body.find("->");
      if (link == std::string_view::npos) fail(ErrorKind::kSyntax, "expected '->' in selector", start);
      selector.anchor = std::string(trim(body.substr(1, link - 1)));
      if (!is_identifier(selector.anchor)) {
        fail(ErrorKind::kSyntax, "bad selector anchor '" + selector.anchor + "'", start);
      }
      body = trim(body.substr(link + 2));
    }
    const auto open = body.find('{');
    if (open == std::string_view::npos || body.back() != '}') {
      fail(ErrorKind::kSyntax, "selector needs a capture list '{...}'", start);
    }
    selector.element = collapse_spaces(body.substr(0, open));
    const auto* element = find_selector_element(selector.element);
    if (element == nullptr) {
      fail(ErrorKind::kSyntax, "unknown selector element '" + selector.element + "'", start);
    }
    if ((selector.element == "ISAD") != selector.anchor.empty()) {
      fail(ErrorKind::kSyntax,
           selector.anchor.empty() ? "selector needs an anchor '$V->'"
                                   : "ISAD selector takes no anchor",
           start);
    }
    std::string_view list = body.substr(open + 1, body.size() - open - 2);
    std::size_t begin = 0;
    while (begin <= list.size()) {
      auto comma = list.find(',', begin);
      if (comma == std::string_view::npos) comma = list.size();
      std::string name(trim(list.substr(begin, comma - begin)));
      if (!is_identifier(name)) fail(ErrorKind::kSyntax, "bad capture variable '" + name + "'", start);
      if (std::find(selector.captures.begin(), selector.captures.end(), name) !=
          selector.captures.end()) {
        fail(ErrorKind::kSyntax, "capture variable '" + name + "' repeated", start);
      }
      selector.captures.push_back(std::move(name));
      begin = comma + 1;
    }
    if (selector.captures.size() < element->min_captures ||
        selector.captures.size() > element->max_captures) {
      fail(ErrorKind::kSyntax,
           "selector '" + selector.element + "' takes " + std::to_string(element->min_captures) +
               (element->min_captures == element->max_captures
                    ? ""
                    : "-" + std::to_string(element->max_captures)) +
               " capture(s)",
           start);
    }
    return selector;
  }

  // Reads `->`-separated segments up to `;`, the next rule header or EOF.
  std::vector<Segment> read_segments(bool& terminated) {
    std::vector<Segment> segments;
    std::string current;
    std::size_t current_at = pos_;
    bool in_quote = false;
    std::size_t quote_at = 0;
    terminated = false;
    while (true) {
      if (eof()) {
        if (in_quote) fail(ErrorKind::kSyntax, "unterminated literal", quote_at);
        break;
      }
      const char c = text_[pos_];
      if (in_quote) {
        current.push_back(c);
        if (c == '\'') in_quote = false;
        ++pos_;
        continue;
      }
      if (c == '\'') {
        in_quote = true;
        quote_at = pos_;
        current.push_back(c);
        ++pos_;
      } else if (c == '#') {
        while (!eof() && text_[pos_] != '\n') ++pos_;
        current.push_back(' ');
      } else if (c == '-' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '>') {
        segments.push_back({std::move(current), current_at});
        current.clear();
        pos_ += 2;
        current_at = pos_;
      } else if (c == ';') {
        ++pos_;
        terminated = true;
        break;
      } else if (c == '\n' && at_rule_header_after_newline()) {
        break;
      } else {
        current.push_back(c);
        ++pos_;
      }
    }
    segments.push_back({std::move(current), current_at});
    return segments;
  }

  bool at_rule_header_after_newline() const {
    std::size_t i = pos_ + 1;
    while (i < text_.size() && is_space(text_[i])) ++i;
    return at_rule_header(i);
  }

  Path build_path(const std::vector<Segment>& segments) {
    Path path;
    for (std::size_t i = 0; i < segments.size(); ++i) {
      const auto& segment = segments[i];
      const std::string_view raw = segment.text;
      const std::size_t at = segment.offset + (raw.size() - trim_left(raw).size());
      if (is_blank(raw)) fail(ErrorKind::kSyntax, "empty path step", segment.offset);
      if (i % 2 == 1) {
        path.push_back(parse_edge(trim(raw), at));
      } else {
        path.push_back(parse_node(trim(raw), at, i));
        if (path.back().binding == Binding::kEmit && i + 1 != segments.size()) {
          fail(ErrorKind::kSyntax, "emitted variable must end the path", at);
        }
      }
    }
    if (path.back().kind == StepKind::kPropertyEdge) {
      fail(ErrorKind::kSyntax, "path ends with a property edge", segments.back().offset);
    }
    return path;
  }

  static std::string_view trim_left(std::string_view s) {
    while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
    return s;
  }

  // Splits "ID label words" into id and label, checking the label.
  std::pair<std::string, std::string_view> split_head(std::string_view head) const {
    const auto space = std::find_if(head.begin(), head.end(), is_space);
    std::string id(head.begin(), space);
    return {id, trim(head.substr(id.size()))};
  }

  void check_label(std::string_view given, const std::string& expected, const std::string& id,
                   std::size_t at) const {
    if (!given.empty() && collapse_spaces(given) != expected) {
      fail(ErrorKind::kSyntax,
           "label '" + collapse_spaces(given) + "' does not match " + id + " " + expected, at);
    }
  }

  PathStep parse_edge(std::string_view raw, std::size_t at) const {
    if (raw.front() == '$' || raw.find('{') != std::string_view::npos) {
      fail(ErrorKind::kSyntax, "expected a property edge", at);
    }
    auto [id, label] = split_head(raw);
    const auto* property = schema_.find_property(id);
    if (property == nullptr) {
      if (schema_.find_class(id) != nullptr) {
        fail(ErrorKind::kSyntax, "two consecutive class nodes (" + id + ")", at);
      }
      fail(ErrorKind::kUnknownProperty, "unknown property '" + id + "'", at);
    }
    check_label(label, property->label, id, at);
    return {StepKind::kPropertyEdge, id, property->label, Binding::kNone, {}};
  }

  PathStep parse_node(std::string_view raw, std::size_t at, std::size_t index) const {
    if (raw.front() == '$') {
      std::string name(trim(raw.substr(1)));
      if (!is_identifier(name)) fail(ErrorKind::kSyntax, "bad variable '$" + name + "'", at);
      return {StepKind::kClassNode, {}, {}, Binding::kDeref, name};
    }
    std::string_view head = raw;
    PathStep step;
    step.kind = StepKind::kClassNode;
    const auto open = raw.find('{');
    if (open != std::string_view::npos) {
      if (raw.back() != '}') fail(ErrorKind::kSyntax, "text after binding", at);
      head = trim(raw.substr(0, open));
      const auto inner = trim(raw.substr(open + 1, raw.size() - open - 2));
      if (inner.empty() || inner.front() != '=') {
        fail(ErrorKind::kSyntax, "binding must be {=V} or {='literal'}", at + open);
      }
      const auto value = trim(inner.substr(1));
      if (!value.empty() && value.front() == '\'') {
        if (value.size() < 2 || value.back() != '\'' ||
            value.substr(1, value.size() - 2).find('\'') != std::string_view::npos) {
          fail(ErrorKind::kSyntax, "malformed literal", at + open);
        }
        step.binding = Binding::kAssignLiteral;
        step.text = std::string(value.substr(1, value.size() - 2));
      } else {
        if (!is_identifier(value)) {
          fail(ErrorKind::kSyntax, "bad variable '" + std::string(value) + "'", at + open);
        }
        step.binding = Binding::kAssign;
        step.text = std::string(value);
      }
      if (head.empty()) fail(ErrorKind::kSyntax, "binding without a class", at);
    }
    auto [id, label] = split_head(head);
    if (const auto* cls = schema_.find_class(id)) {
      check_label(label, cls->label, id, at);
      step.id = id;
      step.label = cls->label;
      return step;
    }
    if (schema_.find_property(id) != nullptr) {
      fail(ErrorKind::kSyntax, "two consecutive property edges (" + id + ")", at);
    }
    if (index > 0 && step.binding == Binding::kNone && label.empty() && is_identifier(id)) {
      return {StepKind::kClassNode, {}, {}, Binding::kEmit, id};
    }
    if (index == 0 && label.empty() && step.binding == Binding::kNone && is_identifier(id)) {
      fail(ErrorKind::kSyntax, "path must start with a class or $variable", at);
    }
    fail(ErrorKind::kUnknownClass, "unknown class '" + id + "'", at);
  }

  static void check_hygiene(const MdlRule& rule, const std::set<std::string>& anchors,
                            std::size_t offset) {
    std::set<std::string> known(rule.selector.captures.begin(), rule.selector.captures.end());
    if (!rule.selector.anchor.empty()) known.insert(rule.selector.anchor);
    if (rule.selector.element != "ISAD") known.insert(anchors.begin(), anchors.end());
    if (!rule.selector.anchor.empty() && !anchors.contains(rule.selector.anchor)) {
      throw Error(ErrorKind::kUnboundVariable,
                  "rule " + std::to_string(rule.number) + ": selector anchor $" +
                      rule.selector.anchor + " is not bound by rule 1",
                  offset);
    }
    for (const auto& path : rule.paths) {
      for (const auto& step : path) {
        if (step.binding == Binding::kAssign) {
          known.insert(step.text);
        } else if ((step.binding == Binding::kDeref || step.binding == Binding::kEmit) &&
                   !known.contains(step.text)) {
          throw Error(ErrorKind::kUnboundVariable,
                      "rule " + std::to_string(rule.number) + ": variable " + step.text +
                          " is used before it is bound",
                      offset);
        }
      }
    }
  }

  std::string_view text_;
  const Schema& schema_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline RuleSet parse_mdl(std::string_view text, const Schema& schema = builtin_schema()) {
  return detail::MdlParser(text, schema).parse_rules();
}

// Parses the text of one path, without variable hygiene checks.
inline Path parse_path(std::string_view text, const Schema& schema = builtin_schema()) {
  return detail::MdlParser(text, schema).parse_single_path();
}

inline std::string render_step(const PathStep& step) {
  switch (step.binding) {
    case Binding::kDeref:
      return "$" + step.text;
    case Binding::kEmit:
      return step.text;
    case Binding::kAssign:
      return step.id + " " + step.label + "{=" + step.text + "}";
    case Binding::kAssignLiteral:
      return step.id + " " + step.label + "{='" + step.text + "'}";
    case Binding::kNone:
      break;
  }
  return step.id + " " + step.label;
}

inline std::string render_path(const Path& path) {
  std::string out;
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (i > 0) out += " -> ";
    out += render_step(path[i]);
  }
  return out;
}

inline std::string render_selector(const Selector& selector) {
  std::string out;
  if (!selector.anchor.empty()) out = "$" + selector.anchor + "->";
  out += selector.element + "{";
  for (std::size_t i = 0; i < selector.captures.size(); ++i) {
    if (i > 0) out += ", ";
    out += selector.captures[i];
  }
  return out + "}";
}

inline std::string render_mdl(const RuleSet& rules) {
  std::string out;
  for (const auto& rule : rules.rules) {
    if (!out.empty()) out += "\n";
    out += "RULE " + std::to_string(rule.number) + ": " + render_selector(rule.selector) + " =>\n";
    for (const auto& path : rule.paths) out += "    " + render_path(path) + ";\n";
  }
  return out;
}

// Rules 4-6 reach DOP7 through a DOE8 String data object, and rules 9-10
// capture the unit next to the value. Rule 18 is the N-ary creator/role
// pattern.
inline constexpr std::string_view kBuiltinRulesText = R"mdl(
RULE 1: ISAD{D1} =>
    E31 Document{=D1};
    $D1 -> P128 is carried by -> E22 Human-Made Object{=HMO1};
    $D1 -> P67 refers to -> E33 Linguistic Object{=LO1};

RULE 2: $D1->Description Level{DL} =>
    $D1 -> ARP12 has level of description -> ARE1 Level of Description{=DL};

RULE 3: $D1->Reference Code{RC} =>
    $D1 -> P1 is identified by -> E42 Identifier{=RC} -> P2 has type -> ARE5 Identifier Type{='Reference Code'};

RULE 4: $D1->Title{T} =>
    $D1 -> P102 has title -> E35 Title -> L2DO hasValue -> DOE8 String -> DOP7 stringValue -> T;

RULE 5: $D1->Formal Title{FT} =>
    $D1 -> P102 has title -> ARE2 Formal Title -> L2DO hasValue -> DOE8 String -> DOP7 stringValue -> FT;

RULE 6: $D1->Supplied Title{ST} =>
    $D1 -> P102 has title -> ARE3 Supplied Title -> L2DO hasValue -> DOE8 String -> DOP7 stringValue -> ST;

RULE 7: $D1->Production Date{SD, ED} =>
    $HMO1 -> P108 was produced by -> E12 Production -> P4 has time-span -> E52 Time-Span -> P1 is identified by -> E41 Appellation -> L2DO hasValue -> DOE11 Interval{=INT1};
    $INT1 -> DOP6 startDateValue -> SD;
    $INT1 -> DOP2 endDateValue -> ED;

RULE 8: $D1->Production Date{PD} =>
    $HMO1 -> P108 was produced by -> E12 Production -> P4 has time-span -> E52 Time-Span -> P1 is identified by -> E41 Appellation -> L2DO hasValue -> DOE10 Instant -> DOP8 timestamp -> PD;

RULE 9: $D1->Dimension{DIM, UN} =>
    $HMO1 -> P43 has dimension -> E54 Dimension{=DIM1};
    $DIM1 -> P91 has unit -> E58 Measurement Unit{=UN};
    $DIM1 -> P90 has value -> DIM;

RULE 10: $D1->Extension{EXT, UN} =>
    $HMO1 -> P43 has dimension -> ARE4 Extension{=E1};
    $E1 -> P91 has unit -> E58 Measurement Unit{=UN};
    $E1 -> P90 has value -> EXT;

RULE 11: $D1->Support{SP} =>
    $HMO1 -> P45 consists of -> E57 Material{=SP};

RULE 12: $D1->Language{LG} =>
    $LO1 -> P72 has language -> E56 Language{=LG};

RULE 13: $D1->Physical Location{PL} =>
    $D1 -> P1 is identified by -> E42 Identifier{=PL} -> P2 has type -> ARE5 Identifier Type{='Physical Location'};

RULE 14: $D1->Original Numbering{ON} =>
    $D1 -> P1 is identified by -> E42 Identifier{=ON} -> P2 has type -> ARE5 Identifier Type{='Original Numbering'};

RULE 15: $D1->Previous Location{PreL} =>
    $D1 -> P1 is identified by -> E42 Identifier{=PreL} -> P2 has type -> ARE5 Identifier Type{='Previous Location'};

RULE 16: $D1->Creation Date{CD} =>
    $LO1 -> P94 was created by -> E65 Creation -> P4 has time-span -> E52 Time-Span -> P1 is identified by -> E41 Appellation -> L2DO hasValue -> DOE10 Instant{=INST1};
    $INST1 -> DOP8 timestamp -> CD;
    $INST1 -> P2 has type -> ARE6 Date Type{='Creation Date'};

RULE 17: $D1->Parent Record{PR} =>
    $D1 -> P165 incorporates -> $PR;

RULE 18: $D1->Creator{CN, CR} =>
    $HMO1 -> P108 was produced by -> E12 Production{=PROD1};
    PC14 Carried Out By{=PC1} -> P01 has domain -> $PROD1;
    $PC1 -> P02 has range -> E21 Person{=PER1} -> P1 is identified by -> E41 Appellation -> L2DO hasValue -> DOE17 PersonName -> DOP5 name -> CN;
    $PC1 -> P14.1 in the role of -> ARE8 Role Type{=CR};
)mdl";

inline const RuleSet& builtin_rules() {
  static const RuleSet rules = parse_mdl(kBuiltinRulesText);
  return rules;
}

}  // namespace archonto

#endif  // ARCHONTO_MDL_HPP_
