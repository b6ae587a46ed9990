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

// Rule-driven migration of resolved ISAD(G) records into an ArchOnto graph.
//
// Each rule runs once per selector instance (one per support term, per
// dimension, per creator ...). An instance has a binding frame: captured
// text in `values`, minted nodes in `nodes`. Node identity:
//
//   valued node of an E55 Type subclass   <base>/vocab/<Class>/<term>
//   {=V} node minted by the ISAD rule     <base>/<ref>/<Class>/<V>
//   first event hop off an anchor         <base>/<ref>/<Class>/<V>.<Prop>
//   anything else                         <base>/<ref>/<Class>/r<n>.<i>.<p>.<s>
//
// The event-hop form makes rules 7, 8 and 18 share one E12 Production and
// both rule 16 instances share one E65 Creation.

#ifndef ARCHONTO_MIGRATION_HPP_
#define ARCHONTO_MIGRATION_HPP_

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <regex>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "archonto/datetime.hpp"
#include "archonto/error.hpp"
#include "archonto/graph.hpp"
#include "archonto/isad.hpp"
#include "archonto/mdl.hpp"
#include "archonto/schema.hpp"
#include "archonto/vocabulary.hpp"

namespace archonto {

enum class Severity { kError, kWarning };

inline std::string_view to_string(Severity severity) {
  return severity == Severity::kError ? "error" : "warning";
}

struct MigrationIssue {
  std::string reference_code;
  Severity severity = Severity::kError;
  std::string message;

  friend bool operator==(const MigrationIssue&, const MigrationIssue&) = default;
};

struct TraceEntry {
  std::string reference_code;
  int rule_no = 0;
  std::size_t instance = 0;
  std::size_t triples = 0;  // new triples added by this instance
  bool skipped = false;

  friend bool operator==(const TraceEntry&, const TraceEntry&) = default;
};

struct MigrationOptions {
  std::string base_iri = std::string(kDefaultBaseIri);
  bool strict = false;
  bool fail_fast = false;
};

// One application of a rule: captured texts in selector order, plus the
// parent document node for Parent Record selectors.
struct RuleInstance {
  std::vector<std::string> values;
  std::optional<NodeRef> parent_node;
  std::map<std::string, std::string> literal_overrides;
};

class MigrationContext {
 public:
  MigrationContext(const IsadRecord& record, const Schema& schema,
                   const VocabularyRegistry& registry, const MigrationOptions& options)
      : record_(&record), schema_(&schema), registry_(&registry), options_(options),
        graph_(options.base_iri, schema) {
    graph_.set_strict(options.strict);
  }

  const IsadRecord& record() const { return *record_; }
  const std::string& ref() const { return record_->reference_code; }
  const Schema& schema() const { return *schema_; }
  const VocabularyRegistry& registry() const { return *registry_; }
  const MigrationOptions& options() const { return options_; }
  Graph& graph() { return graph_; }
  const Graph& graph() const { return graph_; }

  // Nodes bound by the ISAD rule, visible to every later rule.
  const std::map<std::string, NodeRef>& anchors() const { return anchors_; }
  bool anchors_bound() const { return anchors_bound_; }
  void bind_anchors(std::map<std::string, NodeRef> anchors) {
    anchors_ = std::move(anchors);
    anchors_bound_ = true;
  }

  const NodeRef& anchor(const std::string& name) const {
    auto it = anchors_.find(name);
    if (it == anchors_.end()) {
      throw Error(ErrorKind::kUnboundAnchor,
                  "anchor " + name + " is not bound for " + ref() + " (ISAD rule not applied)");
    }
    return it->second;
  }

  void issue(Severity severity, std::string message) {
    std::replace(message.begin(), message.end(), '\n', ' ');
    MigrationIssue entry{ref(), severity, std::move(message)};
    // Rules sharing a selector would otherwise repeat the same finding.
    if (std::find(issues_.begin(), issues_.end(), entry) == issues_.end()) {
      issues_.push_back(std::move(entry));
    }
  }
  const std::vector<MigrationIssue>& issues() const { return issues_; }
  std::vector<TraceEntry>& trace() { return trace_; }
  const std::vector<TraceEntry>& trace() const { return trace_; }

  // Raw date texts that failed to parse; routed to ISAD5 when 1.3 is blank.
  std::vector<std::string>& unparsed_dates() { return unparsed_dates_; }

 private:
  const IsadRecord* record_;
  const Schema* schema_;
  const VocabularyRegistry* registry_;
  MigrationOptions options_;
  Graph graph_;
  std::map<std::string, NodeRef> anchors_;
  bool anchors_bound_ = false;
  std::vector<MigrationIssue> issues_;
  std::vector<TraceEntry> trace_;
  std::vector<std::string> unparsed_dates_;
};

// The variable the ISAD rule binds to its E31 Document node.
inline std::string document_variable(const RuleSet& rules) {
  for (const auto& rule : rules.rules) {
    if (rule.selector.element != "ISAD") continue;
    for (const auto& path : rule.paths) {
      for (const auto& step : path) {
        if (step.binding == Binding::kAssign && step.id == "E31") return step.text;
      }
    }
  }
  return "D1";
}

namespace detail {

inline bool is_decimal(std::string_view text) {
  static const std::regex pattern(R"([+-]?(\d+(\.\d*)?|\.\d+))");
  return std::regex_match(text.begin(), text.end(), pattern);
}

struct ProductionDates {
  std::optional<std::string> start, end, single;
  std::string source;  // raw text, for reports
};

// Production date sub-fields, or element 1.3 when none is given. 1.3 is
// read as one date or two dates joined by '/', '..', an en dash or '-'.
inline ProductionDates production_dates(const IsadRecord& record) {
  ProductionDates out;
  auto take = [&](const char* key, std::optional<std::string>& slot) {
    if (record.has(key)) slot = std::string(trim(record.text(key)));
  };
  take("production_date_start", out.start);
  take("production_date_end", out.end);
  take("production_date_single", out.single);
  if (out.start || out.end || out.single || !record.has("1.3")) return out;
  const std::string dates(trim(record.text("1.3")));
  if (widen_date(dates, DateBound::kStart)) {
    out.single = dates;
    return out;
  }
  static const std::regex range(
      R"(^(\d{4}(?:-\d{2}){0,2}(?:T\d{2}:\d{2}:\d{2})?)\s*(?:/|\.\.|\xE2\x80\x93|-)\s*(\d{4}(?:-\d{2}){0,2}(?:T\d{2}:\d{2}:\d{2})?)$)");
  std::smatch m;
  if (std::regex_match(dates, m, range)) {
    out.start = m[1].str();
    out.end = m[2].str();
  }
  out.source = "1.3";
  return out;
}

inline std::optional<std::string> widen_or_report(MigrationContext& ctx, const std::string& raw,
                                                  DateBound bound, bool from_dates_element) {
  auto widened = widen_date(raw, bound);
  if (!widened) {
    if (from_dates_element) {
      ctx.issue(Severity::kWarning, "dates '" + raw + "' not machine-readable; kept as ISAD5");
    } else {
      ctx.issue(Severity::kError, "date '" + raw + "' is not YYYY, YYYY-MM, YYYY-MM-DD or a "
                                  "dateTime; routed to the ISAD fallback");
      ctx.unparsed_dates().push_back(raw);
    }
  }
  return widened;
}

inline std::vector<RuleInstance> text_instance(const IsadRecord& record, const char* key) {
  if (!record.has(key)) return {};
  return {RuleInstance{{std::string(trim(record.text(key)))}, {}, {}}};
}

inline std::vector<RuleInstance> term_instances(const IsadRecord& record, const char* key) {
  std::vector<RuleInstance> out;
  for (const auto& term : record.list<std::string>(key)) {
    out.push_back({{std::string(trim(term))}, {}, {}});
  }
  return out;
}

inline std::vector<RuleInstance> measure_instances(MigrationContext& ctx, DimensionKind kind,
                                                   std::size_t arity) {
  std::vector<RuleInstance> out;
  for (const auto& dim : ctx.record().list<Dimension>("dimensions")) {
    if (dim.kind != kind) continue;
    if (!is_decimal(dim.value)) {
      ctx.issue(Severity::kError, "dimension value '" + dim.value + "' is not a decimal");
      continue;
    }
    if (arity == 2 && dim.unit.empty()) {
      ctx.issue(Severity::kWarning, "dimension " + dim.value + " has no unit; skipped");
      continue;
    }
    RuleInstance instance{{dim.value}, {}, {}};
    if (arity == 2) instance.values.push_back(dim.unit);
    out.push_back(std::move(instance));
  }
  return out;
}

}  // namespace detail

// Instances of `selector` present on the context's record. Engine-side rule
// choice (title by type, date by shape) happens here.
inline std::vector<RuleInstance> selector_instances(MigrationContext& ctx,
                                                    const Selector& selector,
                                                    const std::string& document_var = "D1") {
  const auto& record = ctx.record();
  const auto& element = selector.element;
  const auto arity = selector.captures.size();
  const auto title_type = std::string(trim(record.text("title_type")));

  if (element == "ISAD") return {RuleInstance{}};
  if (element == "Description Level") return detail::text_instance(record, "1.4");
  if (element == "Reference Code") return detail::text_instance(record, "1.1");
  if (element == "Title") {
    return title_type.empty() ? detail::text_instance(record, "1.2") : std::vector<RuleInstance>{};
  }
  if (element == "Formal Title") {
    return title_type == "formal" ? detail::text_instance(record, "1.2")
                                  : std::vector<RuleInstance>{};
  }
  if (element == "Supplied Title") {
    return title_type == "supplied" ? detail::text_instance(record, "1.2")
                                    : std::vector<RuleInstance>{};
  }
  if (element == "Production Date") {
    const auto dates = detail::production_dates(record);
    const bool from_13 = dates.source == "1.3";
    if (from_13 && !dates.start && !dates.end && !dates.single) {
      ctx.issue(Severity::kWarning,
                "dates '" + record.text("1.3") + "' not machine-readable; kept as ISAD5");
      return {};
    }
    if (arity == 2) {
      if (!dates.start || !dates.end) return {};
      auto start = detail::widen_or_report(ctx, *dates.start, DateBound::kStart, from_13);
      auto end = detail::widen_or_report(ctx, *dates.end, DateBound::kEnd, from_13);
      if (!start || !end) return {};
      return {RuleInstance{{*start, *end}, {}, {}}};
    }
    std::optional<std::string> single;
    if (dates.single) {
      single = detail::widen_or_report(ctx, *dates.single, DateBound::kStart, from_13);
    } else if (dates.start && !dates.end) {
      single = detail::widen_or_report(ctx, *dates.start, DateBound::kStart, from_13);
    } else if (dates.end && !dates.start) {
      single = detail::widen_or_report(ctx, *dates.end, DateBound::kEnd, from_13);
    }
    if (!single) return {};
    return {RuleInstance{{*single}, {}, {}}};
  }
  if (element == "Dimension") return detail::measure_instances(ctx, DimensionKind::kDimension, arity);
  if (element == "Extension") return detail::measure_instances(ctx, DimensionKind::kExtension, arity);
  if (element == "Support") return detail::term_instances(record, "support");
  if (element == "Language") return detail::term_instances(record, "language");
  if (element == "Physical Location") return detail::text_instance(record, "physical_location");
  if (element == "Original Numbering") return detail::text_instance(record, "original_numbering");
  if (element == "Previous Location") return detail::text_instance(record, "previous_location");
  if (element == "Creation Date") {
    std::vector<RuleInstance> out;
    for (const char* key : {"description_creation_date", "description_last_modification"}) {
      if (!record.has(key)) continue;
      auto when = detail::widen_or_report(ctx, std::string(trim(record.text(key))),
                                          DateBound::kStart, false);
      if (!when) continue;
      RuleInstance instance{{*when}, {}, {}};
      if (std::string_view(key) == "description_last_modification") {
        instance.literal_overrides["Creation Date"] = "Last Modification";
      }
      out.push_back(std::move(instance));
    }
    return out;
  }
  if (element == "Parent Record") {
    if (!record.parent_reference) return {};
    const auto& parent = *record.parent_reference;
    NodeRef node{ctx.graph().node_iri(parent, "E31", document_var), "E31", std::nullopt};
    return {RuleInstance{{parent}, node, {}}};
  }
  if (element == "Creator") {
    std::vector<RuleInstance> out;
    for (const auto& creator : record.list<Creator>("creators")) {
      if (is_blank(creator.name)) {
        ctx.issue(Severity::kWarning, "creator without a name; skipped");
        continue;
      }
      if (arity == 2 && is_blank(creator.role)) {
        ctx.issue(Severity::kWarning, "creator '" + creator.name + "' has no role; skipped");
        continue;
      }
      RuleInstance instance{{std::string(trim(creator.name))}, {}, {}};
      if (arity == 2) instance.values.emplace_back(trim(creator.role));
      out.push_back(std::move(instance));
    }
    return out;
  }
  throw Error(ErrorKind::kSyntax, "no instances known for selector element '" + element + "'");
}

namespace detail {

struct Frame {
  std::map<std::string, std::string> values;
  std::map<std::string, NodeRef> nodes;
};

inline NodeRef mint_step(MigrationContext& ctx, const MdlRule& rule, std::size_t instance,
                         std::size_t path_index, std::size_t step_index, const PathStep& step,
                         const std::optional<std::string>& value,
                         const std::optional<std::string>& fresh_name, const PathStep* edge,
                         const std::optional<std::string>& anchor_before) {
  auto& graph = ctx.graph();
  const auto& schema = ctx.schema();
  if (value && schema.is_subclass(step.id, "E55")) {
    if (ctx.registry().contains(step.id, *value) == Membership::kNotMember) {
      const std::string message = "term '" + *value + "' is not in the " + step.id + " vocabulary";
      if (ctx.options().strict) throw Error(ErrorKind::kVocabulary, message);
      ctx.issue(Severity::kWarning, message);
    }
    return graph.mint_term(step.id, *value);
  }
  if (rule.selector.element == "ISAD" && fresh_name) {
    return graph.mint_node(ctx.ref(), step.id, *fresh_name, step.id, value);
  }
  if (!value && edge != nullptr && anchor_before && schema.is_subclass(step.id, "E5")) {
    return graph.mint_node(ctx.ref(), step.id, *anchor_before + "." + edge->id, step.id);
  }
  const std::string discriminator = "r" + std::to_string(rule.number) + "." +
                                    std::to_string(instance) + "." + std::to_string(path_index) +
                                    "." + std::to_string(step_index);
  return graph.mint_node(ctx.ref(), step.id, discriminator, step.id, value);
}

inline void walk_path(MigrationContext& ctx, const MdlRule& rule, std::size_t instance,
                      std::size_t path_index, const Path& path, Frame& frame,
                      const RuleInstance& bound) {
  auto& graph = ctx.graph();
  std::optional<NodeRef> current;
  const PathStep* edge = nullptr;
  std::optional<std::string> anchor_before;
  for (std::size_t i = 0; i < path.size(); ++i) {
    const auto& step = path[i];
    if (step.kind == StepKind::kPropertyEdge) {
      edge = &step;
      continue;
    }
    if (step.binding == Binding::kEmit) {
      if (auto it = frame.values.find(step.text); it != frame.values.end()) {
        const auto& range = ctx.schema().property_def(edge->id).range;
        const Datatype type =
            is_literal_range(range) ? std::get<Datatype>(range) : Datatype::kString;
        graph.add_triple(*current, edge->id, Literal{it->second, type});
      } else if (auto node = frame.nodes.find(step.text); node != frame.nodes.end()) {
        graph.add_triple(*current, edge->id, node->second);
      } else {
        throw Error(ErrorKind::kUnboundVariable, "rule " + std::to_string(rule.number) +
                                                     ": variable " + step.text + " has no value");
      }
      continue;
    }
    NodeRef node;
    std::optional<std::string> deref_anchor;
    if (step.binding == Binding::kDeref) {
      auto it = frame.nodes.find(step.text);
      if (it == frame.nodes.end()) {
        if (!ctx.anchors_bound()) ctx.anchor(step.text);
        throw Error(ErrorKind::kUnboundVariable, "rule " + std::to_string(rule.number) +
                                                     ": $" + step.text + " names no node");
      }
      node = it->second;
      if (ctx.anchors().contains(step.text) && ctx.anchors().at(step.text) == node) {
        deref_anchor = step.text;
      }
    } else {
      std::optional<std::string> value;
      std::optional<std::string> fresh;
      bool reused = false;
      if (step.binding == Binding::kAssign) {
        if (auto it = frame.nodes.find(step.text); it != frame.nodes.end()) {
          node = it->second;
          reused = true;
        } else if (auto v = frame.values.find(step.text); v != frame.values.end()) {
          value = v->second;
        } else {
          fresh = step.text;
        }
      } else if (step.binding == Binding::kAssignLiteral) {
        auto it = bound.literal_overrides.find(step.text);
        value = it == bound.literal_overrides.end() ? step.text : it->second;
      }
      if (!reused) {
        node = mint_step(ctx, rule, instance, path_index, i, step, value, fresh,
                         current ? edge : nullptr, anchor_before);
      }
      if (fresh) frame.nodes[*fresh] = node;
    }
    if (current && edge != nullptr) graph.add_triple(*current, edge->id, node);
    if (!current) graph.register_node(node);
    current = node;
    anchor_before = deref_anchor;
    edge = nullptr;
  }
}

}  // namespace detail

// Applies one rule to the context's record. A rule whose selector has no
// instance on the record is recorded as skipped.
inline void apply_rule(MigrationContext& ctx, const MdlRule& rule,
                       const std::string& document_var = "D1") {
  const bool is_anchor_rule = rule.selector.element == "ISAD";
  if (!is_anchor_rule && !ctx.anchors_bound()) {
    throw Error(ErrorKind::kUnboundAnchor, "rule " + std::to_string(rule.number) + " on " +
                                               ctx.ref() + " runs before the ISAD rule");
  }
  const auto instances = selector_instances(ctx, rule.selector, document_var);
  if (instances.empty()) {
    ctx.trace().push_back({ctx.ref(), rule.number, 0, 0, true});
    return;
  }
  for (std::size_t k = 0; k < instances.size(); ++k) {
    const auto& instance = instances[k];
    detail::Frame frame;
    if (!is_anchor_rule) frame.nodes = ctx.anchors();
    for (std::size_t c = 0; c < rule.selector.captures.size() && c < instance.values.size(); ++c) {
      frame.values[rule.selector.captures[c]] = instance.values[c];
    }
    if (instance.parent_node) {
      frame.nodes[rule.selector.captures.front()] = *instance.parent_node;
      frame.values.erase(rule.selector.captures.front());
    }
    const std::size_t before = ctx.graph().size();
    for (std::size_t p = 0; p < rule.paths.size(); ++p) {
      detail::walk_path(ctx, rule, k, p, rule.paths[p], frame, instance);
    }
    ctx.trace().push_back({ctx.ref(), rule.number, k, ctx.graph().size() - before, false});
    if (is_anchor_rule) ctx.bind_anchors(frame.nodes);
  }
}

// Verbatim ISAD Ontology triples for every non-blank mapped text element.
inline void attach_isad_fallback(const IsadRecord& record, Graph& graph, const NodeRef& document) {
  for (const auto& field : kFieldCatalog) {
    if (field.isad_property.empty() || field.kind != FieldKind::kText) continue;
    if (!record.has(field.key)) continue;
    graph.add_triple(document, field.isad_property, Literal{record.text(field.key), Datatype::kString});
  }
}

struct RecordMigration {
  Graph graph;
  std::vector<MigrationIssue> issues;
  std::vector<TraceEntry> trace;
};

// Runs the ISAD rule(s) first, then the rest in rule-number order, then the
// ISAD fallback.
inline RecordMigration migrate_record(const IsadRecord& record, const RuleSet& rules,
                                      const Schema& schema = builtin_schema(),
                                      const VocabularyRegistry& registry = builtin_vocabularies(),
                                      const MigrationOptions& options = {}) {
  MigrationContext ctx(record, schema, registry, options);
  for (const char* key : {"1.2", "1.4"}) {
    if (!record.has(key)) ctx.issue(Severity::kWarning, std::string("identity element ") + key + " is blank");
  }
  const auto document_var = document_variable(rules);
  std::vector<const MdlRule*> order;
  for (const auto& rule : rules.rules) order.push_back(&rule);
  std::stable_sort(order.begin(), order.end(), [](const MdlRule* a, const MdlRule* b) {
    const bool a_isad = a->selector.element == "ISAD";
    const bool b_isad = b->selector.element == "ISAD";
    if (a_isad != b_isad) return a_isad;
    return a->number < b->number;
  });
  for (const auto* rule : order) apply_rule(ctx, *rule, document_var);

  const auto& document = ctx.anchor(document_var);
  attach_isad_fallback(record, ctx.graph(), document);
  if (!record.has("1.3")) {
    for (const auto& raw : ctx.unparsed_dates()) {
      ctx.graph().add_triple(document, "ISAD5", Literal{raw, Datatype::kString});
    }
  }
  return {std::move(ctx.graph()), ctx.issues(), ctx.trace()};
}

struct MigrationResult {
  Graph graph;
  std::vector<MigrationIssue> issues;
  std::vector<TraceEntry> trace;
  std::size_t failed_records = 0;

  bool has_errors() const {
    return std::any_of(issues.begin(), issues.end(),
                       [](const auto& i) { return i.severity == Severity::kError; });
  }
};

// `REFCODE<TAB>SEVERITY<TAB>MESSAGE` lines.
inline std::string format_issues(const std::vector<MigrationIssue>& issues) {
  std::string out;
  for (const auto& issue : issues) {
    out += issue.reference_code + "\t" + std::string(to_string(issue.severity)) + "\t" +
           issue.message + "\n";
  }
  return out;
}

// Migrates every record in reference-code order and merges the subgraphs.
// A failing record contributes an error issue and no triples, unless
// fail_fast is set, in which case the error propagates.
inline MigrationResult migrate_tree(const RecordTree& tree, const RuleSet& rules,
                                    const Schema& schema = builtin_schema(),
                                    const VocabularyRegistry& registry = builtin_vocabularies(),
                                    const MigrationOptions& options = {}) {
  MigrationResult result{Graph(options.base_iri, schema), {}, {}, 0};
  result.graph.set_strict(options.strict);
  for (const auto& [ref, record] : tree.records()) {
    try {
      auto part = migrate_record(record, rules, schema, registry, options);
      result.graph.merge(part.graph);
      result.issues.insert(result.issues.end(), part.issues.begin(), part.issues.end());
      result.trace.insert(result.trace.end(), part.trace.begin(), part.trace.end());
      if (options.fail_fast) {
        for (const auto& issue : part.issues) {
          if (issue.severity == Severity::kError) {
            throw Error(ErrorKind::kParse, ref + ": " + issue.message);
          }
        }
      }
    } catch (const Error& e) {
      if (options.fail_fast) throw;
      ++result.failed_records;
      std::string message = std::string(to_string(e.kind())) + ": " + e.what();
      std::replace(message.begin(), message.end(), '\n', ' ');
      result.issues.push_back({ref, Severity::kError, std::move(message)});
    }
  }
  return result;
}

}  // namespace archonto

#endif  // ARCHONTO_MIGRATION_HPP_
