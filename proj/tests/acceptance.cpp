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

// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// non-zero when any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "archonto.hpp"
#include "golden.hpp"
#include "random_records.hpp"
#include "random_rules.hpp"

using namespace archonto;
using nlohmann::json;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool condition, const std::string& what) {
    if (!condition && ok) {
      ok = false;
      detail = what;
    }
  }
};

const std::string kBase = "https://example.org/archonto";

// ---------------------------------------------------------------------------

Outcome rule_coverage() {
  Outcome out;
  const auto start = std::chrono::steady_clock::now();
  for (const auto& c : testing::rule_cases()) {
    const auto got = testing::rule_delta(c.rule, c.record);
    out.require(got == c.expected, "rule " + std::to_string(c.rule) + " differs from its golden set");
  }
  out.require(testing::rule_cases().size() == 18, "golden sets do not cover 18 rules");
  const auto elapsed = std::chrono::steady_clock::now() - start;
  out.require(elapsed < std::chrono::seconds(1), "slower than 1 s");
  return out;
}

// ---------------------------------------------------------------------------

Outcome jim_reconstruction() {
  Outcome out;
  const auto start = std::chrono::steady_clock::now();
  const auto record = parse_record(json::parse(R"({
    "1.1": "PT/TT/JIM", "1.2": "Juízo da Índia e Mina", "title_type": "supplied",
    "1.3": "1700/1833", "1.4": "Fonds",
    "production_date_start": "1700", "production_date_end": "1833",
    "support": ["Paper"], "dimensions": [{"value": "30", "unit": "Centimeter"}],
    "5.4": "Publication notes", "description_creation_date": "2008-05-26"
  })"));
  const auto result = migrate_record(record, builtin_rules());
  const auto& g = result.graph;
  const std::string doc = kBase + "/PT%2FTT%2FJIM/E31/D1";
  const std::string hmo = kBase + "/PT%2FTT%2FJIM/E22/HMO1";
  const std::string lo = kBase + "/PT%2FTT%2FJIM/E33/LO1";
  auto cls = [&](const std::string& iri) {
    const auto* n = g.find_node(iri);
    return n ? n->asserted_class : std::string();
  };
  // Objects of `property` from `subject` whose class is `target`.
  auto hop = [&](const std::vector<std::string>& from, const std::string& property,
                 const std::string& target) {
    std::vector<std::string> to;
    for (const auto& s : from) {
      for (const auto& t : g.match(s, property)) {
        if (!t.has_literal() && cls(t.object_iri()) == target) to.push_back(t.object_iri());
      }
    }
    return to;
  };
  auto literal = [&](const std::vector<std::string>& from, const std::string& property) {
    std::vector<std::string> values;
    for (const auto& s : from) {
      for (const auto& t : g.match(s, property)) {
        if (t.has_literal()) values.push_back(t.literal().text);
      }
    }
    return values;
  };
  using V = std::vector<std::string>;

  out.require(hop({doc}, "P128", "E22") == V{hmo}, "P128 split");
  out.require(hop({doc}, "P67", "E33") == V{lo}, "P67 split");
  out.require(hop({doc}, "ARP12", "ARE1") == V{kBase + "/vocab/ARE1/Fonds"}, "ARP12 to ARE1");
  out.require(literal(hop(hop({doc}, "P102", "ARE3"), "L2DO", "DOE8"), "DOP7") ==
                  V{"Juízo da Índia e Mina"},
              "P102 to ARE3 to DOE8");
  {
    const auto ids = hop({doc}, "P1", "E42");
    bool found = false;
    for (const auto& id : ids) {
      found |= hop({id}, "P2", "ARE5") == V{kBase + "/vocab/ARE5/Reference%20Code"} &&
               g.find_node(id)->value == "PT/TT/JIM";
    }
    out.require(found, "P1 to E42 to P2 to ARE5 'Reference Code'");
  }
  out.require(hop({hmo}, "P45", "E57") == V{kBase + "/vocab/E57/Paper"}, "P45 to E57");
  {
    const auto dims = hop({hmo}, "P43", "E54");
    out.require(dims.size() == 1, "P43 to E54");
    out.require(literal(dims, "P90") == V{"30"}, "P90 value");
    out.require(hop(dims, "P91", "E58") == V{kBase + "/vocab/E58/Centimeter"}, "P91 unit");
  }
  {
    const auto instants =
        hop(hop(hop(hop({lo}, "P94", "E65"), "P4", "E52"), "P1", "E41"), "L2DO", "DOE10");
    out.require(instants.size() == 1, "P94 to E65 to P4 to E52 with a DOE10 instant");
    out.require(hop(instants, "P2", "ARE6") == V{kBase + "/vocab/ARE6/Creation%20Date"},
                "creation instant type");
    out.require(literal(instants, "DOP8") == V{"2008-05-26T00:00:00"}, "creation instant value");
  }
  {
    const auto intervals =
        hop(hop(hop(hop({hmo}, "P108", "E12"), "P4", "E52"), "P1", "E41"), "L2DO", "DOE11");
    out.require(literal(intervals, "DOP6") == V{"1700-01-01T00:00:00"} &&
                    literal(intervals, "DOP2") == V{"1833-12-31T23:59:59"},
                "production interval");
  }
  out.require(literal({doc}, "ISAD1") == V{"Juízo da Índia e Mina"}, "ISAD1 fallback");
  out.require(literal({doc}, "ISAD17") == V{"Publication notes"}, "ISAD17 fallback");
  const auto report = validate_graph(g);
  out.require(report.errors() == 0, "validation errors: " + format_findings_tsv(report));
  out.require(result.issues.empty(), "migration issues: " + format_issues(result.issues));
  out.require(std::chrono::steady_clock::now() - start < std::chrono::seconds(1), "slower than 1 s");
  return out;
}

// ---------------------------------------------------------------------------

std::vector<std::string> synthetic_corpus(std::size_t n, unsigned seed) {
  testing::RecordGenerator generator(seed);
  std::vector<std::string> lines;
  for (std::size_t i = 0; i < n; ++i) {
    char ref[32];
    std::snprintf(ref, sizeof ref, "PT/SYN/%03zu", i);
    std::string parent;
    if (i > 0) {
      char p[32];
      std::snprintf(p, sizeof p, "PT/SYN/%03zu", (i - 1) / 3);
      parent = p;
    }
    lines.push_back(generator.next(ref, parent).json.dump());
  }
  return lines;
}

std::string migrate_lines(const std::vector<std::string>& lines) {
  std::string text;
  for (const auto& line : lines) text += line + "\n";
  const auto tree = resolve_inheritance(parse_corpus(text));
  return serialize(migrate_tree(tree, builtin_rules()).graph);
}

Outcome determinism() {
  Outcome out;
  const auto start = std::chrono::steady_clock::now();
  auto lines = synthetic_corpus(100, 2026);
  const auto first = migrate_lines(lines);
  const auto second = migrate_lines(lines);
  out.require(!first.empty(), "empty output");
  out.require(first == second, "two runs differ");
  std::mt19937 rng(11);
  for (int i = 0; i < 3; ++i) {
    std::shuffle(lines.begin(), lines.end(), rng);
    out.require(migrate_lines(lines) == first, "shuffled input changes the output");
  }
  out.require(std::chrono::steady_clock::now() - start < std::chrono::seconds(5), "slower than 5 s");
  return out;
}

// ---------------------------------------------------------------------------

Outcome inheritance_oracle() {
  Outcome out;
  std::mt19937 rng(1000);
  const std::vector<std::string> keys = {"2.2", "3.1", "4.1", "4.3", "5.4"};
  auto below = [&](int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng); };
  for (int trial = 0; trial < 1000 && out.ok; ++trial) {
    const int n = 1 + below(200);
    std::vector<int> parent(n, -1), depth(n, 0);
    std::vector<IsadRecord> records(n);
    for (int i = 0; i < n; ++i) {
      if (i > 0 && below(8) != 0) {
        // Retry until the candidate keeps the depth within 6.
        for (int attempt = 0; attempt < 8; ++attempt) {
          const int p = below(i);
          if (depth[p] < 5) {
            parent[i] = p;
            depth[i] = depth[p] + 1;
            break;
          }
        }
      }
      auto& r = records[i];
      r.reference_code = "T" + std::to_string(i);
      r.fields["1.1"] = r.reference_code;
      if (parent[i] >= 0) r.parent_reference = "T" + std::to_string(parent[i]);
      for (const auto& key : keys) {
        switch (below(4)) {
          case 0: r.fields[key] = key + "/" + std::to_string(i); break;
          case 1: r.fields[key] = std::string("  "); break;  // blanked
          default: break;
        }
      }
    }
    const auto resolved = resolve_inheritance(RecordTree::build(records));
    for (int i = 0; i < n && out.ok; ++i) {
      // Root-to-leaf re-walk: the deepest ancestor-or-self holding a value.
      std::vector<int> chain;
      for (int c = i; c >= 0; c = parent[c]) chain.push_back(c);
      std::reverse(chain.begin(), chain.end());
      out.require(chain.size() <= 6, "generated forest is too deep");
      const auto& got = resolved.at("T" + std::to_string(i));
      for (const auto& key : keys) {
        int owner = -1;
        for (int c : chain) {
          auto it = records[c].fields.find(key);
          if (it != records[c].fields.end() && !is_blank_value(it->second)) owner = c;
        }
        if (owner < 0) {
          out.require(!got.has(key) && got.provenance.at(key) == Provenance{},
                      "T" + std::to_string(i) + " " + key + " should stay blank");
        } else {
          out.require(got.text(key) == key + "/" + std::to_string(owner),
                      "T" + std::to_string(i) + " " + key + " has the wrong value");
          const auto expected = owner == i ? Provenance::own()
                                           : Provenance::inherited("T" + std::to_string(owner));
          out.require(got.provenance.at(key) == expected,
                      "T" + std::to_string(i) + " " + key + " has the wrong provenance");
        }
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

Graph clean_graph(testing::RecordGenerator& generator, int trial) {
  const std::string root = "C" + std::to_string(trial);
  std::vector<json> records = {generator.next(root).json, generator.next(root + "/1", root).json,
                               generator.next(root + "/1/1", root + "/1").json};
  const char* levels[] = {"Fonds", "Series", "Item"};
  std::string text;
  for (int i = 0; i < 3; ++i) {
    records[i]["1.4"] = levels[i];
    text += records[i].dump() + "\n";
  }
  return migrate_tree(parse_corpus(text), builtin_rules()).graph;
}

Outcome validation_corruption() {
  Outcome out;
  testing::RecordGenerator generator(500);
  std::mt19937 rng(42);
  const auto& schema = builtin_schema();
  const auto registry = builtin_vocabularies();
  for (int trial = 0; trial < 500 && out.ok; ++trial) {
    auto g = clean_graph(generator, trial);
    const auto clean = validate_graph(g);
    out.require(clean.findings.empty(), "clean graph has findings: " + format_findings_tsv(clean));

    const std::vector<Triple> triples(g.triples().begin(), g.triples().end());
    std::vector<const NodeRef*> nodes;
    for (const auto& [iri, node] : g.nodes()) nodes.push_back(&node);
    auto pick = [&](std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); };

    const int kind = trial % 4;
    std::string expected;
    bool corrupted = false;
    for (int attempt = 0; attempt < 1000 && !corrupted; ++attempt) {
      const auto& t = triples[pick(triples.size())];
      switch (kind) {
        case 0: {  // move the triple to a subject outside the domain
          if (t.property == "ARP12" || t.property == "P165") break;
          const auto& domain = schema.property_def(t.property).domain;
          const auto* target = nodes[pick(nodes.size())];
          if (schema.is_subclass(target->asserted_class, domain)) break;
          Triple moved{target->iri, t.property, t.object};
          if (g.triples().contains(moved)) break;
          g.erase(t);
          g.insert_raw(moved);
          expected = std::string(finding::kDomain);
          corrupted = true;
          break;
        }
        case 1: {  // date-only lexical form
          if (!t.has_literal() || t.literal().datatype != Datatype::kDateTime) break;
          Triple bad{t.subject, t.property, Literal{t.literal().text.substr(0, 10), Datatype::kDateTime}};
          g.erase(t);
          g.insert_raw(bad);
          expected = std::string(finding::kLexical);
          corrupted = true;
          break;
        }
        case 2: {  // off-vocabulary term; level terms also drive nesting, so skip them
          if (t.has_literal() || t.property == "ARP12") break;
          const auto* object = g.find_node(t.object_iri());
          if (registry.find(object->asserted_class) == nullptr) break;
          NodeRef term{kBase + "/vocab/" + object->asserted_class + "/Klingon",
                       object->asserted_class, std::string("Klingon")};
          g.insert_raw_node(term);
          g.erase(t);
          g.insert_raw({t.subject, t.property, term.iri});
          expected = std::string(finding::kVocabulary);
          corrupted = true;
          break;
        }
        default: {  // second level of description
          if (t.property != "ARP12") break;
          const auto* level = g.find_node(t.object_iri());
          const std::string other = *level->value == "File" ? "Item" : "File";
          NodeRef term{kBase + "/vocab/ARE1/" + other, "ARE1", other};
          g.insert_raw_node(term);
          g.insert_raw({t.subject, "ARP12", term.iri});
          expected = std::string(finding::kLevelCardinality);
          corrupted = true;
          break;
        }
      }
    }
    out.require(corrupted, "trial " + std::to_string(trial) + " found nothing to corrupt");
    const auto report = validate_graph(g);
    out.require(report.codes() == std::set<std::string>{expected},
                "trial " + std::to_string(trial) + " expected only " + expected + ", got:\n" +
                    format_findings_tsv(report));
  }
  return out;
}

// ---------------------------------------------------------------------------

Outcome mdl_round_trip() {
  Outcome out;
  const auto& builtin = builtin_rules();
  out.require(parse_mdl(render_mdl(builtin)) == builtin, "built-in rules");
  testing::RuleGenerator generator(1000);
  std::size_t rules = 0;
  while (rules < 1000 && out.ok) {
    const auto set = generator.rule_set(10);
    rules += set.rules.size() - 1;
    const auto text = render_mdl(set);
    try {
      const auto parsed = parse_mdl(text);
      out.require(parsed == set, "random rules differ after parsing:\n" + text);
      out.require(render_mdl(parsed) == text, "render is not a fixed point:\n" + text);
    } catch (const Error& e) {
      out.require(false, std::string("random rules rejected: ") + e.what() + "\n" + text);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

Outcome stats_partition() {
  Outcome out;
  {
    const auto record = parse_record(json::parse(R"({"1.1":"PT/TT/JIM"})"));
    MigrationContext ctx(record, builtin_schema(), builtin_vocabularies(), {});
    apply_rule(ctx, *builtin_rules().find(1));
    const auto report = usage_report(ctx.graph());
    for (const char* id : {"E31", "E22", "E33", "P128", "P67"}) {
      out.require(report.count_of(id) == 1, std::string("rule 1 count of ") + id);
    }
    out.require(report.class_counts.size() == 3 && report.property_counts.size() == 2,
                "rule 1 produced extra ids");
  }
  testing::RecordGenerator generator(7);
  for (int i = 0; i < 50; ++i) {
    const auto g = clean_graph(generator, i);
    const auto report = usage_report(g);
    out.require(report.property_total() == g.size(), "ontology totals do not sum to the triples");
  }
  const auto lines = synthetic_corpus(100, 8);
  std::string text;
  for (const auto& line : lines) text += line + "\n";
  const auto g = migrate_tree(parse_corpus(text), builtin_rules()).graph;
  out.require(usage_report(g).property_total() == g.size(), "corpus totals");
  return out;
}

// ---------------------------------------------------------------------------

Outcome datetime_sweep() {
  Outcome out;
  // Brute force: walk the calendar day by day from 1 January of each year.
  for (int year : {1600, 1700, 1900, 2000}) {
    const int feb = (year % 400 == 0 || (year % 4 == 0 && year % 100 != 0)) ? 29 : 28;
    const int lengths[] = {31, feb, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
    std::set<std::pair<int, int>> real_days;
    int month = 1, day = 1;
    for (int ordinal = 0; ordinal < 365 + (feb == 29); ++ordinal) {
      real_days.emplace(month, day);
      if (++day > lengths[month - 1]) {
        day = 1;
        ++month;
      }
    }
    for (int m = 1; m <= 12; ++m) {
      for (int d = 28; d <= 31; ++d) {
        char text[32];
        std::snprintf(text, sizeof text, "%04d-%02d-%02dT00:00:00", year, m, d);
        out.require(validate_datetime(text) == real_days.contains({m, d}), text);
      }
    }
  }
  return out;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"rule-coverage", rule_coverage},
      {"jim-fonds-reconstruction", jim_reconstruction},
      {"determinism", determinism},
      {"inheritance-oracle", inheritance_oracle},
      {"validation-corruption", validation_corruption},
      {"mdl-round-trip", mdl_round_trip},
      {"stats-partition", stats_partition},
      {"datetime-sweep", datetime_sweep},
  };
  int failures = 0;
  for (const auto& [name, check] : criteria) {
    Outcome outcome;
    try {
      outcome = check();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    std::printf("%s %s\n", outcome.ok ? "PASS" : "FAIL", name.c_str());
    if (!outcome.ok) {
      std::printf("  %s\n", outcome.detail.c_str());
      ++failures;
    }
  }
  return failures == 0 ? 0 : 1;
}
