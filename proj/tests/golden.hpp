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

// Hand-written expected triples for each built-in rule, applied to a record
// with reference code "R" next to rule 1 only. IRIs are shortened: the
// default base is dropped, "V/" stands for the vocabulary namespace.

#ifndef ARCHONTO_TESTS_GOLDEN_HPP_
#define ARCHONTO_TESTS_GOLDEN_HPP_

#include <set>
#include <string>
#include <vector>

#include "archonto/migration.hpp"

namespace archonto::testing {

struct RuleCase {
  int rule;
  std::string record;  // one JSON object
  std::set<std::string> expected;
};

inline std::string shorten(const std::string& iri) {
  const std::string base = std::string(kDefaultBaseIri);
  const std::string vocab = base + "vocab/";
  if (iri.starts_with(vocab)) return "V/" + iri.substr(vocab.size());
  if (iri.starts_with(base)) return iri.substr(base.size());
  return iri;
}

inline std::string describe(const Triple& t) {
  std::string object;
  if (t.has_literal()) {
    object = "\"" + t.literal().text + "\"^^" + std::string(to_string(t.literal().datatype));
  } else {
    object = shorten(t.object_iri());
  }
  return shorten(t.subject) + " " + t.property + " " + object;
}

// Triples rule `number` adds on top of rule 1 for the given record.
inline std::set<std::string> rule_delta(int number, const std::string& record_json) {
  const auto record = parse_record(nlohmann::json::parse(record_json));
  const auto& builtin = builtin_rules();
  const RuleSet base{{*builtin.find(1)}};
  const RuleSet with{{*builtin.find(1), *builtin.find(number)}};
  const auto after = migrate_record(record, with).graph;
  // Rule 1 is measured against the verbatim ISAD triples alone.
  const auto before = number == 1 ? Graph() : migrate_record(record, base).graph;
  std::set<std::string> out;
  for (const auto& t : after.triples()) {
    if (number == 1 && t.property.starts_with("ISAD")) continue;
    if (!before.triples().contains(t)) out.insert(describe(t));
  }
  return out;
}

inline const std::vector<RuleCase>& rule_cases() {
  static const std::vector<RuleCase> cases = {
      {1, R"({"1.1":"R"})", {"R/E31/D1 P128 R/E22/HMO1", "R/E31/D1 P67 R/E33/LO1"}},
      {2, R"({"1.1":"R","1.4":"Fonds"})", {"R/E31/D1 ARP12 V/ARE1/Fonds"}},
      {3,
       R"({"1.1":"R"})",
       {"R/E31/D1 P1 R/E42/r3.0.0.2", "R/E42/r3.0.0.2 P2 V/ARE5/Reference%20Code"}},
      {4,
       R"({"1.1":"R","1.2":"Autos"})",
       {"R/E31/D1 P102 R/E35/r4.0.0.2", "R/E35/r4.0.0.2 L2DO R/DOE8/r4.0.0.4",
        "R/DOE8/r4.0.0.4 DOP7 \"Autos\"^^xsd:string"}},
      {5,
       R"({"1.1":"R","1.2":"Autos","title_type":"formal"})",
       {"R/E31/D1 P102 R/ARE2/r5.0.0.2", "R/ARE2/r5.0.0.2 L2DO R/DOE8/r5.0.0.4",
        "R/DOE8/r5.0.0.4 DOP7 \"Autos\"^^xsd:string"}},
      {6,
       R"({"1.1":"R","1.2":"Autos","title_type":"supplied"})",
       {"R/E31/D1 P102 R/ARE3/r6.0.0.2", "R/ARE3/r6.0.0.2 L2DO R/DOE8/r6.0.0.4",
        "R/DOE8/r6.0.0.4 DOP7 \"Autos\"^^xsd:string"}},
      {7,
       R"({"1.1":"R","production_date_start":"1700","production_date_end":"1833"})",
       {"R/E22/HMO1 P108 R/E12/HMO1.P108", "R/E12/HMO1.P108 P4 R/E52/r7.0.0.4",
        "R/E52/r7.0.0.4 P1 R/E41/r7.0.0.6", "R/E41/r7.0.0.6 L2DO R/DOE11/r7.0.0.8",
        "R/DOE11/r7.0.0.8 DOP6 \"1700-01-01T00:00:00\"^^xsd:dateTime",
        "R/DOE11/r7.0.0.8 DOP2 \"1833-12-31T23:59:59\"^^xsd:dateTime"}},
      {8,
       R"({"1.1":"R","production_date_single":"1813-07-12"})",
       {"R/E22/HMO1 P108 R/E12/HMO1.P108", "R/E12/HMO1.P108 P4 R/E52/r8.0.0.4",
        "R/E52/r8.0.0.4 P1 R/E41/r8.0.0.6", "R/E41/r8.0.0.6 L2DO R/DOE10/r8.0.0.8",
        "R/DOE10/r8.0.0.8 DOP8 \"1813-07-12T00:00:00\"^^xsd:dateTime"}},
      {9,
       R"({"1.1":"R","dimensions":[{"value":"12.5","unit":"Centimeter"}]})",
       {"R/E22/HMO1 P43 R/E54/r9.0.0.2", "R/E54/r9.0.0.2 P91 V/E58/Centimeter",
        "R/E54/r9.0.0.2 P90 \"12.5\"^^xsd:decimal"}},
      {10,
       R"({"1.1":"R","dimensions":[{"value":"3","unit":"Pack","kind":"extension"}]})",
       {"R/E22/HMO1 P43 R/ARE4/r10.0.0.2", "R/ARE4/r10.0.0.2 P91 V/E58/Pack",
        "R/ARE4/r10.0.0.2 P90 \"3\"^^xsd:decimal"}},
      {11, R"({"1.1":"R","support":["Paper"]})", {"R/E22/HMO1 P45 V/E57/Paper"}},
      {12, R"({"1.1":"R","language":["Latin"]})", {"R/E33/LO1 P72 V/E56/Latin"}},
      {13,
       R"({"1.1":"R","physical_location":"Box 1"})",
       {"R/E31/D1 P1 R/E42/r13.0.0.2", "R/E42/r13.0.0.2 P2 V/ARE5/Physical%20Location"}},
      {14,
       R"({"1.1":"R","original_numbering":"n.7"})",
       {"R/E31/D1 P1 R/E42/r14.0.0.2", "R/E42/r14.0.0.2 P2 V/ARE5/Original%20Numbering"}},
      {15,
       R"({"1.1":"R","previous_location":"Shelf 4"})",
       {"R/E31/D1 P1 R/E42/r15.0.0.2", "R/E42/r15.0.0.2 P2 V/ARE5/Previous%20Location"}},
      {16,
       R"({"1.1":"R","description_creation_date":"2020-01-02",
           "description_last_modification":"2021-03"})",
       {"R/E33/LO1 P94 R/E65/LO1.P94", "R/E65/LO1.P94 P4 R/E52/r16.0.0.4",
        "R/E52/r16.0.0.4 P1 R/E41/r16.0.0.6", "R/E41/r16.0.0.6 L2DO R/DOE10/r16.0.0.8",
        "R/DOE10/r16.0.0.8 DOP8 \"2020-01-02T00:00:00\"^^xsd:dateTime",
        "R/DOE10/r16.0.0.8 P2 V/ARE6/Creation%20Date",
        "R/E65/LO1.P94 P4 R/E52/r16.1.0.4", "R/E52/r16.1.0.4 P1 R/E41/r16.1.0.6",
        "R/E41/r16.1.0.6 L2DO R/DOE10/r16.1.0.8",
        "R/DOE10/r16.1.0.8 DOP8 \"2021-03-01T00:00:00\"^^xsd:dateTime",
        "R/DOE10/r16.1.0.8 P2 V/ARE6/Last%20Modification"}},
      {17, R"({"1.1":"R","parent_reference":"P"})", {"R/E31/D1 P165 P/E31/D1"}},
      {18,
       R"({"1.1":"R","creators":[{"name":"Lino","role":"Producer"}]})",
       {"R/E22/HMO1 P108 R/E12/HMO1.P108", "R/PC14/r18.0.1.0 P01 R/E12/HMO1.P108",
        "R/PC14/r18.0.1.0 P02 R/E21/r18.0.2.2", "R/E21/r18.0.2.2 P1 R/E41/r18.0.2.4",
        "R/E41/r18.0.2.4 L2DO R/DOE17/r18.0.2.6",
        "R/DOE17/r18.0.2.6 DOP5 \"Lino\"^^xsd:string",
        "R/PC14/r18.0.1.0 P14.1 V/ARE8/Producer"}},
  };
  return cases;
}

}  // namespace archonto::testing

#endif  // ARCHONTO_TESTS_GOLDEN_HPP_
