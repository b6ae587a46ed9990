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

#include <catch_amalgamated.hpp>

#include "archonto/mdl.hpp"
#include "random_rules.hpp"

using namespace archonto;

namespace {

ErrorKind mdl_error(std::string_view text) {
  try {
    parse_mdl(text);
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("rules were accepted: " << text);
  return ErrorKind::kParse;
}

const std::string kRule1 =
    "RULE 1: ISAD{D1} => E31 Document{=D1}; $D1 -> P128 -> E22{=HMO1}; "
    "$D1 -> P67 -> E33{=LO1};\n";

}  // namespace

TEST_CASE("a title path parses into alternating steps") {
  const auto path =
      parse_path("$D1 -> P102 has title -> ARE2 Formal Title -> L2DO hasValue -> DOE8 String -> "
                 "DOP7 stringValue -> FT");
  REQUIRE(path.size() == 7);
  CHECK(path[0] == PathStep{StepKind::kClassNode, "", "", Binding::kDeref, "D1"});
  CHECK(path[1] == PathStep{StepKind::kPropertyEdge, "P102", "has title", Binding::kNone, ""});
  CHECK(path[2].id == "ARE2");
  CHECK(path[4].id == "DOE8");
  CHECK(path[5].id == "DOP7");
  CHECK(path[6] == PathStep{StepKind::kClassNode, "", "", Binding::kEmit, "FT"});
}

TEST_CASE("bound class node") {
  const auto path = parse_path("E31 Document{=D1}");
  REQUIRE(path.size() == 1);
  CHECK(path[0] == PathStep{StepKind::kClassNode, "E31", "Document", Binding::kAssign, "D1"});
  CHECK(parse_path("E31{=D1}") == path);
  CHECK(parse_path("ARE5 {='Reference Code'}")[0].binding == Binding::kAssignLiteral);
}

TEST_CASE("path syntax errors") {
  auto kind_of = [](std::string_view text) {
    try {
      parse_path(text);
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::kParse;
  };
  CHECK(kind_of("$D1 -> P1 -> P2") == ErrorKind::kSyntax);
  CHECK(kind_of("$D1 -> E31") == ErrorKind::kSyntax);
  CHECK(kind_of("$D1 -> P1") == ErrorKind::kSyntax);
  CHECK(kind_of("$D1 -> P1 -> X -> P2 -> E41") == ErrorKind::kSyntax);
  CHECK(kind_of("$D1 -> P1 is identified by -> E999 Nothing") == ErrorKind::kUnknownClass);
  CHECK(kind_of("$D1 -> P999 -> E42") == ErrorKind::kUnknownProperty);
  CHECK(kind_of("$D1 -> P1 is named -> E42") == ErrorKind::kSyntax);
  CHECK(kind_of("E42{='unterminated}") == ErrorKind::kSyntax);
  CHECK(kind_of("$D1 -> P1 ->  -> E42") == ErrorKind::kSyntax);
}

TEST_CASE("errors report a byte offset") {
  try {
    parse_path("$D1 -> P1 -> P2");
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.position() == 13);
  }
}

TEST_CASE("built-in rules cover numbers 1 to 18") {
  const auto& rules = builtin_rules();
  REQUIRE(rules.rules.size() == 18);
  for (int n = 1; n <= 18; ++n) CHECK(rules.find(n) != nullptr);
  CHECK(rules.find(1)->selector.element == "ISAD");
  CHECK(rule_anchors(rules) == std::set<std::string>{"D1", "HMO1", "LO1"});
}

TEST_CASE("individual built-in rules") {
  const auto& rules = builtin_rules();
  const auto rule3 = render_mdl(RuleSet{{*rules.find(3)}});
  CHECK(rule3.find("ARE5 Identifier Type{='Reference Code'}") != std::string::npos);

  const auto& rule11 = *rules.find(11);
  CHECK(render_path(rule11.paths[0]) == "$HMO1 -> P45 consists of -> E57 Material{=SP}");

  const auto& rule17 = *rules.find(17);
  CHECK(render_path(rule17.paths[0]) == "$D1 -> P165 incorporates -> $PR");

  const auto& rule7 = *rules.find(7);
  CHECK(rule7.selector.captures == std::vector<std::string>{"SD", "ED"});
  REQUIRE(rule7.paths.size() == 3);
  CHECK(rule7.paths[1].back().text == "SD");
  CHECK(rule7.paths[2][1].id == "DOP2");
}

TEST_CASE("rendering is a fixed point of parsing") {
  const auto& rules = builtin_rules();
  const auto text = render_mdl(rules);
  CHECK(parse_mdl(text) == rules);
  CHECK(render_mdl(parse_mdl(text)) == text);
  CHECK(render_mdl(RuleSet{}).empty());
  CHECK(parse_mdl("").rules.empty());
  CHECK(parse_mdl("# only a comment\n").rules.empty());
}

TEST_CASE("random rule sets survive a round trip") {
  testing::RuleGenerator generator(7);
  for (int i = 0; i < 200; ++i) {
    const auto rules = generator.rule_set(1 + i % 5);
    const auto text = render_mdl(rules);
    INFO(text);
    REQUIRE(parse_mdl(text) == rules);
  }
}

TEST_CASE("comments and terminators are optional decorations") {
  const auto plain = parse_mdl(kRule1 + "RULE 2: $D1->Title{T} => $D1 -> P102 -> E35 -> "
                                        "L2DO -> DOE8 -> DOP7 -> T\n");
  const auto decorated = parse_mdl("# header\n" + kRule1 +
                                   "RULE 2: $D1->Title{T} => # title\n"
                                   "  $D1 -> P102 has title # inline\n"
                                   "  -> E35 Title -> L2DO -> DOE8 -> DOP7 -> T;\n");
  CHECK(plain == decorated);
}

TEST_CASE("rule-level errors") {
  CHECK(mdl_error("RULE 1: ISAD{D1} => E31{=D1};\nRULE 1: ISAD{D2} => E31{=D2};") ==
        ErrorKind::kSyntax);
  CHECK(mdl_error("RULE 2 $D1->Title{T} => $D1 -> P102 -> E35;") == ErrorKind::kSyntax);
  CHECK(mdl_error("RULE 2: $D1->Nonsense{T} => $D1 -> P102 -> E35;") == ErrorKind::kSyntax);
  CHECK(mdl_error("RULE 2: $D1->Title{T, U} => $D1 -> P102 -> E35;") == ErrorKind::kSyntax);
  CHECK(mdl_error("RULE 2: $D1->Title{T} =>") == ErrorKind::kSyntax);
  CHECK(mdl_error("RULE 0: ISAD{D1} => E31{=D1};") == ErrorKind::kSyntax);
}

TEST_CASE("variable hygiene") {
  CHECK(mdl_error(kRule1 + "RULE 2: $D1->Title{T} => $X9 -> P102 -> E35;") ==
        ErrorKind::kUnboundVariable);
  CHECK(mdl_error(kRule1 + "RULE 2: $D1->Title{T} => $D1 -> P102 -> E35 -> L2DO -> DOE8 -> "
                           "DOP7 -> Q;") == ErrorKind::kUnboundVariable);
  CHECK(mdl_error(kRule1 + "RULE 2: $Z->Title{T} => $D1 -> P102 -> E35;") ==
        ErrorKind::kUnboundVariable);
  // A variable bound earlier in the same rule may be dereferenced later.
  CHECK_NOTHROW(parse_mdl(kRule1 + "RULE 2: $D1->Title{T} => $D1 -> P102 -> E35{=TT};"
                                   "$TT -> L2DO -> DOE8 -> DOP7 -> T;"));
  // Variables do not leak between rules.
  CHECK(mdl_error(kRule1 + "RULE 2: $D1->Title{T} => $D1 -> P102 -> E35{=TT};\n"
                           "RULE 3: $D1->Title{U} => $TT -> P1 -> E42;") ==
        ErrorKind::kUnboundVariable);
}

TEST_CASE("short title path without the data object hop") {
  const auto path = parse_path("$D1 -> P102 has title -> ARE2 Formal Title -> DOP7 stringValue -> FT");
  REQUIRE(path.size() == 5);
  CHECK(path[0].binding == Binding::kDeref);
  CHECK(path[1].id == "P102");
  CHECK(path[2].id == "ARE2");
  CHECK(path[3].id == "DOP7");
  CHECK(path[4].binding == Binding::kEmit);
  CHECK(path[4].text == "FT");
}
