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

// Migrates one record built in code and prints the graph as Turtle, then
// the validation summary and usage counts.

#include <iostream>

#include "archonto.hpp"

int main() {
  using namespace archonto;

  IsadRecord fonds;
  fonds.reference_code = "PT/TT/DP";
  fonds.fields["1.1"] = std::string("PT/TT/DP");
  fonds.fields["1.2"] = std::string("Desembargo do Paço");
  fonds.fields["1.3"] = std::string("1610-1833");
  fonds.fields["1.4"] = std::string("Fonds");
  fonds.fields["support"] = std::vector<std::string>{"Paper", "Parchment"};

  const auto tree = resolve_inheritance(RecordTree::build({fonds}));
  const auto result = migrate_tree(tree, builtin_rules());
  std::cout << serialize(result.graph, Format::kTurtle) << "\n";
  std::cout << format_findings_text(validate_graph(result.graph)) << "\n";
  std::cout << format_usage_text(usage_report(result.graph));
  return result.has_errors() ? 1 : 0;
}
