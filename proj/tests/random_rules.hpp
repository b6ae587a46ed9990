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

// Random well-formed rule sets for round-trip checks.

#ifndef ARCHONTO_TESTS_RANDOM_RULES_HPP_
#define ARCHONTO_TESTS_RANDOM_RULES_HPP_

#include <random>
#include <string>
#include <vector>

#include "archonto/mdl.hpp"

namespace archonto::testing {

class RuleGenerator {
 public:
  explicit RuleGenerator(unsigned seed, const Schema& schema = builtin_schema())
      : rng_(seed), schema_(schema) {
    for (const auto& [id, c] : schema.classes()) classes_.push_back(&c);
    for (const auto& [id, p] : schema.properties()) properties_.push_back(&p);
  }

  MdlRule rule(int number) {
    MdlRule out;
    out.number = number;
    std::vector<std::string> anchors(default_anchors().begin(), default_anchors().end());
    out.selector.anchor = pick(anchors);
    std::vector<const SelectorElement*> elements;
    for (const auto& e : kSelectorElements) {
      if (e.name != "ISAD") elements.push_back(&e);
    }
    const auto* element = pick(elements);
    out.selector.element = std::string(element->name);
    const auto captures =
        element->min_captures + below(element->max_captures - element->min_captures + 1);
    for (std::size_t i = 0; i < captures; ++i) out.selector.captures.push_back(fresh());

    std::vector<std::string> bound = anchors;
    bound.insert(bound.end(), out.selector.captures.begin(), out.selector.captures.end());
    const auto paths = 1 + below(3);
    for (std::size_t p = 0; p < paths; ++p) out.paths.push_back(path(bound, out.selector.captures));
    return out;
  }

  // Rule 1 from the built-in set followed by `count` random rules.
  RuleSet rule_set(std::size_t count) {
    RuleSet out;
    out.rules.push_back(*builtin_rules().find(1));
    for (std::size_t i = 0; i < count; ++i) out.rules.push_back(rule(static_cast<int>(i) + 2));
    return out;
  }

 private:
  Path path(std::vector<std::string>& bound, const std::vector<std::string>& captures) {
    Path out;
    if (below(3) != 0) {
      out.push_back({StepKind::kClassNode, {}, {}, Binding::kDeref, pick(bound)});
    } else {
      out.push_back(node(bound));
    }
    const auto hops = 1 + below(4);
    for (std::size_t i = 0; i < hops; ++i) {
      const auto* property = pick(properties_);
      out.push_back({StepKind::kPropertyEdge, property->id, property->label, Binding::kNone, {}});
      if (i + 1 == hops && below(2) == 0) {
        out.push_back({StepKind::kClassNode, {}, {}, Binding::kEmit, pick(captures)});
      } else {
        out.push_back(node(bound));
      }
    }
    return out;
  }

  PathStep node(std::vector<std::string>& bound) {
    const auto* cls = pick(classes_);
    PathStep step{StepKind::kClassNode, cls->id, cls->label, Binding::kNone, {}};
    switch (below(3)) {
      case 0:
        break;
      case 1:
        step.binding = Binding::kAssign;
        step.text = below(4) == 0 ? pick(bound) : fresh();
        bound.push_back(step.text);
        break;
      default:
        step.binding = Binding::kAssignLiteral;
        step.text = literal();
        break;
    }
    return step;
  }

  std::string literal() {
    static const std::string alphabet = "abcXYZ 019-;>#/.,{}$";
    std::string out(1, 'a' + static_cast<char>(below(26)));
    const auto n = below(12);
    for (std::size_t i = 0; i < n; ++i) out.push_back(alphabet[below(alphabet.size())]);
    out.push_back('z');
    return out;
  }

  std::string fresh() { return "v" + std::to_string(counter_++); }

  std::size_t below(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }

  template <typename T>
  const T& pick(const std::vector<T>& items) {
    return items[below(items.size())];
  }

  std::mt19937 rng_;
  const Schema& schema_;
  std::vector<const ClassDef*> classes_;
  std::vector<const PropertyDef*> properties_;
  int counter_ = 0;
};

}  // namespace archonto::testing

#endif  // ARCHONTO_TESTS_RANDOM_RULES_HPP_
