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

#ifndef ARCHONTO_ERROR_HPP_
#define ARCHONTO_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace archonto {

enum class ErrorKind {
  kUnknownClass,
  kUnknownProperty,
  kUnknownLevel,
  kParse,
  kDuplicate,
  kDanglingParent,
  kCyclicParentage,
  kSyntax,
  kUnboundVariable,
  kNodeConflict,
  kRange,
  kVocabulary,
  kUnboundAnchor,
};

constexpr std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kUnknownClass: return "unknown-class";
    case ErrorKind::kUnknownProperty: return "unknown-property";
    case ErrorKind::kUnknownLevel: return "unknown-level";
    case ErrorKind::kParse: return "parse";
    case ErrorKind::kDuplicate: return "duplicate";
    case ErrorKind::kDanglingParent: return "dangling-parent";
    case ErrorKind::kCyclicParentage: return "cyclic-parentage";
    case ErrorKind::kSyntax: return "syntax";
    case ErrorKind::kUnboundVariable: return "unbound-variable";
    case ErrorKind::kNodeConflict: return "node-conflict";
    case ErrorKind::kRange: return "range";
    case ErrorKind::kVocabulary: return "vocabulary";
    case ErrorKind::kUnboundAnchor: return "unbound-anchor";
  }
  return "error";
}

// Every failure raised by the library. `position` is a 1-based line number
// for line-oriented inputs, a 0-based byte offset for MDL text, and 0 when
// not applicable.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message, std::size_t position = 0)
      : std::runtime_error(message), kind_(kind), position_(position) {}

  ErrorKind kind() const noexcept { return kind_; }
  std::size_t position() const noexcept { return position_; }

 private:
  ErrorKind kind_;
  std::size_t position_;
};

}  // namespace archonto

#endif  // ARCHONTO_ERROR_HPP_
