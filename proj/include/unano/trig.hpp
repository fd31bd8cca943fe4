// Copyright 2026 The Unano Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef UNANO_TRIG_HPP
#define UNANO_TRIG_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "unano/error.hpp"
#include "unano/rdf.hpp"

namespace unano::trig {

/// Byte range into the parsed input.
struct SourceSpan {
  std::size_t start = 0;
  std::size_t end = 0;

  auto operator<=>(const SourceSpan&) const = default;
};

/// Syntax error with a 1-based source position. `expected` lists the token
/// descriptions that would have been accepted at that point.
class ParseError : public Error {
 public:
  ParseError(ErrorCode code, std::size_t line, std::size_t column,
             const std::string& message,
             std::vector<std::string> expected = {})
      : Error(code, "line " + std::to_string(line) + ", column " +
                        std::to_string(column) + ": " + message),
        line_(line),
        column_(column),
        detail_(message),
        expected_(std::move(expected)) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  /// Message without the position prefix.
  const std::string& detail() const noexcept { return detail_; }
  const std::vector<std::string>& expected() const noexcept {
    return expected_;
  }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string detail_;
  std::vector<std::string> expected_;
};

/// Parses a TriG document (the subset used by this toolkit: @prefix
/// directives, graph blocks, predicate and object lists, IRIs, prefixed
/// names, blank node labels, string/integer literals, # comments).
///
/// `<> { ... }` is the default graph block; statements outside any block
/// also go to the default graph. `<>` in a term position resolves to
/// `baseIri` and raises BaseRequired when no base was given.
///
/// Throws ParseError (codes ParseSyntax, UnknownPrefix, BaseRequired,
/// InvalidIri) at the first violation.
Dataset parseTrig(std::string_view text,
                  const std::optional<std::string>& baseIri = std::nullopt);

/// Canonical serialization: prefixes sorted by label, the default graph
/// first as a `<> { ... }` block, named graphs sorted by name, triples
/// sorted by subject/predicate/object and grouped with `;` and `,`.
/// The output reparses to an equal dataset; equal datasets serialize to
/// byte-identical text.
std::string serializeTrig(const Dataset& dataset);

}  // namespace unano::trig

#endif  // UNANO_TRIG_HPP
