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

#ifndef UNANO_STATEMENT_HPP
#define UNANO_STATEMENT_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "unano/rdf.hpp"

namespace unano {

/// Registry issuing statement URIs by default. Encoding is open: no lookup
/// or approval happens, the function below is pure.
inline constexpr std::string_view kDefaultAuthority = "http://statements.org";

/// Default cap applied by normalizeSentence, in Unicode code points.
inline constexpr std::size_t kDefaultMaxSentenceLength = 500;

/// A claim sentence addressed by authority and language.
///
/// Invariants: `authority` is an absolute IRI without a trailing '/',
/// `language` matches [a-z]{2,3}(-[A-Za-z0-9]+)*, `sentence` is non-empty
/// with no leading/trailing whitespace, no consecutive internal whitespace
/// and no line breaks.
struct Statement {
  std::string authority;
  std::string language;
  std::string sentence;

  auto operator<=>(const Statement&) const = default;
  bool operator==(const Statement&) const = default;
};

/// Unicode NFC normalization of UTF-8 text. Throws InvalidLiteral on
/// malformed UTF-8.
std::string toNfc(std::string_view utf8);

/// NFC + whitespace canonicalization: strips leading/trailing whitespace
/// and collapses internal runs to single spaces; case is preserved. Throws
/// EmptySentence when nothing remains and SentenceTooLong above `maxLength`
/// code points.
std::string normalizeSentence(std::string_view text,
                              std::size_t maxLength =
                                  kDefaultMaxSentenceLength);

/// True iff `sentence` is already in the normalized form above.
bool isNormalizedSentence(std::string_view sentence);

bool isValidLanguageTag(std::string_view tag);

/// Validates all fields and normalizes the sentence; the canonical way to
/// obtain a Statement from raw input. Trailing '/' on the authority is
/// dropped.
Statement makeStatement(std::string_view authority, std::string_view language,
                        std::string_view rawSentence,
                        std::size_t maxLength = kDefaultMaxSentenceLength);

/// Statement -> IRI, shaped `<authority>/<language>/<encoded-sentence>`.
/// Spaces become '+', literal '+' becomes %2B, '%' becomes %25, and every
/// character outside A-Za-z0-9-_.~+ is percent-encoded as UTF-8 octets.
/// Pure and deterministic; throws when `s` violates the invariants.
Term encodeStatement(const Statement& s);

/// Inverse of encodeStatement for IRIs under one of `knownAuthorities`.
/// Throws NotAStatementUri, BadPercentEscape, or InvalidLanguageTag.
Statement decodeStatement(std::string_view iri,
                          const std::vector<std::string>& knownAuthorities);

/// True iff decodeStatement would succeed.
bool isStatementUri(std::string_view iri,
                    const std::vector<std::string>& knownAuthorities);

}  // namespace unano

#endif  // UNANO_STATEMENT_HPP
