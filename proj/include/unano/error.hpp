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

#ifndef UNANO_ERROR_HPP
#define UNANO_ERROR_HPP

#include <stdexcept>
#include <string>

namespace unano {

/// Machine-checkable failure categories used across the toolkit.
enum class ErrorCode {
  // RDF model
  InvalidIri,
  InvalidBlankNodeLabel,
  InvalidLiteral,
  InvalidPrefix,
  LiteralSubject,
  InvalidQuad,
  TooManyBlankNodes,

  // TriG syntax
  ParseSyntax,
  UnknownPrefix,
  BaseRequired,

  // Statement URIs
  EmptySentence,
  SentenceTooLong,
  InvalidLanguageTag,
  NotAStatementUri,
  BadPercentEscape,
  InvalidAuthority,

  // Nanopublications
  PartialWithoutFormula,
  AlreadyFormalized,
  InvalidNanopub,

  // Claim graph
  SelfContradiction,
  EndpointKindMismatch,
  UnknownRelationKind,
  UnknownRelationPredicate,
  InvalidRelationKind,

  // CNL grammar
  AmbiguousPattern,
  InvalidTemplate,
  InvalidLexicon,

  // Persistence
  IoError,
};

/// Stable identifier string for an error code ("InvalidIri", ...).
const char* errorCodeName(ErrorCode code);

/// Exception type carrying an ErrorCode next to the human-readable message.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(errorCodeName(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace unano

#endif  // UNANO_ERROR_HPP
