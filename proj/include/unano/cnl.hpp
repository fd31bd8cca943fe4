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

#ifndef UNANO_CNL_HPP
#define UNANO_CNL_HPP

#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "unano/nanopub.hpp"
#include "unano/rdf.hpp"

namespace unano::cnl {

/// Namespace for IRIs minted from unknown term phrases.
inline constexpr std::string_view kDefaultMintNamespace =
    "http://unano.org/term/";
/// Vocabulary of the grammar file format (cnl:template, cnl:predicate, ...).
inline constexpr std::string_view kCnlNamespace = "http://unano.org/cnl#";
/// Namespace of the starter patterns' relation predicates.
inline constexpr std::string_view kPredicateNamespace =
    "http://unano.org/vocab#";

/// A sentence template with exactly two slots ({S} and {O}, each once,
/// separated by at least one fixed word) paired with a binary predicate.
///
/// Matching is word-based. Slot phrases never contain a fixed word of any
/// registered pattern (the grammar's reserved words), which is what makes
/// parses unambiguous. Fixed words match case-sensitively unless
/// `caseInsensitiveFixedText` is set; slot phrases always keep their case.
struct CnlPattern {
  std::string id;
  std::string sentenceTemplate;
  Term predicate;
  bool caseInsensitiveFixedText = false;
};

/// Phrase <-> IRI table plus a minting namespace for unknown phrases.
/// Lookup keys are case-folded; the first phrase added for an IRI stays its
/// preferred verbalization. Immutable in use: build it, then share it.
class TermLexicon {
 public:
  explicit TermLexicon(
      std::string mintNamespace = std::string(kDefaultMintNamespace));

  /// Adds a curated entry. Throws InvalidLexicon when the phrase is not a
  /// normalized sentence fragment or is already bound to a different IRI.
  void add(const std::string& phrase, const Term& iri);

  std::optional<Term> lookup(std::string_view phrase) const;

  /// lookup() or, for unknown phrases, a slug-minted IRI under the minting
  /// namespace. Pure: nothing is registered.
  Term resolve(std::string_view phrase) const;

  /// Preferred phrase for a term: the curated one, or the inverted slug
  /// for IRIs under the minting namespace.
  std::optional<std::string> phraseFor(const Term& term) const;

  const std::string& mintNamespace() const { return mintNamespace_; }
  const std::map<Term, std::string>& preferredPhrases() const {
    return preferred_;
  }

  /// Injective phrase encoding: space -> '_', literal '_' -> %5F, '%' ->
  /// %25, and every character outside A-Za-z0-9-_.~ percent-encoded as
  /// UTF-8 octets.
  static std::string slug(std::string_view phrase);
  /// Exact inverse of slug(); nullopt when `slug` is not a valid image.
  static std::optional<std::string> unslug(std::string_view slug);

 private:
  std::string mintNamespace_;
  std::map<std::string, Term> byPhrase_;  // key: case-folded phrase
  std::map<Term, std::string> preferred_;
};

/// A registered pattern set with its ambiguity guarantees.
class CnlGrammar {
 public:
  /// Validates the template (InvalidTemplate) and proves it cannot collide
  /// with an already-registered pattern, throwing AmbiguousPattern with a
  /// witness sentence otherwise.
  void registerPattern(const CnlPattern& pattern);

  const std::vector<CnlPattern>& patterns() const { return patterns_; }
  /// Case-folded fixed words of all patterns; these can never occur inside
  /// a slot phrase.
  const std::set<std::string>& reservedWords() const { return reserved_; }

  struct Compiled {
    CnlPattern source;
    std::vector<std::string> prefix;
    std::vector<std::string> middle;
    std::vector<std::string> suffix;
    bool subjectFirst = true;  // {S} occurs before {O}
  };
  const std::vector<Compiled>& compiled() const { return compiled_; }

 private:
  std::vector<CnlPattern> patterns_;
  std::vector<Compiled> compiled_;
  std::set<std::string> reserved_;
};

/// Matches `sentence` (normalized, non-empty; EmptySentence otherwise)
/// against the grammar. Returns the triple when exactly one pattern
/// matches, nullopt (NotCovered) otherwise. Never fails on sentences the
/// grammar does not cover — those stay valid underspecified claims.
std::optional<Triple> parseCnl(const CnlGrammar& grammar,
                               const TermLexicon& lexicon,
                               std::string_view sentence);

/// Renders a triple back into a sentence when its predicate has a pattern
/// and both terms have phrases that parse back to the same triple;
/// nullopt (NotCovered) otherwise.
std::optional<std::string> verbalize(const CnlGrammar& grammar,
                                     const TermLexicon& lexicon,
                                     const Triple& triple);

/// Fills an unformalized nanopub's body with the parsed triple when the
/// sentence is covered; returns the nanopub unchanged otherwise.
Nanopub autoFormalize(const Nanopub& np, const CnlGrammar& grammar,
                      const TermLexicon& lexicon, const Vocabulary& vocab = {},
                      const std::vector<std::string>& authorities = {
                          std::string(kDefaultAuthority)});

/// The five starter patterns (is-transmitted-by, causes, is-a,
/// is-associated-with, inhibits). Illustrative, not normative; the same set
/// ships as data/default_grammar.trig.
CnlGrammar defaultGrammar();

struct GrammarBundle {
  CnlGrammar grammar;
  TermLexicon lexicon;
};

/// Reads patterns (cnl:template, cnl:predicate, optional cnl:id and
/// cnl:caseInsensitive) and lexicon entries (cnl:phrase) from a dataset's
/// default graph. Unrelated triples are ignored.
GrammarBundle loadGrammar(const Dataset& dataset,
                          std::string mintNamespace =
                              std::string(kDefaultMintNamespace));

GrammarBundle loadGrammarFile(const std::filesystem::path& path,
                              std::string mintNamespace =
                                  std::string(kDefaultMintNamespace));

}  // namespace unano::cnl

#endif  // UNANO_CNL_HPP
