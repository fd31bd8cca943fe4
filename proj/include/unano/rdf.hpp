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

#ifndef UNANO_RDF_HPP
#define UNANO_RDF_HPP

#include <compare>
#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "unano/error.hpp"

namespace unano {

/// Kind order doubles as the canonical term order: the default graph sorts
/// before named graphs, IRIs before blank nodes before literals.
enum class TermKind { DefaultGraph, Iri, BlankNode, Literal };

/// One RDF term: an IRI, a blank node, a literal, or the default-graph
/// marker. Terms are immutable values; the factories validate their input.
class Term {
 public:
  /// A default-constructed term is the default-graph marker.
  Term() = default;

  /// Absolute IRI. Rejects IRIs without a scheme and IRIs containing
  /// whitespace, control characters, or characters that cannot appear in
  /// the angle-bracket syntax (<>"{}|^`\). Throws InvalidIri with the
  /// offending byte position in the message.
  static Term iri(std::string text);

  /// Blank node with a label matching [A-Za-z0-9_]+.
  static Term blankNode(std::string label);

  /// Plain literal (datatype xsd:string).
  static Term literal(std::string lexical);

  /// Typed literal. The datatype must be an IRI term; rdf:langString is
  /// rejected here (use langLiteral).
  static Term literal(std::string lexical, const Term& datatype);

  /// Language-tagged literal (datatype rdf:langString).
  static Term langLiteral(std::string lexical, std::string language);

  /// The distinguished name of the default graph.
  static const Term& defaultGraph();

  TermKind kind() const noexcept { return kind_; }
  bool isIri() const noexcept { return kind_ == TermKind::Iri; }
  bool isBlankNode() const noexcept { return kind_ == TermKind::BlankNode; }
  bool isLiteral() const noexcept { return kind_ == TermKind::Literal; }
  bool isDefaultGraph() const noexcept {
    return kind_ == TermKind::DefaultGraph;
  }

  /// IRI text, blank node label, or literal lexical form.
  const std::string& text() const noexcept { return text_; }
  /// Datatype IRI text; empty unless this is a literal.
  const std::string& datatype() const noexcept { return datatype_; }
  /// Language tag; empty unless this is a language-tagged literal.
  const std::string& language() const noexcept { return language_; }

  auto operator<=>(const Term&) const = default;
  bool operator==(const Term&) const = default;

 private:
  Term(TermKind kind, std::string text, std::string datatype,
       std::string language)
      : kind_(kind),
        text_(std::move(text)),
        datatype_(std::move(datatype)),
        language_(std::move(language)) {}

  TermKind kind_ = TermKind::DefaultGraph;
  std::string text_;
  std::string datatype_;
  std::string language_;
};

namespace vocab {
const Term& xsdString();
const Term& xsdInteger();
const Term& xsdBoolean();
const Term& rdfLangString();
}  // namespace vocab

/// Subject-predicate-object without a graph component.
struct Triple {
  Term subject;
  Term predicate;
  Term object;

  auto operator<=>(const Triple&) const = default;
  bool operator==(const Triple&) const = default;
};

/// A triple placed in a graph. The constructor enforces the positional
/// restrictions: the predicate is an IRI, the subject is an IRI or blank
/// node (LiteralSubject otherwise), the graph component is an IRI, a blank
/// node, or the default graph.
struct Quad {
  Quad(Term subject, Term predicate, Term object,
       Term graph = Term::defaultGraph());
  Quad(const Triple& triple, Term graph = Term::defaultGraph());

  Triple triple() const { return Triple{subject, predicate, object}; }

  Term subject;
  Term predicate;
  Term object;
  Term graph;

  auto operator<=>(const Quad&) const = default;
  bool operator==(const Quad&) const = default;
};

/// A set of quads plus a prefix map. Plain value type: copy it to share it.
class Dataset {
 public:
  /// Inserts a quad; returns true when the quad was not present before.
  bool insert(const Quad& quad);
  bool contains(const Quad& quad) const;
  std::size_t size() const noexcept { return quads_.size(); }
  bool empty() const noexcept { return quads_.empty(); }
  const std::set<Quad>& quads() const noexcept { return quads_; }

  /// Registers (or replaces) a prefix. The label may be empty (the ":"
  /// prefix); the namespace must be a valid absolute IRI.
  void setPrefix(const std::string& label, const std::string& namespaceIri);
  const std::map<std::string, std::string>& prefixes() const noexcept {
    return prefixes_;
  }

  /// All triples whose graph component equals `name`, sorted.
  std::set<Triple> graphOf(const Term& name) const;

  /// Distinct graph names occurring in the dataset, sorted (the default
  /// graph, when present, comes first).
  std::vector<Term> graphNames() const;

  bool operator==(const Dataset&) const = default;

 private:
  std::set<Quad> quads_;
  std::map<std::string, std::string> prefixes_;
};

/// True iff some bijection over blank node labels maps a's quad set onto
/// b's. Exhaustive backtracking search; throws TooManyBlankNodes when either
/// side has more than `maxBlankNodes` distinct labels.
bool datasetsIsomorphic(const Dataset& a, const Dataset& b,
                        std::size_t maxBlankNodes = 32);

/// True iff `label` is a well-formed prefix label: empty or
/// [A-Za-z][A-Za-z0-9_-]*.
bool isValidPrefixLabel(std::string_view label);

}  // namespace unano

#endif  // UNANO_RDF_HPP
