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

#include "unano/rdf.hpp"

#include <algorithm>
#include <utility>

namespace unano {
namespace {

constexpr std::string_view kXsd = "http://www.w3.org/2001/XMLSchema#";
constexpr std::string_view kRdf = "http://www.w3.org/1999/02/22-rdf-syntax-ns#";

bool isSchemeStart(char c) {
  return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z');
}

bool isSchemeChar(char c) {
  return isSchemeStart(c) || (c >= '0' && c <= '9') || c == '+' || c == '-' ||
         c == '.';
}

// Characters that can never appear unescaped in the angle-bracket IRI
// syntax. Everything <= 0x20 covers whitespace and C0 controls.
bool isForbiddenIriChar(unsigned char c) {
  if (c <= 0x20 || c == 0x7F) return true;
  switch (c) {
    case '<':
    case '>':
    case '"':
    case '{':
    case '}':
    case '|':
    case '^':
    case '`':
    case '\\':
      return true;
    default:
      return false;
  }
}

bool isBlankLabelChar(char c) {
  return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') ||
         (c >= '0' && c <= '9') || c == '_';
}

void checkIriText(const std::string& text) {
  if (text.empty()) {
    throw Error(ErrorCode::InvalidIri, "empty IRI");
  }
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (isForbiddenIriChar(static_cast<unsigned char>(text[i]))) {
      throw Error(ErrorCode::InvalidIri,
                  "forbidden character at position " + std::to_string(i) +
                      " in IRI '" + text + "'");
    }
  }
  if (!isSchemeStart(text[0])) {
    throw Error(ErrorCode::InvalidIri,
                "IRI is not absolute (no scheme) at position 0: '" + text +
                    "'");
  }
  std::size_t i = 1;
  while (i < text.size() && isSchemeChar(text[i])) ++i;
  if (i >= text.size() || text[i] != ':') {
    throw Error(ErrorCode::InvalidIri,
                "IRI is not absolute (no scheme) at position " +
                    std::to_string(i) + ": '" + text + "'");
  }
}

bool isValidLiteralLanguage(std::string_view tag) {
  // Loose BCP-47 shape: alpha subtag, then alphanumeric subtags.
  if (tag.empty()) return false;
  std::size_t i = 0;
  auto isAlpha = [](char c) {
    return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z');
  };
  auto isAlnum = [&](char c) { return isAlpha(c) || (c >= '0' && c <= '9'); };
  while (i < tag.size() && isAlpha(tag[i])) ++i;
  if (i == 0) return false;
  while (i < tag.size()) {
    if (tag[i] != '-') return false;
    ++i;
    std::size_t start = i;
    while (i < tag.size() && isAlnum(tag[i])) ++i;
    if (i == start) return false;
  }
  return true;
}

}  // namespace

namespace vocab {
const Term& xsdString() {
  static const Term t = Term::iri(std::string(kXsd) + "string");
  return t;
}
const Term& xsdInteger() {
  static const Term t = Term::iri(std::string(kXsd) + "integer");
  return t;
}
const Term& xsdBoolean() {
  static const Term t = Term::iri(std::string(kXsd) + "boolean");
  return t;
}
const Term& rdfLangString() {
  static const Term t = Term::iri(std::string(kRdf) + "langString");
  return t;
}
}  // namespace vocab

Term Term::iri(std::string text) {
  checkIriText(text);
  return Term(TermKind::Iri, std::move(text), "", "");
}

Term Term::blankNode(std::string label) {
  if (label.empty()) {
    throw Error(ErrorCode::InvalidBlankNodeLabel, "empty blank node label");
  }
  for (char c : label) {
    if (!isBlankLabelChar(c)) {
      throw Error(ErrorCode::InvalidBlankNodeLabel,
                  "blank node label must match [A-Za-z0-9_]+: '" + label +
                      "'");
    }
  }
  return Term(TermKind::BlankNode, std::move(label), "", "");
}

Term Term::literal(std::string lexical) {
  return Term(TermKind::Literal, std::move(lexical), vocab::xsdString().text(),
              "");
}

Term Term::literal(std::string lexical, const Term& datatype) {
  if (!datatype.isIri()) {
    throw Error(ErrorCode::InvalidLiteral, "literal datatype must be an IRI");
  }
  if (datatype == vocab::rdfLangString()) {
    throw Error(ErrorCode::InvalidLiteral,
                "rdf:langString literals require a language tag");
  }
  return Term(TermKind::Literal, std::move(lexical), datatype.text(), "");
}

Term Term::langLiteral(std::string lexical, std::string language) {
  if (!isValidLiteralLanguage(language)) {
    throw Error(ErrorCode::InvalidLiteral,
                "malformed language tag '" + language + "'");
  }
  return Term(TermKind::Literal, std::move(lexical),
              vocab::rdfLangString().text(), std::move(language));
}

const Term& Term::defaultGraph() {
  static const Term t(TermKind::DefaultGraph, "", "", "");
  return t;
}

namespace {

void checkQuad(const Term& subject, const Term& predicate, const Term& object,
               const Term& graph) {
  if (!predicate.isIri()) {
    throw Error(ErrorCode::InvalidQuad, "predicate must be an IRI");
  }
  if (subject.isLiteral()) {
    throw Error(ErrorCode::LiteralSubject,
                "a literal cannot be used in subject position");
  }
  if (!subject.isIri() && !subject.isBlankNode()) {
    throw Error(ErrorCode::InvalidQuad,
                "subject must be an IRI or blank node");
  }
  if (object.isDefaultGraph()) {
    throw Error(ErrorCode::InvalidQuad, "object must be a concrete term");
  }
  if (graph.isLiteral()) {
    throw Error(ErrorCode::InvalidQuad, "graph name cannot be a literal");
  }
}

}  // namespace

Quad::Quad(Term subjectIn, Term predicateIn, Term objectIn, Term graphIn)
    : subject(std::move(subjectIn)),
      predicate(std::move(predicateIn)),
      object(std::move(objectIn)),
      graph(std::move(graphIn)) {
  checkQuad(subject, predicate, object, graph);
}

Quad::Quad(const Triple& triple, Term graphIn)
    : Quad(triple.subject, triple.predicate, triple.object,
           std::move(graphIn)) {}

bool Dataset::insert(const Quad& quad) { return quads_.insert(quad).second; }

bool Dataset::contains(const Quad& quad) const {
  return quads_.find(quad) != quads_.end();
}

void Dataset::setPrefix(const std::string& label,
                        const std::string& namespaceIri) {
  if (!isValidPrefixLabel(label)) {
    throw Error(ErrorCode::InvalidPrefix,
                "malformed prefix label '" + label + "'");
  }
  Term::iri(namespaceIri);  // validate
  prefixes_[label] = namespaceIri;
}

std::set<Triple> Dataset::graphOf(const Term& name) const {
  std::set<Triple> result;
  for (const Quad& q : quads_) {
    if (q.graph == name) {
      result.insert(q.triple());
    }
  }
  return result;
}

std::vector<Term> Dataset::graphNames() const {
  std::set<Term> names;
  for (const Quad& q : quads_) names.insert(q.graph);
  return std::vector<Term>(names.begin(), names.end());
}

bool isValidPrefixLabel(std::string_view label) {
  if (label.empty()) return true;
  if (!isSchemeStart(label[0])) return false;
  return std::all_of(label.begin() + 1, label.end(), [](char c) {
    return isSchemeStart(c) || (c >= '0' && c <= '9') || c == '_' || c == '-';
  });
}

namespace {

std::vector<std::string> blankLabelsOf(const Dataset& d) {
  std::set<std::string> labels;
  for (const Quad& q : d.quads()) {
    for (const Term* t : {&q.subject, &q.predicate, &q.object, &q.graph}) {
      if (t->isBlankNode()) labels.insert(t->text());
    }
  }
  return std::vector<std::string>(labels.begin(), labels.end());
}

Quad remapQuad(const Quad& q, const std::map<std::string, std::string>& map) {
  auto remap = [&](const Term& t) {
    if (!t.isBlankNode()) return t;
    return Term::blankNode(map.at(t.text()));
  };
  return Quad(remap(q.subject), q.predicate, remap(q.object), remap(q.graph));
}

// Backtracking search for a label bijection. Quads are grouped by the
// highest-indexed label of `a` they mention so each level of the search can
// check exactly the quads that became fully mapped.
class IsomorphismSearch {
 public:
  IsomorphismSearch(const Dataset& a, const Dataset& b,
                    std::vector<std::string> labelsA,
                    std::vector<std::string> labelsB)
      : labelsA_(std::move(labelsA)), labelsB_(std::move(labelsB)) {
    std::map<std::string, std::size_t> indexOfA;
    for (std::size_t i = 0; i < labelsA_.size(); ++i) {
      indexOfA[labelsA_[i]] = i;
    }
    quadsByLevel_.resize(labelsA_.size());
    for (const Quad& q : a.quads()) {
      std::size_t level = 0;
      bool hasBlank = false;
      for (const Term* t : {&q.subject, &q.object, &q.graph}) {
        if (t->isBlankNode()) {
          hasBlank = true;
          level = std::max(level, indexOfA.at(t->text()));
        }
      }
      if (hasBlank) {
        quadsByLevel_[level].push_back(q);
      }
    }
    for (const Quad& q : b.quads()) {
      bQuads_.insert(q);
    }
    used_.assign(labelsB_.size(), false);
  }

  bool run() { return assign(0); }

 private:
  bool assign(std::size_t level) {
    if (level == labelsA_.size()) return true;
    for (std::size_t j = 0; j < labelsB_.size(); ++j) {
      if (used_[j]) continue;
      used_[j] = true;
      mapping_[labelsA_[level]] = labelsB_[j];
      if (levelConsistent(level) && assign(level + 1)) return true;
      used_[j] = false;
    }
    mapping_.erase(labelsA_[level]);
    return false;
  }

  bool levelConsistent(std::size_t level) const {
    for (const Quad& q : quadsByLevel_[level]) {
      if (bQuads_.find(remapQuad(q, mapping_)) == bQuads_.end()) return false;
    }
    return true;
  }

  std::vector<std::string> labelsA_;
  std::vector<std::string> labelsB_;
  std::vector<std::vector<Quad>> quadsByLevel_;
  std::set<Quad> bQuads_;
  std::vector<bool> used_;
  std::map<std::string, std::string> mapping_;
};

}  // namespace

bool datasetsIsomorphic(const Dataset& a, const Dataset& b,
                        std::size_t maxBlankNodes) {
  std::vector<std::string> labelsA = blankLabelsOf(a);
  std::vector<std::string> labelsB = blankLabelsOf(b);
  if (labelsA.size() > maxBlankNodes || labelsB.size() > maxBlankNodes) {
    throw Error(ErrorCode::TooManyBlankNodes,
                "isomorphism check limited to " +
                    std::to_string(maxBlankNodes) + " blank nodes per side");
  }
  if (a.size() != b.size() || labelsA.size() != labelsB.size()) return false;

  // Ground quads must match exactly; only blank-containing quads need the
  // bijection search.
  std::set<Quad> groundA;
  std::set<Quad> groundB;
  auto isGround = [](const Quad& q) {
    return !q.subject.isBlankNode() && !q.object.isBlankNode() &&
           !q.graph.isBlankNode();
  };
  for (const Quad& q : a.quads()) {
    if (isGround(q)) groundA.insert(q);
  }
  for (const Quad& q : b.quads()) {
    if (isGround(q)) groundB.insert(q);
  }
  if (groundA != groundB) return false;

  IsomorphismSearch search(a, b, std::move(labelsA), std::move(labelsB));
  return search.run();
}

const char* errorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidIri: return "InvalidIri";
    case ErrorCode::InvalidBlankNodeLabel: return "InvalidBlankNodeLabel";
    case ErrorCode::InvalidLiteral: return "InvalidLiteral";
    case ErrorCode::InvalidPrefix: return "InvalidPrefix";
    case ErrorCode::LiteralSubject: return "LiteralSubject";
    case ErrorCode::InvalidQuad: return "InvalidQuad";
    case ErrorCode::TooManyBlankNodes: return "TooManyBlankNodes";
    case ErrorCode::ParseSyntax: return "ParseSyntax";
    case ErrorCode::UnknownPrefix: return "UnknownPrefix";
    case ErrorCode::BaseRequired: return "BaseRequired";
    case ErrorCode::EmptySentence: return "EmptySentence";
    case ErrorCode::SentenceTooLong: return "SentenceTooLong";
    case ErrorCode::InvalidLanguageTag: return "InvalidLanguageTag";
    case ErrorCode::NotAStatementUri: return "NotAStatementUri";
    case ErrorCode::BadPercentEscape: return "BadPercentEscape";
    case ErrorCode::InvalidAuthority: return "InvalidAuthority";
    case ErrorCode::PartialWithoutFormula: return "PartialWithoutFormula";
    case ErrorCode::AlreadyFormalized: return "AlreadyFormalized";
    case ErrorCode::InvalidNanopub: return "InvalidNanopub";
    case ErrorCode::SelfContradiction: return "SelfContradiction";
    case ErrorCode::EndpointKindMismatch: return "EndpointKindMismatch";
    case ErrorCode::UnknownRelationKind: return "UnknownRelationKind";
    case ErrorCode::UnknownRelationPredicate:
      return "UnknownRelationPredicate";
    case ErrorCode::InvalidRelationKind: return "InvalidRelationKind";
    case ErrorCode::AmbiguousPattern: return "AmbiguousPattern";
    case ErrorCode::InvalidTemplate: return "InvalidTemplate";
    case ErrorCode::InvalidLexicon: return "InvalidLexicon";
    case ErrorCode::IoError: return "IoError";
  }
  return "UnknownError";
}

}  // namespace unano
