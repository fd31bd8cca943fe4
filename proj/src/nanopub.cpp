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

#include "unano/nanopub.hpp"

#include <algorithm>
#include <utility>

namespace unano {
namespace {

constexpr const char* kXsdNamespace = "http://www.w3.org/2001/XMLSchema#";

Term partialFlagValue() {
  return Term::literal("true", vocab::xsdBoolean());
}

/// Objects of (subject, predicate, ·) within one graph, sorted.
std::vector<Term> objectsOf(const std::set<Triple>& graph,
                            const Term& subject, const Term& predicate) {
  std::vector<Term> result;
  for (const Triple& t : graph) {
    if (t.subject == subject && t.predicate == predicate) {
      result.push_back(t.object);
    }
  }
  return result;
}

struct Shape {
  std::optional<Term> assertion;
  std::vector<Term> contained;        // containsGraph objects, sorted
  std::optional<Term> head;           // graph holding the sentence pointer
  std::vector<Term> sentences;        // asSentence objects across candidates
  std::vector<Term> formulaTargets;   // asFormula objects in the head
};

Shape analyze(const Dataset& dataset, const Term& pubId,
              const Vocabulary& vocab, ValidationReport* report) {
  Shape shape;
  auto addViolation = [&](ViolationCode code, std::string message,
                          std::optional<Term> term) {
    if (report) {
      report->violations.push_back(
          Violation{code, std::move(message), std::move(term)});
    }
  };

  const std::set<Triple> defaultGraph = dataset.graphOf(Term::defaultGraph());
  std::vector<Term> assertions =
      objectsOf(defaultGraph, pubId, vocab.hasAssertion());
  if (assertions.empty()) {
    addViolation(ViolationCode::MissingAssertionLink,
                 "no hasAssertion link from " + pubId.text() +
                     " in the default graph",
                 pubId);
    return shape;
  }
  shape.assertion = assertions.front();
  const Term& assertion = *shape.assertion;

  shape.contained = objectsOf(defaultGraph, assertion, vocab.containsGraph());

  // Head candidates: contained graphs with content that reference a
  // representation of the assertion.
  std::vector<Term> candidates;
  for (const Term& g : shape.contained) {
    const std::set<Triple> graph = dataset.graphOf(g);
    if (graph.empty()) continue;
    bool references =
        !objectsOf(graph, assertion, vocab.asSentence()).empty() ||
        !objectsOf(graph, assertion, vocab.asFormula()).empty();
    if (!references) continue;
    candidates.push_back(g);
    for (const Term& s : objectsOf(graph, assertion, vocab.asSentence())) {
      shape.sentences.push_back(s);
      if (!shape.head) shape.head = g;
    }
  }
  if (candidates.empty()) {
    addViolation(ViolationCode::MissingHead,
                 "no contained graph holds a representation of " +
                     assertion.text(),
                 assertion);
    return shape;
  }
  if (!shape.head) {
    shape.head = candidates.front();
    addViolation(ViolationCode::MissingSentence,
                 "head graph " + shape.head->text() +
                     " has no asSentence triple",
                 *shape.head);
  } else if (shape.sentences.size() > 1) {
    addViolation(ViolationCode::MultipleSentences,
                 "found " + std::to_string(shape.sentences.size()) +
                     " asSentence triples",
                 *shape.head);
  }
  return shape;
}

}  // namespace

const char* toString(FormalizationStatus status) {
  switch (status) {
    case FormalizationStatus::Unformalized: return "Unformalized";
    case FormalizationStatus::Partial: return "Partial";
    case FormalizationStatus::Full: return "Full";
  }
  return "Unformalized";
}

const char* toString(ViolationCode code) {
  switch (code) {
    case ViolationCode::MissingAssertionLink: return "MissingAssertionLink";
    case ViolationCode::MissingHead: return "MissingHead";
    case ViolationCode::MissingSentence: return "MissingSentence";
    case ViolationCode::MultipleSentences: return "MultipleSentences";
    case ViolationCode::SentenceNotStatementUri:
      return "SentenceNotStatementUri";
    case ViolationCode::DanglingFormula: return "DanglingFormula";
    case ViolationCode::BodyWithoutFormulaLink:
      return "BodyWithoutFormulaLink";
    case ViolationCode::MultipleFormulas: return "MultipleFormulas";
  }
  return "Unknown";
}

ValidationReport validateNanopub(const Dataset& dataset, const Term& pubId,
                                 const Vocabulary& vocab,
                                 const std::vector<std::string>& authorities) {
  ValidationReport report;
  Shape shape = analyze(dataset, pubId, vocab, &report);
  if (shape.head) {
    const std::set<Triple> head = dataset.graphOf(*shape.head);

    if (!shape.sentences.empty()) {
      const Term& sentence = shape.sentences.front();
      if (!sentence.isIri() ||
          !isStatementUri(sentence.text(), authorities)) {
        report.violations.push_back(Violation{
            ViolationCode::SentenceNotStatementUri,
            "asSentence object is not a statement URI under a known "
            "authority",
            sentence});
      }
    }

    shape.formulaTargets =
        objectsOf(head, *shape.assertion, vocab.asFormula());
    if (shape.formulaTargets.size() > 1) {
      report.violations.push_back(
          Violation{ViolationCode::MultipleFormulas,
                    "found " +
                        std::to_string(shape.formulaTargets.size()) +
                        " asFormula triples; at most one is allowed",
                    *shape.head});
    }
    for (const Term& target : shape.formulaTargets) {
      if (std::find(shape.contained.begin(), shape.contained.end(), target) ==
          shape.contained.end()) {
        report.violations.push_back(Violation{
            ViolationCode::DanglingFormula,
            "asFormula target " + target.text() +
                " is not listed by a containsGraph triple",
            target});
      }
    }
    for (const Term& g : shape.contained) {
      if (g == *shape.head) continue;
      if (std::find(shape.formulaTargets.begin(), shape.formulaTargets.end(),
                    g) == shape.formulaTargets.end()) {
        report.violations.push_back(Violation{
            ViolationCode::BodyWithoutFormulaLink,
            "contained graph " + g.text() +
                " is not referenced by an asFormula triple",
            g});
      }
    }
  }
  report.valid = report.violations.empty();
  return report;
}

Nanopub Nanopub::fromDataset(Dataset dataset, const Term& pubId,
                             const Vocabulary& vocab,
                             const std::vector<std::string>& authorities) {
  ValidationReport report =
      validateNanopub(dataset, pubId, vocab, authorities);
  if (!report.valid) {
    std::string codes;
    for (const Violation& v : report.violations) {
      if (!codes.empty()) codes += ", ";
      codes += toString(v.code);
    }
    throw Error(ErrorCode::InvalidNanopub,
                pubId.text() + " violates the nanopub structure: " + codes);
  }
  Shape shape = analyze(dataset, pubId, vocab, nullptr);
  Nanopub np;
  np.pubId_ = pubId;
  np.assertionId_ = *shape.assertion;
  np.headId_ = *shape.head;
  const std::set<Triple> head = dataset.graphOf(*shape.head);
  std::vector<Term> formulas =
      objectsOf(head, *shape.assertion, vocab.asFormula());
  if (!formulas.empty()) np.bodyId_ = formulas.front();
  np.dataset_ = std::move(dataset);
  return np;
}

Nanopub buildNanopub(const Term& pubId, const Statement& sentence,
                     const std::optional<std::set<Triple>>& formula,
                     bool partial, const Vocabulary& vocab) {
  if (!pubId.isIri()) {
    throw Error(ErrorCode::InvalidIri, "publication id must be an IRI");
  }
  if (partial && !formula) {
    throw Error(ErrorCode::PartialWithoutFormula,
                "a partial formalization needs a formula");
  }

  Nanopub np;
  np.pubId_ = pubId;
  np.assertionId_ = Term::iri(pubId.text() + "_Assertion");
  np.headId_ = Term::iri(pubId.text() + "_Assertion_Head");

  Dataset& d = np.dataset_;
  d.setPrefix("np", vocab.npNamespace);
  d.setPrefix("st", vocab.stNamespace);
  d.insert(Quad(pubId, vocab.hasAssertion(), np.assertionId_));
  d.insert(Quad(np.assertionId_, vocab.containsGraph(), np.headId_));
  d.insert(Quad(np.assertionId_, vocab.asSentence(),
                encodeStatement(sentence), np.headId_));
  if (formula) {
    np.bodyId_ = Term::iri(pubId.text() + "_Assertion_Body");
    d.insert(Quad(np.assertionId_, vocab.containsGraph(), *np.bodyId_));
    d.insert(
        Quad(np.assertionId_, vocab.asFormula(), *np.bodyId_, np.headId_));
    if (partial) {
      d.setPrefix("xsd", kXsdNamespace);
      d.insert(Quad(np.assertionId_, vocab.isPartialFormalization(),
                    partialFlagValue(), np.headId_));
    }
    for (const Triple& t : *formula) {
      d.insert(Quad(t, *np.bodyId_));
    }
  }
  return np;
}

FormalizationStatus formalizationStatus(const Nanopub& np,
                                        const Vocabulary& vocab) {
  if (!np.bodyId() || np.dataset().graphOf(*np.bodyId()).empty()) {
    return FormalizationStatus::Unformalized;
  }
  const std::set<Triple> head = np.dataset().graphOf(np.headId());
  const Triple flag{np.assertionId(), vocab.isPartialFormalization(),
                    partialFlagValue()};
  if (head.find(flag) != head.end()) {
    return FormalizationStatus::Partial;
  }
  return FormalizationStatus::Full;
}

Statement sentenceOf(const Nanopub& np, const Vocabulary& vocab,
                     const std::vector<std::string>& authorities) {
  const std::set<Triple> head = np.dataset().graphOf(np.headId());
  std::vector<Term> sentences =
      objectsOf(head, np.assertionId(), vocab.asSentence());
  if (sentences.empty() || !sentences.front().isIri()) {
    throw Error(ErrorCode::NotAStatementUri,
                "nanopub head has no statement URI");
  }
  return decodeStatement(sentences.front().text(), authorities);
}

Nanopub formalize(const Nanopub& np, const std::set<Triple>& formula,
                  bool partial, const Vocabulary& vocab) {
  if (formalizationStatus(np, vocab) != FormalizationStatus::Unformalized) {
    throw Error(ErrorCode::AlreadyFormalized,
                np.pubId().text() + " already carries a formalization");
  }
  Nanopub result = np;
  if (!result.bodyId_) {
    result.bodyId_ = Term::iri(np.assertionId().text() + "_Body");
  }
  Dataset& d = result.dataset_;
  d.insert(
      Quad(np.assertionId(), vocab.containsGraph(), *result.bodyId_));
  d.insert(Quad(np.assertionId(), vocab.asFormula(), *result.bodyId_,
                np.headId()));
  if (partial) {
    d.setPrefix("xsd", kXsdNamespace);
    d.insert(Quad(np.assertionId(), vocab.isPartialFormalization(),
                  partialFlagValue(), np.headId()));
  }
  for (const Triple& t : formula) {
    d.insert(Quad(t, *result.bodyId_));
  }
  return result;
}

std::vector<Term> findPubIds(const Dataset& dataset,
                             const Vocabulary& vocab) {
  std::set<Term> ids;
  const Term hasAssertion = vocab.hasAssertion();
  for (const Triple& t : dataset.graphOf(Term::defaultGraph())) {
    if (t.predicate == hasAssertion) ids.insert(t.subject);
  }
  return std::vector<Term>(ids.begin(), ids.end());
}

}  // namespace unano
