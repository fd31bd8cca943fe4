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

#ifndef UNANO_NANOPUB_HPP
#define UNANO_NANOPUB_HPP

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "unano/rdf.hpp"
#include "unano/statement.hpp"

namespace unano {

/// The two namespaces a nanopub's structure triples are written in.
struct Vocabulary {
  std::string npNamespace = "http://www.nanopub.org/nschema#";
  std::string stNamespace = "http://statements.org/";

  Term hasAssertion() const { return Term::iri(npNamespace + "hasAssertion"); }
  Term containsGraph() const {
    return Term::iri(npNamespace + "containsGraph");
  }
  Term asSentence() const { return Term::iri(stNamespace + "asSentence"); }
  Term asFormula() const { return Term::iri(stNamespace + "asFormula"); }
  Term isPartialFormalization() const {
    return Term::iri(stNamespace + "isPartialFormalization");
  }
};

enum class FormalizationStatus { Unformalized, Partial, Full };

const char* toString(FormalizationStatus status);

enum class ViolationCode {
  MissingAssertionLink,
  MissingHead,
  MissingSentence,
  MultipleSentences,
  SentenceNotStatementUri,
  DanglingFormula,
  BodyWithoutFormulaLink,
  MultipleFormulas,
};

const char* toString(ViolationCode code);

struct Violation {
  ViolationCode code;
  std::string message;
  std::optional<Term> term;
};

struct ValidationReport {
  bool valid = true;
  std::vector<Violation> violations;
};

/// An assertion split into a head graph (pointers to representations) and
/// an optional body graph (the formal triples), linked from the default
/// graph. The dataset always satisfies the structural shape checked by
/// validateNanopub.
class Nanopub {
 public:
  const Term& pubId() const { return pubId_; }
  const Term& assertionId() const { return assertionId_; }
  const Term& headId() const { return headId_; }
  const std::optional<Term>& bodyId() const { return bodyId_; }
  const Dataset& dataset() const { return dataset_; }

  /// Adopts an already-parsed dataset; throws Error(InvalidNanopub) listing
  /// the violations when the structure does not hold.
  static Nanopub fromDataset(Dataset dataset, const Term& pubId,
                             const Vocabulary& vocab = {},
                             const std::vector<std::string>& authorities = {
                                 std::string(kDefaultAuthority)});

 private:
  friend Nanopub buildNanopub(const Term&, const Statement&,
                              const std::optional<std::set<Triple>>&, bool,
                              const Vocabulary&);
  friend Nanopub formalize(const Nanopub&, const std::set<Triple>&, bool,
                           const Vocabulary&);
  Nanopub() = default;

  Term pubId_ = Term::defaultGraph();
  Term assertionId_ = Term::defaultGraph();
  Term headId_ = Term::defaultGraph();
  std::optional<Term> bodyId_;
  Dataset dataset_;
};

/// Assembles a nanopub for `sentence` under `pubId`. Graph names derive
/// from the publication IRI (`_Assertion`, `_Assertion_Head`,
/// `_Assertion_Body`). A body graph and asFormula link appear only when
/// `formula` is given; `partial` additionally records the
/// isPartialFormalization flag and requires a formula
/// (PartialWithoutFormula otherwise).
Nanopub buildNanopub(const Term& pubId, const Statement& sentence,
                     const std::optional<std::set<Triple>>& formula,
                     bool partial, const Vocabulary& vocab = {});

/// Checks the structural invariants of a nanopub dataset and reports every
/// violation; never throws on bad structure.
ValidationReport validateNanopub(const Dataset& dataset, const Term& pubId,
                                 const Vocabulary& vocab = {},
                                 const std::vector<std::string>& authorities =
                                     {std::string(kDefaultAuthority)});

/// Unformalized: no body graph or an empty one. Partial: non-empty body
/// plus the isPartialFormalization flag in the head. Full: non-empty body,
/// no flag.
FormalizationStatus formalizationStatus(const Nanopub& np,
                                        const Vocabulary& vocab = {});

/// Decodes the statement URI the head points at.
Statement sentenceOf(const Nanopub& np, const Vocabulary& vocab = {},
                     const std::vector<std::string>& authorities = {
                         std::string(kDefaultAuthority)});

/// Fills the body of an unformalized nanopub with `formula`. Identifiers
/// and the sentence never change; throws AlreadyFormalized when the body is
/// already non-empty.
Nanopub formalize(const Nanopub& np, const std::set<Triple>& formula,
                  bool partial, const Vocabulary& vocab = {});

/// Finds the publication IRIs in a dataset: subjects of hasAssertion links
/// in the default graph, sorted.
std::vector<Term> findPubIds(const Dataset& dataset,
                             const Vocabulary& vocab = {});

}  // namespace unano

#endif  // UNANO_NANOPUB_HPP
