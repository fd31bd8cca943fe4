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

#include "unano/claim_graph.hpp"

#include <utility>

#include "unano/io.hpp"
#include "unano/trig.hpp"

namespace unano {

const char* toString(Direction direction) {
  switch (direction) {
    case Direction::Outgoing: return "outgoing";
    case Direction::Incoming: return "incoming";
    case Direction::Undirected: return "undirected";
  }
  return "outgoing";
}

ClaimStore::ClaimStore()
    : ClaimStore(std::vector<std::string>{std::string(kDefaultAuthority)}) {}

ClaimStore::ClaimStore(std::vector<std::string> authorities)
    : authorities_(std::move(authorities)) {
  dataset_.setPrefix("rel", std::string(kRelationNamespace));
  for (const RelationKind& kind : builtinKinds()) {
    registerKind(kind);
  }
}

std::vector<RelationKind> ClaimStore::builtinKinds() {
  const std::string ns(kRelationNamespace);
  return {
      RelationKind{"contradicts", Term::iri(ns + "contradicts"),
                   EndpointKind::Claim, EndpointKind::Claim,
                   /*symmetric=*/true, /*irreflexive=*/true},
      RelationKind{"supports", Term::iri(ns + "supports"),
                   EndpointKind::Claim, EndpointKind::Claim, false, false},
      RelationKind{"agrees-with", Term::iri(ns + "agreesWith"),
                   EndpointKind::Agent, EndpointKind::Claim, false, false},
      RelationKind{"disagrees-with", Term::iri(ns + "disagreesWith"),
                   EndpointKind::Agent, EndpointKind::Claim, false, false},
  };
}

void ClaimStore::registerKind(const RelationKind& kind) {
  if (kind.name.empty()) {
    throw Error(ErrorCode::InvalidRelationKind, "kind name is empty");
  }
  if (!kind.predicate.isIri()) {
    throw Error(ErrorCode::InvalidRelationKind,
                "kind predicate must be an IRI");
  }
  if (kind.symmetric && kind.subjectKind != kind.objectKind) {
    throw Error(ErrorCode::InvalidRelationKind,
                "symmetric kinds must connect endpoints of the same kind");
  }
  if (registry_.count(kind.name) != 0) {
    throw Error(ErrorCode::InvalidRelationKind,
                "duplicate kind name '" + kind.name + "'");
  }
  if (kindOfPredicate_.count(kind.predicate) != 0) {
    throw Error(ErrorCode::InvalidRelationKind,
                "predicate " + kind.predicate.text() +
                    " is already bound to kind '" +
                    kindOfPredicate_.at(kind.predicate) + "'");
  }
  registry_.emplace(kind.name, kind);
  kindOfPredicate_.emplace(kind.predicate, kind.name);
}

void ClaimStore::assertRelation(const Term& subject,
                                const std::string& kindName,
                                const Term& object) {
  auto it = registry_.find(kindName);
  if (it == registry_.end()) {
    throw Error(ErrorCode::UnknownRelationKind,
                "no relation kind named '" + kindName + "'");
  }
  const RelationKind& kind = it->second;

  auto checkEndpoint = [&](const Term& term, EndpointKind expected,
                           const char* position) {
    if (!term.isIri()) {
      throw Error(ErrorCode::EndpointKindMismatch,
                  std::string(position) + " of '" + kindName +
                      "' must be an IRI");
    }
    const bool isClaim = isStatementUri(term.text(), authorities_);
    if (expected == EndpointKind::Claim && !isClaim) {
      throw Error(ErrorCode::NotAStatementUri,
                  std::string(position) + " of '" + kindName +
                      "' must be a statement URI: " + term.text());
    }
    if (expected == EndpointKind::Agent && isClaim) {
      throw Error(ErrorCode::EndpointKindMismatch,
                  std::string(position) + " of '" + kindName +
                      "' must be an agent, got the claim " + term.text());
    }
  };
  checkEndpoint(subject, kind.subjectKind, "subject");
  checkEndpoint(object, kind.objectKind, "object");

  if (kind.irreflexive && subject == object) {
    throw Error(ErrorCode::SelfContradiction,
                "'" + kindName + "' cannot relate " + subject.text() +
                    " to itself");
  }

  Term s = subject;
  Term o = object;
  if (kind.symmetric && o < s) std::swap(s, o);
  if (dataset_.insert(Quad(s, kind.predicate, o))) {
    indexEdge(kind, s, o, index_);
  }
}

void ClaimStore::indexEdge(const RelationKind& kind, const Term& subject,
                           const Term& object,
                           std::map<Term, std::set<RelationEdge>>& index)
    const {
  if (kind.symmetric) {
    index[subject].insert({kind.name, object, Direction::Undirected});
    index[object].insert({kind.name, subject, Direction::Undirected});
  } else {
    index[subject].insert({kind.name, object, Direction::Outgoing});
    index[object].insert({kind.name, subject, Direction::Incoming});
  }
}

std::vector<RelationEdge> ClaimStore::relationsOf(const Term& node) const {
  auto it = index_.find(node);
  if (it == index_.end()) return {};
  return std::vector<RelationEdge>(it->second.begin(), it->second.end());
}

std::vector<std::pair<Term, Term>> ClaimStore::contradictionPairs() const {
  std::vector<std::pair<Term, Term>> pairs;
  auto it = registry_.find("contradicts");
  if (it == registry_.end()) return pairs;
  const Term& predicate = it->second.predicate;
  for (const Quad& q : dataset_.quads()) {
    if (q.predicate == predicate) {
      pairs.emplace_back(q.subject, q.object);  // stored in canonical order
    }
  }
  return pairs;  // quad-set iteration is already sorted by subject, object
}

std::pair<std::vector<Term>, std::vector<Term>> ClaimStore::agreementProfile(
    const Term& agent) const {
  std::vector<Term> agrees;
  std::vector<Term> disagrees;
  const Term agreesPredicate = registry_.at("agrees-with").predicate;
  const Term disagreesPredicate = registry_.at("disagrees-with").predicate;
  for (const Quad& q : dataset_.quads()) {
    if (q.subject != agent) continue;
    if (q.predicate == agreesPredicate) {
      agrees.push_back(q.object);
    } else if (q.predicate == disagreesPredicate) {
      disagrees.push_back(q.object);
    }
  }
  return {std::move(agrees), std::move(disagrees)};
}

std::vector<Term> ClaimStore::endpoints() const {
  std::set<Term> nodes;
  for (const Quad& q : dataset_.quads()) {
    nodes.insert(q.subject);
    nodes.insert(q.object);
  }
  return std::vector<Term>(nodes.begin(), nodes.end());
}

std::map<Term, std::set<RelationEdge>> ClaimStore::buildIndexFromDataset()
    const {
  std::map<Term, std::set<RelationEdge>> rebuilt;
  for (const Quad& q : dataset_.quads()) {
    auto it = kindOfPredicate_.find(q.predicate);
    if (it == kindOfPredicate_.end()) continue;
    indexEdge(registry_.at(it->second), q.subject, q.object, rebuilt);
  }
  return rebuilt;
}

LoadResult loadStore(const std::filesystem::path& path, LoadMode mode,
                     std::vector<std::string> authorities,
                     const std::vector<RelationKind>& extraKinds) {
  const std::string text = readFile(path);
  const Dataset parsed = trig::parseTrig(text);

  LoadResult result{ClaimStore(std::move(authorities)), {}};
  for (const RelationKind& kind : extraKinds) {
    result.store.registerKind(kind);
  }

  auto reject = [&](ErrorCode code, const std::string& message) {
    if (mode == LoadMode::Strict) {
      throw Error(code, message + " in " + path.string());
    }
    result.warnings.push_back(message);
  };

  for (const Quad& q : parsed.quads()) {
    if (!q.graph.isDefaultGraph()) {
      reject(ErrorCode::UnknownRelationPredicate,
             "relation edges must be in the default graph, found a "
             "statement in graph " +
                 q.graph.text());
      continue;
    }
    auto kindName = [&]() -> std::string {
      for (const auto& [name, kind] : result.store.registry()) {
        if (kind.predicate == q.predicate) return name;
      }
      return {};
    }();
    if (kindName.empty()) {
      reject(ErrorCode::UnknownRelationPredicate,
             "unregistered relation predicate " + q.predicate.text());
      continue;
    }
    try {
      result.store.assertRelation(q.subject, kindName, q.object);
    } catch (const Error& e) {
      if (mode == LoadMode::Strict) throw;
      result.warnings.push_back(e.what());
    }
  }
  return result;
}

void saveStore(const ClaimStore& store, const std::filesystem::path& path) {
  atomicWriteFile(path, trig::serializeTrig(store.dataset()));
}

}  // namespace unano
