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

#ifndef UNANO_CLAIM_GRAPH_HPP
#define UNANO_CLAIM_GRAPH_HPP

#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "unano/rdf.hpp"
#include "unano/statement.hpp"

namespace unano {

/// Namespace of the relation predicates this toolkit mints.
inline constexpr std::string_view kRelationNamespace =
    "http://unano.org/rel#";

enum class EndpointKind { Claim, Agent };
enum class Direction { Outgoing, Incoming, Undirected };

const char* toString(Direction direction);

/// A typed relation. Claim endpoints must be statement URIs, agent
/// endpoints must not be. Symmetric kinds connect endpoints of the same
/// kind and are reported without a direction.
struct RelationKind {
  std::string name;
  Term predicate;
  EndpointKind subjectKind = EndpointKind::Claim;
  EndpointKind objectKind = EndpointKind::Claim;
  bool symmetric = false;
  bool irreflexive = false;
};

/// One entry of a node's adjacency listing.
struct RelationEdge {
  std::string kind;
  Term neighbor;
  Direction direction = Direction::Outgoing;

  auto operator<=>(const RelationEdge&) const = default;
  bool operator==(const RelationEdge&) const = default;
};

/// Relation network among claims and agents. Edges live as default-graph
/// triples in `dataset()`; the adjacency index is maintained incrementally
/// and can be rebuilt from the dataset for verification. Values copy
/// freely; mutation follows a single-writer contract.
class ClaimStore {
 public:
  ClaimStore();
  explicit ClaimStore(std::vector<std::string> authorities);

  /// The four built-in kinds: contradicts (symmetric, irreflexive),
  /// supports, agrees-with, disagrees-with.
  static std::vector<RelationKind> builtinKinds();

  /// Adds a relation kind; throws InvalidRelationKind on duplicate names or
  /// predicates and on symmetric kinds with mixed endpoint kinds.
  void registerKind(const RelationKind& kind);

  const std::map<std::string, RelationKind>& registry() const {
    return registry_;
  }
  const std::vector<std::string>& authorities() const { return authorities_; }

  /// Inserts an edge (idempotent). Symmetric edges are stored once in
  /// canonical order and mirrored at query time. Throws
  /// UnknownRelationKind, EndpointKindMismatch, NotAStatementUri, or
  /// SelfContradiction.
  void assertRelation(const Term& subject, const std::string& kindName,
                      const Term& object);

  /// Deterministic adjacency listing, sorted by kind then neighbor.
  std::vector<RelationEdge> relationsOf(const Term& node) const;

  /// Unordered contradiction pairs, each reported once with the
  /// lexicographically smaller IRI first; the list is sorted.
  std::vector<std::pair<Term, Term>> contradictionPairs() const;

  /// Claims the agent agrees with / disagrees with, both sorted. A claim
  /// may appear on both sides; the store records assertions, it does not
  /// arbitrate.
  std::pair<std::vector<Term>, std::vector<Term>> agreementProfile(
      const Term& agent) const;

  const Dataset& dataset() const { return dataset_; }
  std::size_t edgeCount() const { return dataset_.size(); }

  /// All distinct endpoint terms, sorted.
  std::vector<Term> endpoints() const;

  const std::map<Term, std::set<RelationEdge>>& index() const {
    return index_;
  }
  /// Recomputes the adjacency index from the dataset alone; equal to
  /// index() by construction.
  std::map<Term, std::set<RelationEdge>> buildIndexFromDataset() const;

 private:
  void indexEdge(const RelationKind& kind, const Term& subject,
                 const Term& object,
                 std::map<Term, std::set<RelationEdge>>& index) const;

  Dataset dataset_;
  std::map<std::string, RelationKind> registry_;
  std::map<Term, std::string> kindOfPredicate_;
  std::map<Term, std::set<RelationEdge>> index_;
  std::vector<std::string> authorities_;
};

enum class LoadMode { Strict, Lenient };

struct LoadResult {
  ClaimStore store;
  std::vector<std::string> warnings;  // lenient mode: skipped statements
};

/// Reads a store file. In strict mode any statement that is not a valid
/// relation edge in the default graph raises an error
/// (UnknownRelationPredicate for unregistered predicates); lenient mode
/// skips such statements and records a warning.
LoadResult loadStore(const std::filesystem::path& path,
                     LoadMode mode = LoadMode::Strict,
                     std::vector<std::string> authorities = {
                         std::string(kDefaultAuthority)},
                     const std::vector<RelationKind>& extraKinds = {});

/// Deterministic serialization written atomically (temp file + rename).
void saveStore(const ClaimStore& store, const std::filesystem::path& path);

}  // namespace unano

#endif  // UNANO_CLAIM_GRAPH_HPP
