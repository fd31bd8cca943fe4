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

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "unano/claim_graph.hpp"
#include "unano/cnl.hpp"
#include "unano/io.hpp"
#include "unano/nanopub.hpp"
#include "unano/rdf.hpp"
#include "unano/statement.hpp"
#include "unano/trig.hpp"

namespace fs = std::filesystem;
using json = nlohmann::json;
using namespace unano;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

constexpr const char* kConfigSubject = "http://unano.org/config#settings";
constexpr const char* kConfigNs = "http://unano.org/config#";

struct Config {
  std::string authority = std::string(kDefaultAuthority);
  std::string mintNamespace = std::string(cnl::kDefaultMintNamespace);
  LoadMode mode = LoadMode::Strict;
  std::optional<std::string> grammarPath;
  std::optional<std::string> storePath;
};

struct Flags {
  std::optional<std::string> authority;
  std::optional<std::string> mintNamespace;
  std::optional<std::string> mode;
  std::optional<std::string> grammar;
  std::optional<std::string> store;
  std::string configFile = "unano.trig";
};

std::optional<std::string> envVar(const char* name) {
  const char* value = std::getenv(name);
  if (!value || *value == '\0') return std::nullopt;
  return std::string(value);
}

LoadMode parseMode(const std::string& text) {
  if (text == "strict") return LoadMode::Strict;
  if (text == "lenient") return LoadMode::Lenient;
  throw Error(ErrorCode::IoError,
              "mode must be 'strict' or 'lenient', got '" + text + "'");
}

// Resolution order: flag > environment > config file > built-in default.
Config resolveConfig(const Flags& flags) {
  Config config;

  if (fs::exists(flags.configFile)) {
    const Dataset dataset = trig::parseTrig(readFile(flags.configFile));
    const Term subject = Term::iri(kConfigSubject);
    const std::string ns(kConfigNs);
    for (const Triple& t : dataset.graphOf(Term::defaultGraph())) {
      if (t.subject != subject) continue;
      const std::string& value = t.object.text();
      if (t.predicate == Term::iri(ns + "authority")) {
        config.authority = value;
      } else if (t.predicate == Term::iri(ns + "mintNamespace")) {
        config.mintNamespace = value;
      } else if (t.predicate == Term::iri(ns + "mode")) {
        config.mode = parseMode(value);
      } else if (t.predicate == Term::iri(ns + "grammar")) {
        config.grammarPath = value;
      } else if (t.predicate == Term::iri(ns + "store")) {
        config.storePath = value;
      }
    }
  }

  if (auto v = envVar("UNANO_AUTHORITY")) config.authority = *v;
  if (auto v = envVar("UNANO_MINT_NS")) config.mintNamespace = *v;
  if (auto v = envVar("UNANO_MODE")) config.mode = parseMode(*v);
  if (auto v = envVar("UNANO_GRAMMAR")) config.grammarPath = *v;
  if (auto v = envVar("UNANO_STORE")) config.storePath = *v;

  if (flags.authority) config.authority = *flags.authority;
  if (flags.mintNamespace) config.mintNamespace = *flags.mintNamespace;
  if (flags.mode) config.mode = parseMode(*flags.mode);
  if (flags.grammar) config.grammarPath = *flags.grammar;
  if (flags.store) config.storePath = *flags.store;
  return config;
}

std::vector<std::string> authoritiesOf(const Config& config) {
  return {config.authority};
}

std::string requireStorePath(const Config& config) {
  if (!config.storePath) {
    throw Error(ErrorCode::IoError,
                "no store configured (use --store, UNANO_STORE, or the "
                "config file)");
  }
  return *config.storePath;
}

ClaimStore loadStoreOrEmpty(const Config& config) {
  const std::string path = requireStorePath(config);
  if (!fs::exists(path)) {
    return ClaimStore(authoritiesOf(config));
  }
  LoadResult result = loadStore(path, config.mode, authoritiesOf(config));
  for (const std::string& warning : result.warnings) {
    std::cerr << "warning: " << warning << "\n";
  }
  return std::move(result.store);
}

cnl::GrammarBundle grammarOf(const Config& config) {
  if (config.grammarPath) {
    return cnl::loadGrammarFile(*config.grammarPath, config.mintNamespace);
  }
  return cnl::GrammarBundle{cnl::defaultGrammar(),
                            cnl::TermLexicon(config.mintNamespace)};
}

std::vector<fs::path> trigFilesIn(const fs::path& dir) {
  std::vector<fs::path> files;
  if (!fs::exists(dir)) {
    throw Error(ErrorCode::IoError, "no such directory: " + dir.string());
  }
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".trig") {
      files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end());
  return files;
}

// One nanopub per file: the unique hasAssertion subject.
Term pubIdOf(const Dataset& dataset) {
  const std::vector<Term> ids = findPubIds(dataset);
  if (ids.empty()) {
    throw Error(ErrorCode::InvalidNanopub,
                "no hasAssertion link found in the default graph");
  }
  if (ids.size() > 1) {
    throw Error(ErrorCode::InvalidNanopub,
                "file contains more than one nanopub");
  }
  return ids.front();
}

std::string violationCodes(const ValidationReport& report) {
  std::string codes;
  for (const Violation& v : report.violations) {
    if (!codes.empty()) codes += ",";
    codes += toString(v.code);
  }
  return codes;
}

std::string sanitizeFileStem(const std::string& iriText) {
  std::size_t cut = iriText.find_last_of("/#");
  std::string stem =
      cut == std::string::npos ? iriText : iriText.substr(cut + 1);
  for (char& c : stem) {
    const bool ok = (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') ||
                    (c >= '0' && c <= '9') || c == '-' || c == '_' ||
                    c == '.';
    if (!ok) c = '_';
  }
  if (stem.empty()) stem = "nanopub";
  return stem;
}

int cmdEncode(const Config& config, const std::string& lang,
              const std::string& sentence) {
  const Statement statement = makeStatement(config.authority, lang, sentence);
  std::cout << encodeStatement(statement).text() << "\n";
  return kExitOk;
}

int cmdNew(const Config& config, const std::string& id,
           const std::string& lang, const std::string& sentence,
           const std::optional<std::string>& formulaPath, bool partial,
           std::optional<std::string> outPath) {
  const Term pubId = Term::iri(id);
  const Statement statement = makeStatement(config.authority, lang, sentence);

  std::optional<std::set<Triple>> formula;
  if (formulaPath) {
    formula = trig::parseTrig(readFile(*formulaPath))
                  .graphOf(Term::defaultGraph());
  }
  const Nanopub np = buildNanopub(pubId, statement, formula, partial);

  const std::string path =
      outPath ? *outPath : sanitizeFileStem(pubId.text()) + ".trig";
  atomicWriteFile(path, trig::serializeTrig(np.dataset()));
  std::cout << path << "\n";
  return kExitOk;
}

int cmdValidate(const Config& config, const std::vector<std::string>& paths,
                bool jsonOutput) {
  bool anyFail = false;
  bool anyParseError = false;
  bool anyIoError = false;
  for (const std::string& path : paths) {
    std::string text;
    try {
      text = readFile(path);
    } catch (const Error& e) {
      anyIoError = true;
      std::cerr << "error: " << e.what() << "\n";
      continue;
    }
    Dataset dataset;
    try {
      dataset = trig::parseTrig(text);
    } catch (const trig::ParseError& e) {
      anyParseError = true;
      std::cerr << "error: " << path << ": " << e.what() << "\n";
      continue;
    }

    ValidationReport report;
    const std::vector<Term> ids = findPubIds(dataset);
    if (ids.empty()) {
      report.valid = false;
      report.violations.push_back(
          Violation{ViolationCode::MissingAssertionLink,
                    "no hasAssertion link in the default graph",
                    std::nullopt});
    }
    for (const Term& id : ids) {
      ValidationReport one =
          validateNanopub(dataset, id, {}, authoritiesOf(config));
      report.valid = report.valid && one.valid;
      report.violations.insert(report.violations.end(),
                               one.violations.begin(), one.violations.end());
    }

    if (jsonOutput) {
      json violations = json::array();
      for (const Violation& v : report.violations) {
        json entry{{"code", toString(v.code)}, {"message", v.message}};
        if (v.term) entry["term"] = v.term->text();
        violations.push_back(entry);
      }
      std::cout << json{{"file", path},
                        {"valid", report.valid},
                        {"violations", violations}}
                       .dump()
                << "\n";
    } else if (report.valid) {
      std::cout << "PASS " << path << "\n";
    } else {
      std::cout << "FAIL " << path << " " << violationCodes(report) << "\n";
    }
    anyFail = anyFail || !report.valid;
  }
  if (anyIoError) return kExitIo;
  if (anyParseError) return kExitUsage;
  return anyFail ? kExitValidation : kExitOk;
}

int cmdStatus(const Config& config, const std::string& path) {
  const Dataset dataset = trig::parseTrig(readFile(path));
  const Nanopub np = Nanopub::fromDataset(dataset, pubIdOf(dataset), {},
                                          authoritiesOf(config));
  std::cout << toString(formalizationStatus(np)) << "\n";
  return kExitOk;
}

int cmdLink(const Config& config, const std::string& subject,
            const std::string& kind, const std::string& object) {
  ClaimStore store = loadStoreOrEmpty(config);
  store.assertRelation(Term::iri(subject), kind, Term::iri(object));
  saveStore(store, requireStorePath(config));
  return kExitOk;
}

int cmdRelations(const Config& config, const std::string& node,
                 bool jsonOutput) {
  const ClaimStore store = loadStoreOrEmpty(config);
  for (const RelationEdge& edge : store.relationsOf(Term::iri(node))) {
    if (jsonOutput) {
      std::cout << json{{"kind", edge.kind},
                        {"neighbor", edge.neighbor.text()},
                        {"direction", toString(edge.direction)}}
                       .dump()
                << "\n";
    } else {
      std::cout << edge.kind << " <" << edge.neighbor.text() << "> "
                << toString(edge.direction) << "\n";
    }
  }
  return kExitOk;
}

int cmdContradictions(const Config& config) {
  const ClaimStore store = loadStoreOrEmpty(config);
  for (const auto& [a, b] : store.contradictionPairs()) {
    std::cout << "<" << a.text() << "> <" << b.text() << ">\n";
  }
  return kExitOk;
}

int cmdCheck(const Config& config, const std::string& dir) {
  const ClaimStore store = loadStoreOrEmpty(config);

  std::set<std::string> published;
  for (const fs::path& file : trigFilesIn(dir)) {
    try {
      const Dataset dataset = trig::parseTrig(readFile(file));
      for (const Term& id : findPubIds(dataset)) {
        const Nanopub np =
            Nanopub::fromDataset(dataset, id, {}, authoritiesOf(config));
        const Statement s = sentenceOf(np, {}, authoritiesOf(config));
        published.insert(encodeStatement(s).text());
      }
    } catch (const Error& e) {
      std::cerr << "warning: skipping " << file.string() << ": " << e.what()
                << "\n";
    }
  }

  // Only claim endpoints can be backed by nanopub files; agents never are.
  for (const Term& endpoint : store.endpoints()) {
    if (!isStatementUri(endpoint.text(), store.authorities())) continue;
    if (published.count(endpoint.text()) == 0) {
      std::cout << "dangling <" << endpoint.text() << ">\n";
    }
  }
  return kExitOk;
}

int cmdFormalize(const Config& config, const std::string& path) {
  const Dataset dataset = trig::parseTrig(readFile(path));
  const Nanopub np = Nanopub::fromDataset(dataset, pubIdOf(dataset), {},
                                          authoritiesOf(config));
  const cnl::GrammarBundle bundle = grammarOf(config);
  const Nanopub result = autoFormalize(np, bundle.grammar, bundle.lexicon, {},
                                       authoritiesOf(config));
  if (result.dataset() == np.dataset()) {
    std::cout << "NOT-COVERED\n";
    return kExitOk;
  }
  atomicWriteFile(path, trig::serializeTrig(result.dataset()));
  std::cout << "FORMALIZED\n";
  return kExitOk;
}

int cmdStats(const Config& config, const std::string& dir, bool jsonOutput) {
  std::size_t unformalized = 0;
  std::size_t partial = 0;
  std::size_t full = 0;
  std::size_t invalid = 0;
  std::size_t total = 0;

  for (const fs::path& file : trigFilesIn(dir)) {
    ++total;
    try {
      const Dataset dataset = trig::parseTrig(readFile(file));
      const Nanopub np = Nanopub::fromDataset(dataset, pubIdOf(dataset), {},
                                              authoritiesOf(config));
      switch (formalizationStatus(np)) {
        case FormalizationStatus::Unformalized: ++unformalized; break;
        case FormalizationStatus::Partial: ++partial; break;
        case FormalizationStatus::Full: ++full; break;
      }
    } catch (const Error&) {
      ++invalid;
    }
  }

  if (jsonOutput) {
    std::cout << json{{"unformalized", unformalized},
                      {"partial", partial},
                      {"full", full},
                      {"invalid", invalid},
                      {"total", total}}
                     .dump()
              << "\n";
  } else {
    std::cout << "Unformalized: " << unformalized << "\n"
              << "Partial: " << partial << "\n"
              << "Full: " << full << "\n"
              << "INVALID: " << invalid << "\n"
              << "Total: " << total << "\n";
  }
  return invalid > 0 ? kExitValidation : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"unano: mint statement URIs, build and validate "
               "underspecified nanopublications, link claims"};
  app.require_subcommand(1);

  Flags flags;
  app.add_option("--authority", flags.authority,
                 "statement URI authority (default http://statements.org)");
  app.add_option("--mint-namespace", flags.mintNamespace,
                 "namespace for auto-minted term IRIs");
  app.add_option("--mode", flags.mode, "store load mode: strict|lenient");
  app.add_option("--grammar", flags.grammar, "CNL grammar file (.trig)");
  app.add_option("--store", flags.store, "claim store file (.trig)");
  app.add_option("--config", flags.configFile,
                 "config file (default ./unano.trig)");

  std::string lang = "en";
  std::string sentence;
  std::string id;
  std::optional<std::string> formulaPath;
  std::optional<std::string> outPath;
  bool partial = false;
  std::vector<std::string> paths;
  std::string path;
  std::string node;
  std::string subject;
  std::string kind;
  std::string object;
  std::string dir;
  bool jsonValidate = false;
  bool jsonRelations = false;
  bool jsonStats = false;

  CLI::App* encode =
      app.add_subcommand("encode", "print the statement URI of a sentence");
  encode->add_option("--lang", lang, "language tag (default en)");
  encode->add_option("sentence", sentence, "claim sentence")->required();

  CLI::App* newCmd =
      app.add_subcommand("new", "write a nanopub file for a sentence");
  newCmd->add_option("--id", id, "publication IRI")->required();
  newCmd->add_option("--lang", lang, "language tag (default en)");
  newCmd->add_option("sentence", sentence, "claim sentence")->required();
  newCmd->add_option("--formula", formulaPath,
                     "TriG file whose default-graph triples form the body");
  newCmd->add_flag("--partial", partial,
                   "mark the formalization as partial (needs --formula)");
  newCmd->add_option("--out", outPath, "output path (default <id-tail>.trig)");

  CLI::App* validate =
      app.add_subcommand("validate", "check nanopub structure per file");
  validate->add_option("paths", paths, "nanopub files")->required();
  validate->add_flag("--json", jsonValidate, "one JSON object per file");

  CLI::App* status =
      app.add_subcommand("status", "print Unformalized|Partial|Full");
  status->add_option("path", path, "nanopub file")->required();

  CLI::App* link = app.add_subcommand("link", "assert a relation edge");
  link->add_option("subject", subject, "subject IRI")->required();
  link->add_option("kind", kind,
                   "relation kind (contradicts, supports, agrees-with, "
                   "disagrees-with)")
      ->required();
  link->add_option("object", object, "object IRI")->required();

  CLI::App* relations =
      app.add_subcommand("relations", "list the edges of a node");
  relations->add_option("node", node, "node IRI")->required();
  relations->add_flag("--json", jsonRelations, "one JSON object per edge");

  CLI::App* contradictions =
      app.add_subcommand("contradictions", "list contradiction pairs");

  CLI::App* check = app.add_subcommand(
      "check", "list store claims that have no nanopub file in a directory");
  check->add_option("dir", dir, "nanopub directory")->required();

  CLI::App* formalizeCmd = app.add_subcommand(
      "formalize", "fill a nanopub body from its sentence when CNL-covered");
  formalizeCmd->add_option("path", path, "nanopub file")->required();

  CLI::App* stats =
      app.add_subcommand("stats", "count nanopubs per formalization status");
  stats->add_option("dir", dir, "nanopub directory")->required();
  stats->add_flag("--json", jsonStats, "one JSON summary object");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return kExitUsage;
  }

  try {
    const Config config = resolveConfig(flags);
    if (encode->parsed()) return cmdEncode(config, lang, sentence);
    if (newCmd->parsed()) {
      return cmdNew(config, id, lang, sentence, formulaPath, partial,
                    outPath);
    }
    if (validate->parsed()) return cmdValidate(config, paths, jsonValidate);
    if (status->parsed()) return cmdStatus(config, path);
    if (link->parsed()) return cmdLink(config, subject, kind, object);
    if (relations->parsed()) return cmdRelations(config, node, jsonRelations);
    if (contradictions->parsed()) return cmdContradictions(config);
    if (check->parsed()) return cmdCheck(config, dir);
    if (formalizeCmd->parsed()) return cmdFormalize(config, path);
    if (stats->parsed()) return cmdStats(config, dir, jsonStats);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    switch (e.code()) {
      case ErrorCode::IoError: return kExitIo;
      case ErrorCode::InvalidNanopub: return kExitValidation;
      default: return kExitUsage;
    }
  }
  return kExitUsage;
}
