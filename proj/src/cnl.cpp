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

#include "unano/cnl.hpp"

#include <algorithm>
#include <utility>

#include "unano/io.hpp"
#include "unano/statement.hpp"
#include "unano/trig.hpp"

namespace unano::cnl {
namespace {

std::string asciiFold(std::string_view word) {
  std::string out(word);
  for (char& c : out) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return out;
}

std::vector<std::string> splitWords(std::string_view text) {
  std::vector<std::string> words;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(' ', start);
    if (end == std::string_view::npos) end = text.size();
    words.emplace_back(text.substr(start, end - start));
    start = end + 1;
  }
  return words;
}

std::string joinWords(const std::vector<std::string>& words) {
  std::string out;
  for (const std::string& w : words) {
    if (!out.empty()) out += ' ';
    out += w;
  }
  return out;
}

bool wordsMatch(const std::vector<std::string>& sentence, std::size_t at,
                const std::vector<std::string>& fixed, bool caseInsensitive) {
  for (std::size_t k = 0; k < fixed.size(); ++k) {
    const std::string& have = sentence[at + k];
    const std::string& want = fixed[k];
    if (caseInsensitive ? asciiFold(have) != asciiFold(want)
                        : have != want) {
      return false;
    }
  }
  return true;
}

bool isSafeSlugChar(char c) {
  return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') ||
         (c >= '0' && c <= '9') || c == '-' || c == '.' || c == '~';
}

bool isHexDigit(char c) {
  return (c >= '0' && c <= '9') || (c >= 'A' && c <= 'F') ||
         (c >= 'a' && c <= 'f');
}

unsigned hexValue(char c) {
  if (c >= '0' && c <= '9') return static_cast<unsigned>(c - '0');
  if (c >= 'A' && c <= 'F') return static_cast<unsigned>(c - 'A' + 10);
  return static_cast<unsigned>(c - 'a' + 10);
}

struct Candidate {
  const CnlGrammar::Compiled* pattern = nullptr;
  std::string firstSlot;
  std::string secondSlot;
};

}  // namespace

TermLexicon::TermLexicon(std::string mintNamespace)
    : mintNamespace_(std::move(mintNamespace)) {
  Term::iri(mintNamespace_);  // validate
}

void TermLexicon::add(const std::string& phrase, const Term& iri) {
  if (!isNormalizedSentence(phrase)) {
    throw Error(ErrorCode::InvalidLexicon,
                "phrase '" + phrase + "' is not a normalized phrase");
  }
  if (!iri.isIri()) {
    throw Error(ErrorCode::InvalidLexicon,
                "lexicon entries must map phrases to IRIs");
  }
  const std::string key = asciiFold(phrase);
  auto it = byPhrase_.find(key);
  if (it != byPhrase_.end()) {
    if (it->second != iri) {
      throw Error(ErrorCode::InvalidLexicon,
                  "phrase '" + phrase + "' is already bound to " +
                      it->second.text());
    }
  } else {
    byPhrase_.emplace(key, iri);
  }
  preferred_.try_emplace(iri, phrase);  // the first phrase stays preferred
}

std::optional<Term> TermLexicon::lookup(std::string_view phrase) const {
  auto it = byPhrase_.find(asciiFold(phrase));
  if (it == byPhrase_.end()) return std::nullopt;
  return it->second;
}

Term TermLexicon::resolve(std::string_view phrase) const {
  if (auto known = lookup(phrase)) return *known;
  return Term::iri(mintNamespace_ + slug(phrase));
}

std::optional<std::string> TermLexicon::phraseFor(const Term& term) const {
  auto it = preferred_.find(term);
  if (it != preferred_.end()) return it->second;
  if (term.isIri() && term.text().size() > mintNamespace_.size() &&
      term.text().compare(0, mintNamespace_.size(), mintNamespace_) == 0) {
    return unslug(
        std::string_view(term.text()).substr(mintNamespace_.size()));
  }
  return std::nullopt;
}

std::string TermLexicon::slug(std::string_view phrase) {
  constexpr char kHex[] = "0123456789ABCDEF";
  std::string out;
  out.reserve(phrase.size());
  for (char c : phrase) {
    if (c == ' ') {
      out += '_';
    } else if (isSafeSlugChar(c)) {
      out += c;
    } else {
      auto byte = static_cast<unsigned char>(c);
      out += '%';
      out += kHex[byte >> 4];
      out += kHex[byte & 0xF];
    }
  }
  return out;
}

std::optional<std::string> TermLexicon::unslug(std::string_view slug) {
  std::string out;
  out.reserve(slug.size());
  for (std::size_t i = 0; i < slug.size(); ++i) {
    char c = slug[i];
    if (c == '_') {
      out += ' ';
    } else if (c == '%') {
      if (i + 2 >= slug.size() || !isHexDigit(slug[i + 1]) ||
          !isHexDigit(slug[i + 2])) {
        return std::nullopt;
      }
      out += static_cast<char>((hexValue(slug[i + 1]) << 4) |
                               hexValue(slug[i + 2]));
      i += 2;
    } else if (isSafeSlugChar(c)) {
      out += c;
    } else {
      return std::nullopt;
    }
  }
  if (!isNormalizedSentence(out)) return std::nullopt;
  return out;
}

void CnlGrammar::registerPattern(const CnlPattern& pattern) {
  if (!pattern.predicate.isIri()) {
    throw Error(ErrorCode::InvalidTemplate,
                "pattern predicate must be an IRI");
  }
  Compiled compiled;
  compiled.source = pattern;

  enum class Section { Prefix, Middle, Suffix };
  Section section = Section::Prefix;
  bool sawSubject = false;
  bool sawObject = false;
  for (const std::string& token : splitWords(pattern.sentenceTemplate)) {
    if (token.empty()) {
      throw Error(ErrorCode::InvalidTemplate,
                  "template has stray whitespace: '" +
                      pattern.sentenceTemplate + "'");
    }
    if (token == "{S}" || token == "{O}") {
      bool& seen = token == "{S}" ? sawSubject : sawObject;
      if (seen) {
        throw Error(ErrorCode::InvalidTemplate,
                    "slot " + token + " occurs twice in '" +
                        pattern.sentenceTemplate + "'");
      }
      seen = true;
      if (section == Section::Prefix) {
        compiled.subjectFirst = token == "{S}";
        section = Section::Middle;
      } else if (section == Section::Middle) {
        section = Section::Suffix;
      } else {
        throw Error(ErrorCode::InvalidTemplate, "more than two slots");
      }
      continue;
    }
    if (token.find('{') != std::string::npos ||
        token.find('}') != std::string::npos) {
      throw Error(ErrorCode::InvalidTemplate,
                  "malformed slot marker in token '" + token + "'");
    }
    switch (section) {
      case Section::Prefix: compiled.prefix.push_back(token); break;
      case Section::Middle: compiled.middle.push_back(token); break;
      case Section::Suffix: compiled.suffix.push_back(token); break;
    }
  }
  if (!sawSubject || !sawObject) {
    throw Error(ErrorCode::InvalidTemplate,
                "template needs exactly one {S} and one {O}: '" +
                    pattern.sentenceTemplate + "'");
  }
  if (compiled.middle.empty()) {
    throw Error(ErrorCode::InvalidTemplate,
                "slots must be separated by at least one fixed word: '" +
                    pattern.sentenceTemplate + "'");
  }

  // Two patterns are ambiguous iff one sentence can satisfy both fixed-word
  // skeletons. Fixed words of every registered pattern are reserved and so
  // can never hide inside a slot, which reduces the check to aligning the
  // skeletons segment by segment.
  auto segmentsCollide = [&](const std::vector<std::string>& a, bool aFold,
                             const std::vector<std::string>& b, bool bFold) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
      bool fold = aFold || bFold;
      if (fold ? asciiFold(a[i]) != asciiFold(b[i]) : a[i] != b[i]) {
        return false;
      }
    }
    return true;
  };
  for (const Compiled& other : compiled_) {
    const bool aFold = compiled.source.caseInsensitiveFixedText;
    const bool bFold = other.source.caseInsensitiveFixedText;
    if (segmentsCollide(compiled.prefix, aFold, other.prefix, bFold) &&
        segmentsCollide(compiled.middle, aFold, other.middle, bFold) &&
        segmentsCollide(compiled.suffix, aFold, other.suffix, bFold)) {
      // Build a witness with filler words that are not reserved anywhere.
      auto filler = [&](int salt) {
        std::string w = "thing" + std::to_string(salt);
        while (reserved_.count(asciiFold(w)) != 0) w += "x";
        return w;
      };
      std::vector<std::string> witness = compiled.prefix;
      witness.push_back(filler(1));
      witness.insert(witness.end(), compiled.middle.begin(),
                     compiled.middle.end());
      witness.push_back(filler(2));
      witness.insert(witness.end(), compiled.suffix.begin(),
                     compiled.suffix.end());
      throw Error(ErrorCode::AmbiguousPattern,
                  "'" + pattern.sentenceTemplate + "' collides with '" +
                      other.source.sentenceTemplate + "'; witness: \"" +
                      joinWords(witness) + "\"");
    }
  }

  for (const auto* segment :
       {&compiled.prefix, &compiled.middle, &compiled.suffix}) {
    for (const std::string& word : *segment) {
      reserved_.insert(asciiFold(word));
    }
  }
  patterns_.push_back(pattern);
  compiled_.push_back(std::move(compiled));
}

namespace {

void collectCandidates(const CnlGrammar& grammar,
                       const std::vector<std::string>& words,
                       std::vector<Candidate>& out) {
  const std::set<std::string>& reserved = grammar.reservedWords();
  auto slotOk = [&](std::size_t from, std::size_t to) {
    if (from >= to) return false;
    for (std::size_t i = from; i < to; ++i) {
      if (words[i].empty() || reserved.count(asciiFold(words[i])) != 0) {
        return false;
      }
    }
    return true;
  };

  for (const CnlGrammar::Compiled& p : grammar.compiled()) {
    const std::size_t fixed =
        p.prefix.size() + p.middle.size() + p.suffix.size();
    if (words.size() < fixed + 2) continue;
    const bool fold = p.source.caseInsensitiveFixedText;
    if (!p.prefix.empty() && !wordsMatch(words, 0, p.prefix, fold)) continue;
    const std::size_t sufStart = words.size() - p.suffix.size();
    if (!p.suffix.empty() && !wordsMatch(words, sufStart, p.suffix, fold)) {
      continue;
    }
    const std::size_t firstSlotStart = p.prefix.size();
    for (std::size_t mid = firstSlotStart + 1;
         mid + p.middle.size() + 1 <= sufStart; ++mid) {
      if (!wordsMatch(words, mid, p.middle, fold)) continue;
      if (!slotOk(firstSlotStart, mid)) continue;
      if (!slotOk(mid + p.middle.size(), sufStart)) continue;
      Candidate c;
      c.pattern = &p;
      c.firstSlot = joinWords(std::vector<std::string>(
          words.begin() + static_cast<std::ptrdiff_t>(firstSlotStart),
          words.begin() + static_cast<std::ptrdiff_t>(mid)));
      c.secondSlot = joinWords(std::vector<std::string>(
          words.begin() + static_cast<std::ptrdiff_t>(mid + p.middle.size()),
          words.begin() + static_cast<std::ptrdiff_t>(sufStart)));
      out.push_back(std::move(c));
    }
  }
}

}  // namespace

std::optional<Triple> parseCnl(const CnlGrammar& grammar,
                               const TermLexicon& lexicon,
                               std::string_view sentence) {
  if (sentence.empty()) {
    throw Error(ErrorCode::EmptySentence, "cannot parse an empty sentence");
  }
  const std::vector<std::string> words = splitWords(sentence);
  for (const std::string& w : words) {
    if (w.empty()) return std::nullopt;  // not in normalized form
  }

  std::vector<Candidate> candidates;
  collectCandidates(grammar, words, candidates);
  if (candidates.size() != 1) return std::nullopt;

  const Candidate& c = candidates.front();
  const std::string& subjectPhrase =
      c.pattern->subjectFirst ? c.firstSlot : c.secondSlot;
  const std::string& objectPhrase =
      c.pattern->subjectFirst ? c.secondSlot : c.firstSlot;
  return Triple{lexicon.resolve(subjectPhrase), c.pattern->source.predicate,
                lexicon.resolve(objectPhrase)};
}

std::optional<std::string> verbalize(const CnlGrammar& grammar,
                                     const TermLexicon& lexicon,
                                     const Triple& triple) {
  const CnlGrammar::Compiled* pattern = nullptr;
  for (const CnlGrammar::Compiled& p : grammar.compiled()) {
    if (p.source.predicate == triple.predicate) {
      pattern = &p;
      break;
    }
  }
  if (!pattern) return std::nullopt;

  std::optional<std::string> subjectPhrase = lexicon.phraseFor(triple.subject);
  std::optional<std::string> objectPhrase = lexicon.phraseFor(triple.object);
  if (!subjectPhrase || !objectPhrase) return std::nullopt;

  // The sentence must parse back to exactly this triple: phrases with
  // reserved words or phrases that resolve elsewhere are not expressible.
  auto expressible = [&](const std::string& phrase, const Term& term) {
    for (const std::string& w : splitWords(phrase)) {
      if (w.empty() || grammar.reservedWords().count(asciiFold(w)) != 0) {
        return false;
      }
    }
    return lexicon.resolve(phrase) == term;
  };
  if (!expressible(*subjectPhrase, triple.subject) ||
      !expressible(*objectPhrase, triple.object)) {
    return std::nullopt;
  }

  std::vector<std::string> words = pattern->prefix;
  words.push_back(pattern->subjectFirst ? *subjectPhrase : *objectPhrase);
  words.insert(words.end(), pattern->middle.begin(), pattern->middle.end());
  words.push_back(pattern->subjectFirst ? *objectPhrase : *subjectPhrase);
  words.insert(words.end(), pattern->suffix.begin(), pattern->suffix.end());
  return joinWords(words);
}

Nanopub autoFormalize(const Nanopub& np, const CnlGrammar& grammar,
                      const TermLexicon& lexicon, const Vocabulary& vocab,
                      const std::vector<std::string>& authorities) {
  if (formalizationStatus(np, vocab) != FormalizationStatus::Unformalized) {
    throw Error(ErrorCode::AlreadyFormalized,
                np.pubId().text() + " already carries a formalization");
  }
  const Statement statement = sentenceOf(np, vocab, authorities);
  std::optional<Triple> triple = parseCnl(grammar, lexicon, statement.sentence);
  if (!triple) return np;
  return formalize(np, {*triple}, /*partial=*/false, vocab);
}

CnlGrammar defaultGrammar() {
  const std::string ns(kPredicateNamespace);
  CnlGrammar grammar;
  grammar.registerPattern({"is-transmitted-by", "{S} is transmitted by {O}",
                           Term::iri(ns + "isTransmittedBy"), false});
  grammar.registerPattern(
      {"causes", "{S} causes {O}", Term::iri(ns + "causes"), false});
  grammar.registerPattern(
      {"is-a", "{S} is a {O}", Term::iri(ns + "isA"), false});
  grammar.registerPattern({"is-associated-with", "{S} is associated with {O}",
                           Term::iri(ns + "isAssociatedWith"), false});
  grammar.registerPattern(
      {"inhibits", "{S} inhibits {O}", Term::iri(ns + "inhibits"), false});
  return grammar;
}

GrammarBundle loadGrammar(const Dataset& dataset, std::string mintNamespace) {
  const std::string ns(kCnlNamespace);
  const Term templateP = Term::iri(ns + "template");
  const Term predicateP = Term::iri(ns + "predicate");
  const Term idP = Term::iri(ns + "id");
  const Term caseP = Term::iri(ns + "caseInsensitive");
  const Term phraseP = Term::iri(ns + "phrase");

  GrammarBundle bundle{CnlGrammar{}, TermLexicon(std::move(mintNamespace))};

  std::map<Term, CnlPattern> patterns;  // keyed by subject, sorted
  for (const Triple& t : dataset.graphOf(Term::defaultGraph())) {
    if (t.predicate == phraseP) {
      if (!t.object.isLiteral()) {
        throw Error(ErrorCode::InvalidLexicon,
                    "cnl:phrase of " + t.subject.text() +
                        " must be a string literal");
      }
      bundle.lexicon.add(t.object.text(), t.subject);
      continue;
    }
    if (t.predicate != templateP && t.predicate != predicateP &&
        t.predicate != idP && t.predicate != caseP) {
      continue;  // unrelated vocabulary is allowed in grammar files
    }
    CnlPattern& p = patterns.try_emplace(t.subject).first->second;
    if (t.predicate == templateP) {
      if (!t.object.isLiteral()) {
        throw Error(ErrorCode::InvalidTemplate,
                    "cnl:template of " + t.subject.text() +
                        " must be a string literal");
      }
      p.sentenceTemplate = t.object.text();
    } else if (t.predicate == predicateP) {
      if (!t.object.isIri()) {
        throw Error(ErrorCode::InvalidTemplate,
                    "cnl:predicate of " + t.subject.text() +
                        " must be an IRI");
      }
      p.predicate = t.object;
    } else if (t.predicate == idP) {
      p.id = t.object.text();
    } else {
      p.caseInsensitiveFixedText =
          t.object == Term::literal("true", vocab::xsdBoolean());
    }
  }
  for (auto& [subject, pattern] : patterns) {
    if (pattern.sentenceTemplate.empty() || !pattern.predicate.isIri()) {
      throw Error(ErrorCode::InvalidTemplate,
                  subject.text() +
                      " needs both cnl:template and cnl:predicate");
    }
    if (pattern.id.empty()) pattern.id = subject.text();
    bundle.grammar.registerPattern(pattern);
  }
  return bundle;
}

GrammarBundle loadGrammarFile(const std::filesystem::path& path,
                              std::string mintNamespace) {
  return loadGrammar(trig::parseTrig(readFile(path)),
                     std::move(mintNamespace));
}

}  // namespace unano::cnl
