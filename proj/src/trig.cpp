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

#include "unano/trig.hpp"

#include <cctype>
#include <sstream>
#include <utility>

namespace unano::trig {
namespace {

bool isAsciiAlpha(char c) {
  return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z');
}

bool isDigit(char c) { return c >= '0' && c <= '9'; }

bool isPrefixLabelChar(char c) {
  return isAsciiAlpha(c) || isDigit(c) || c == '_' || c == '-';
}

// Local-name characters. Wider than standard prefixed names: '/' and '+'
// are accepted so statement URIs can be written as prefixed names.
bool isLocalChar(char c) {
  return isAsciiAlpha(c) || isDigit(c) || c == '_' || c == '-' || c == '~' ||
         c == '+' || c == '/' || c == '.';
}

bool isHexDigit(char c) {
  return isDigit(c) || (c >= 'A' && c <= 'F') || (c >= 'a' && c <= 'f');
}

unsigned hexValue(char c) {
  if (c >= '0' && c <= '9') return static_cast<unsigned>(c - '0');
  if (c >= 'A' && c <= 'F') return static_cast<unsigned>(c - 'A' + 10);
  return static_cast<unsigned>(c - 'a' + 10);
}

void appendUtf8(std::string& out, unsigned code) {
  if (code < 0x80) {
    out += static_cast<char>(code);
  } else if (code < 0x800) {
    out += static_cast<char>(0xC0 | (code >> 6));
    out += static_cast<char>(0x80 | (code & 0x3F));
  } else if (code < 0x10000) {
    out += static_cast<char>(0xE0 | (code >> 12));
    out += static_cast<char>(0x80 | ((code >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (code & 0x3F));
  } else {
    out += static_cast<char>(0xF0 | (code >> 18));
    out += static_cast<char>(0x80 | ((code >> 12) & 0x3F));
    out += static_cast<char>(0x80 | ((code >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (code & 0x3F));
  }
}

enum class TokenKind {
  Eof,
  Dot,
  Semicolon,
  Comma,
  LBrace,
  RBrace,
  HatHat,
  IriRef,       // value: text between the angle brackets (may be empty)
  PName,        // value: prefix label, value2: local part
  BlankLabel,   // value: label
  String,       // value: decoded characters
  Integer,      // value: lexical form
  LangTag,      // value: tag without '@'
  PrefixDirective,
};

const char* tokenKindName(TokenKind k) {
  switch (k) {
    case TokenKind::Eof: return "end of input";
    case TokenKind::Dot: return "'.'";
    case TokenKind::Semicolon: return "';'";
    case TokenKind::Comma: return "','";
    case TokenKind::LBrace: return "'{'";
    case TokenKind::RBrace: return "'}'";
    case TokenKind::HatHat: return "'^^'";
    case TokenKind::IriRef: return "IRI";
    case TokenKind::PName: return "prefixed name";
    case TokenKind::BlankLabel: return "blank node label";
    case TokenKind::String: return "string literal";
    case TokenKind::Integer: return "integer";
    case TokenKind::LangTag: return "language tag";
    case TokenKind::PrefixDirective: return "'@prefix'";
  }
  return "token";
}

struct Token {
  TokenKind kind = TokenKind::Eof;
  std::string value;
  std::string value2;
  std::size_t line = 1;
  std::size_t column = 1;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  Token next() {
    skipWhitespaceAndComments();
    Token tok;
    tok.line = line_;
    tok.column = column_;
    if (atEnd()) {
      tok.kind = TokenKind::Eof;
      return tok;
    }
    char c = peek();
    switch (c) {
      case '.': advance(); tok.kind = TokenKind::Dot; return tok;
      case ';': advance(); tok.kind = TokenKind::Semicolon; return tok;
      case ',': advance(); tok.kind = TokenKind::Comma; return tok;
      case '{': advance(); tok.kind = TokenKind::LBrace; return tok;
      case '}': advance(); tok.kind = TokenKind::RBrace; return tok;
      case '<': return lexIriRef(tok);
      case '"': return lexString(tok);
      case '@': return lexAtWord(tok);
      case '_': return lexBlankLabel(tok);
      case '^':
        advance();
        if (atEnd() || peek() != '^') {
          fail(tok, "expected '^^'");
        }
        advance();
        tok.kind = TokenKind::HatHat;
        return tok;
      default:
        if (isDigit(c) || c == '+' || c == '-') return lexInteger(tok);
        if (isAsciiAlpha(c) || c == ':') return lexPName(tok);
        fail(tok, std::string("unexpected character '") + c + "'");
    }
    return tok;  // unreachable
  }

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  [[noreturn]] void fail(const Token& at, const std::string& message,
                         std::vector<std::string> expected = {},
                         ErrorCode code = ErrorCode::ParseSyntax) const {
    throw ParseError(code, at.line, at.column, message, std::move(expected));
  }

  bool atEnd() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  char peekAt(std::size_t offset) const {
    return pos_ + offset < text_.size() ? text_[pos_ + offset] : '\0';
  }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  void skipWhitespaceAndComments() {
    while (!atEnd()) {
      char c = peek();
      if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        advance();
      } else if (c == '#') {
        while (!atEnd() && peek() != '\n') advance();
      } else {
        break;
      }
    }
  }

  unsigned lexHexEscape(const Token& tok, unsigned digits) {
    unsigned code = 0;
    for (unsigned k = 0; k < digits; ++k) {
      if (atEnd() || !isHexDigit(peek())) {
        fail(tok, "invalid \\u escape");
      }
      code = (code << 4) | hexValue(peek());
      advance();
    }
    if (code > 0x10FFFF || (code >= 0xD800 && code <= 0xDFFF)) {
      fail(tok, "escape is not a Unicode scalar value");
    }
    return code;
  }

  Token lexIriRef(Token tok) {
    advance();  // '<'
    std::string value;
    while (true) {
      if (atEnd()) fail(tok, "unterminated IRI", {"'>'"});
      char c = peek();
      if (c == '>') {
        advance();
        break;
      }
      if (c == '\\') {
        advance();
        if (atEnd()) fail(tok, "unterminated escape in IRI");
        char e = peek();
        if (e == 'u') {
          advance();
          appendUtf8(value, lexHexEscape(tok, 4));
        } else if (e == 'U') {
          advance();
          appendUtf8(value, lexHexEscape(tok, 8));
        } else {
          fail(tok, "invalid escape in IRI (only \\u and \\U are allowed)");
        }
        continue;
      }
      auto uc = static_cast<unsigned char>(c);
      if (uc <= 0x20 || uc == 0x7F || c == '<' || c == '"' || c == '{' ||
          c == '}' || c == '|' || c == '^' || c == '`') {
        fail(tok, "forbidden character in IRI");
      }
      value += c;
      advance();
    }
    tok.kind = TokenKind::IriRef;
    tok.value = std::move(value);
    return tok;
  }

  Token lexString(Token tok) {
    advance();  // '"'
    std::string value;
    while (true) {
      if (atEnd()) fail(tok, "unterminated string literal", {"'\"'"});
      char c = peek();
      if (c == '"') {
        advance();
        break;
      }
      if (c == '\n' || c == '\r') {
        fail(tok, "raw line break in string literal (escape it as \\n)");
      }
      if (c == '\\') {
        advance();
        if (atEnd()) fail(tok, "unterminated escape in string literal");
        char e = peek();
        switch (e) {
          case 't': value += '\t'; advance(); break;
          case 'b': value += '\b'; advance(); break;
          case 'n': value += '\n'; advance(); break;
          case 'r': value += '\r'; advance(); break;
          case 'f': value += '\f'; advance(); break;
          case '"': value += '"'; advance(); break;
          case '\'': value += '\''; advance(); break;
          case '\\': value += '\\'; advance(); break;
          case 'u':
            advance();
            appendUtf8(value, lexHexEscape(tok, 4));
            break;
          case 'U':
            advance();
            appendUtf8(value, lexHexEscape(tok, 8));
            break;
          default:
            fail(tok, "invalid escape sequence in string literal");
        }
        continue;
      }
      value += c;
      advance();
    }
    tok.kind = TokenKind::String;
    tok.value = std::move(value);
    return tok;
  }

  Token lexAtWord(Token tok) {
    advance();  // '@'
    std::string word;
    while (!atEnd() && (isAsciiAlpha(peek()) || isDigit(peek()) ||
                        peek() == '-')) {
      word += peek();
      advance();
    }
    if (word == "prefix") {
      tok.kind = TokenKind::PrefixDirective;
      return tok;
    }
    if (word.empty() || !isAsciiAlpha(word[0])) {
      fail(tok, "expected language tag or '@prefix'");
    }
    tok.kind = TokenKind::LangTag;
    tok.value = std::move(word);
    return tok;
  }

  Token lexBlankLabel(Token tok) {
    advance();  // '_'
    if (atEnd() || peek() != ':') {
      fail(tok, "expected ':' after '_' in blank node label");
    }
    advance();
    std::string label;
    while (!atEnd() && (isAsciiAlpha(peek()) || isDigit(peek()) ||
                        peek() == '_')) {
      label += peek();
      advance();
    }
    if (label.empty()) fail(tok, "empty blank node label");
    tok.kind = TokenKind::BlankLabel;
    tok.value = std::move(label);
    return tok;
  }

  Token lexInteger(Token tok) {
    std::string lexical;
    if (peek() == '+' || peek() == '-') {
      lexical += peek();
      advance();
    }
    if (atEnd() || !isDigit(peek())) {
      fail(tok, "expected digits in integer literal");
    }
    while (!atEnd() && isDigit(peek())) {
      lexical += peek();
      advance();
    }
    if (!atEnd()) {
      char c = peek();
      bool delimiter = c == ' ' || c == '\t' || c == '\r' || c == '\n' ||
                       c == '.' || c == ';' || c == ',' || c == '}' ||
                       c == '#';
      if (!delimiter) fail(tok, "invalid integer literal");
    }
    tok.kind = TokenKind::Integer;
    tok.value = std::move(lexical);
    return tok;
  }

  Token lexPName(Token tok) {
    std::string prefix;
    if (isAsciiAlpha(peek())) {
      prefix += peek();
      advance();
      while (!atEnd() && isPrefixLabelChar(peek())) {
        prefix += peek();
        advance();
      }
    }
    if (atEnd() || peek() != ':') {
      fail(tok, "expected ':' in prefixed name (bare words are not valid)");
    }
    advance();  // ':'
    std::string local;
    while (!atEnd()) {
      char c = peek();
      if (c == '%') {
        if (!isHexDigit(peekAt(1)) || !isHexDigit(peekAt(2))) {
          fail(tok, "'%' in a local name must start a %XX escape");
        }
        local += c;
        advance();
        local += peek();
        advance();
        local += peek();
        advance();
        continue;
      }
      if (!isLocalChar(c)) break;
      // A '.' is part of the local name only when more local characters
      // follow; otherwise it terminates the statement.
      if (c == '.' && !(isLocalChar(peekAt(1)) || peekAt(1) == '%')) break;
      local += c;
      advance();
    }
    tok.kind = TokenKind::PName;
    tok.value = std::move(prefix);
    tok.value2 = std::move(local);
    return tok;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

class Parser {
 public:
  Parser(std::string_view text, std::optional<std::string> baseIri)
      : lexer_(text), baseIri_(std::move(baseIri)) {
    lookahead_ = lexer_.next();
  }

  Dataset run() {
    while (lookahead_.kind != TokenKind::Eof) {
      if (lookahead_.kind == TokenKind::PrefixDirective) {
        parsePrefixDirective();
        continue;
      }
      parseBlockOrTriples();
    }
    return std::move(dataset_);
  }

 private:
  [[noreturn]] void fail(const Token& at, const std::string& message,
                         std::vector<std::string> expected = {},
                         ErrorCode code = ErrorCode::ParseSyntax) const {
    throw ParseError(code, at.line, at.column, message, std::move(expected));
  }

  Token consume() {
    Token tok = std::move(lookahead_);
    lookahead_ = lexer_.next();
    return tok;
  }

  Token expect(TokenKind kind) {
    if (lookahead_.kind != kind) {
      fail(lookahead_,
           std::string("expected ") + tokenKindName(kind) + ", found " +
               tokenKindName(lookahead_.kind),
           {tokenKindName(kind)});
    }
    return consume();
  }

  void parsePrefixDirective() {
    consume();  // '@prefix'
    Token name = expect(TokenKind::PName);
    if (!name.value2.empty()) {
      fail(name, "prefix declaration must end with a bare ':'");
    }
    Token ns = expect(TokenKind::IriRef);
    Term nsTerm = iriFromRef(ns);
    expect(TokenKind::Dot);
    dataset_.setPrefix(name.value, nsTerm.text());
  }

  // Either `label { ... }` or a default-graph statement.
  void parseBlockOrTriples() {
    Token head = lookahead_;
    if (head.kind != TokenKind::IriRef && head.kind != TokenKind::PName &&
        head.kind != TokenKind::BlankLabel) {
      fail(head,
           std::string("expected a statement or graph block, found ") +
               tokenKindName(head.kind),
           {"'@prefix'", "IRI", "prefixed name", "blank node label"});
    }
    consume();
    if (lookahead_.kind == TokenKind::LBrace) {
      parseGraphBlock(head);
      return;
    }
    Term subject = termForSubject(head);
    parsePredicateObjectList(subject, Term::defaultGraph());
    expect(TokenKind::Dot);
  }

  void parseGraphBlock(const Token& label) {
    Term graph = Term::defaultGraph();
    if (label.kind == TokenKind::IriRef) {
      if (!label.value.empty()) graph = iriFromRef(label);
      // `<> { ... }` keeps the default graph.
    } else if (label.kind == TokenKind::PName) {
      graph = expandPName(label);
    } else {
      graph = blankFromToken(label);
    }
    expect(TokenKind::LBrace);
    while (lookahead_.kind != TokenKind::RBrace) {
      if (lookahead_.kind == TokenKind::Eof) {
        fail(lookahead_, "unterminated graph block", {"'}'"});
      }
      Token head = lookahead_;
      if (head.kind != TokenKind::IriRef && head.kind != TokenKind::PName &&
          head.kind != TokenKind::BlankLabel) {
        fail(head,
             std::string("expected a statement, found ") +
                 tokenKindName(head.kind),
             {"IRI", "prefixed name", "blank node label", "'}'"});
      }
      consume();
      Term subject = termForSubject(head);
      parsePredicateObjectList(subject, graph);
      if (lookahead_.kind == TokenKind::Dot) {
        consume();
      } else if (lookahead_.kind != TokenKind::RBrace) {
        fail(lookahead_,
             std::string("expected '.' or '}', found ") +
                 tokenKindName(lookahead_.kind),
             {"'.'", "'}'"});
      }
    }
    consume();  // '}'
  }

  void parsePredicateObjectList(const Term& subject, const Term& graph) {
    while (true) {
      Token predTok = lookahead_;
      if (predTok.kind != TokenKind::IriRef &&
          predTok.kind != TokenKind::PName) {
        fail(predTok,
             std::string("expected a predicate IRI, found ") +
                 tokenKindName(predTok.kind),
             {"IRI", "prefixed name"});
      }
      consume();
      Term predicate = predTok.kind == TokenKind::IriRef
                           ? iriFromRef(predTok)
                           : expandPName(predTok);
      while (true) {
        Term object = parseObject();
        addQuad(predTok, subject, predicate, object, graph);
        if (lookahead_.kind != TokenKind::Comma) break;
        consume();
      }
      if (lookahead_.kind != TokenKind::Semicolon) break;
      consume();
      // Tolerate a dangling ';' before the statement terminator.
      if (lookahead_.kind != TokenKind::IriRef &&
          lookahead_.kind != TokenKind::PName) {
        break;
      }
    }
  }

  Term parseObject() {
    Token tok = lookahead_;
    switch (tok.kind) {
      case TokenKind::IriRef:
        consume();
        return iriFromRef(tok);
      case TokenKind::PName:
        consume();
        return expandPName(tok);
      case TokenKind::BlankLabel:
        consume();
        return blankFromToken(tok);
      case TokenKind::Integer:
        consume();
        return Term::literal(tok.value, vocab::xsdInteger());
      case TokenKind::String: {
        consume();
        if (lookahead_.kind == TokenKind::HatHat) {
          consume();
          Token dtTok = lookahead_;
          if (dtTok.kind != TokenKind::IriRef &&
              dtTok.kind != TokenKind::PName) {
            fail(dtTok, "expected a datatype IRI after '^^'",
                 {"IRI", "prefixed name"});
          }
          consume();
          Term datatype = dtTok.kind == TokenKind::IriRef
                              ? iriFromRef(dtTok)
                              : expandPName(dtTok);
          if (datatype == vocab::rdfLangString()) {
            fail(dtTok, "rdf:langString literals must use an @tag");
          }
          return makeTerm(dtTok,
                          [&] { return Term::literal(tok.value, datatype); });
        }
        if (lookahead_.kind == TokenKind::LangTag) {
          Token lang = consume();
          return makeTerm(lang, [&] {
            return Term::langLiteral(tok.value, lang.value);
          });
        }
        return Term::literal(tok.value);
      }
      default:
        fail(tok,
             std::string("expected an object term, found ") +
                 tokenKindName(tok.kind),
             {"IRI", "prefixed name", "blank node label", "literal"});
    }
  }

  Term termForSubject(const Token& tok) {
    switch (tok.kind) {
      case TokenKind::IriRef: return iriFromRef(tok);
      case TokenKind::PName: return expandPName(tok);
      default: return blankFromToken(tok);
    }
  }

  Term blankFromToken(const Token& tok) {
    return makeTerm(tok, [&] { return Term::blankNode(tok.value); });
  }

  Term iriFromRef(const Token& tok) {
    if (tok.value.empty()) {
      if (!baseIri_) {
        fail(tok, "'<>' used but no base IRI was provided", {},
             ErrorCode::BaseRequired);
      }
      return makeTerm(tok, [&] { return Term::iri(*baseIri_); });
    }
    return makeTerm(tok, [&] { return Term::iri(tok.value); });
  }

  Term expandPName(const Token& tok) {
    auto it = dataset_.prefixes().find(tok.value);
    if (it == dataset_.prefixes().end()) {
      fail(tok, "undeclared prefix '" + tok.value + ":'", {},
           ErrorCode::UnknownPrefix);
    }
    return makeTerm(tok, [&] { return Term::iri(it->second + tok.value2); });
  }

  // Converts Term factory failures into positioned parse errors.
  template <typename Make>
  Term makeTerm(const Token& tok, Make make) {
    try {
      return make();
    } catch (const Error& e) {
      fail(tok, e.what(), {},
           e.code() == ErrorCode::InvalidIri ? ErrorCode::InvalidIri
                                             : ErrorCode::ParseSyntax);
    }
  }

  void addQuad(const Token& at, const Term& subject, const Term& predicate,
               const Term& object, const Term& graph) {
    try {
      dataset_.insert(Quad(subject, predicate, object, graph));
    } catch (const Error& e) {
      fail(at, e.what());
    }
  }

  Lexer lexer_;
  std::optional<std::string> baseIri_;
  Token lookahead_;
  Dataset dataset_;
};

bool isValidLocalName(std::string_view local) {
  for (std::size_t i = 0; i < local.size(); ++i) {
    char c = local[i];
    if (c == '%') {
      if (i + 2 >= local.size() || !isHexDigit(local[i + 1]) ||
          !isHexDigit(local[i + 2])) {
        return false;
      }
      i += 2;
      continue;
    }
    if (!isLocalChar(c)) return false;
  }
  // A trailing '.' would be consumed as the statement terminator.
  return local.empty() || local.back() != '.';
}

std::string renderIri(const std::string& text, const Dataset& dataset) {
  const std::string* bestLabel = nullptr;
  const std::string* bestNs = nullptr;
  for (const auto& [label, ns] : dataset.prefixes()) {
    if (bestNs && ns.size() <= bestNs->size()) continue;
    if (text.size() < ns.size() || text.compare(0, ns.size(), ns) != 0) {
      continue;
    }
    if (!isValidLocalName(std::string_view(text).substr(ns.size()))) continue;
    bestLabel = &label;
    bestNs = &ns;
  }
  if (bestLabel) {
    return *bestLabel + ":" + text.substr(bestNs->size());
  }
  return "<" + text + ">";
}

bool isIntegerLexical(const std::string& s) {
  std::size_t i = (!s.empty() && (s[0] == '+' || s[0] == '-')) ? 1 : 0;
  if (i >= s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!isDigit(s[i])) return false;
  }
  return true;
}

void renderStringEscaped(const std::string& value, std::string& out) {
  out += '"';
  for (char c : value) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default: {
        auto uc = static_cast<unsigned char>(c);
        if (uc < 0x20) {
          constexpr char kHex[] = "0123456789ABCDEF";
          out += "\\u00";
          out += kHex[uc >> 4];
          out += kHex[uc & 0xF];
        } else {
          out += c;
        }
      }
    }
  }
  out += '"';
}

std::string renderTerm(const Term& term, const Dataset& dataset) {
  switch (term.kind()) {
    case TermKind::DefaultGraph:
      return "<>";
    case TermKind::Iri:
      return renderIri(term.text(), dataset);
    case TermKind::BlankNode:
      return "_:" + term.text();
    case TermKind::Literal: {
      if (term.datatype() == vocab::xsdInteger().text() &&
          isIntegerLexical(term.text())) {
        return term.text();
      }
      std::string out;
      renderStringEscaped(term.text(), out);
      if (term.datatype() == vocab::rdfLangString().text()) {
        out += "@" + term.language();
      } else if (term.datatype() != vocab::xsdString().text()) {
        out += "^^" + renderIri(term.datatype(), dataset);
      }
      return out;
    }
  }
  return {};
}

void renderGraph(const Dataset& dataset, const Term& graph,
                 std::string& out) {
  const std::set<Triple> triples = dataset.graphOf(graph);
  out += renderTerm(graph, dataset);
  out += " {\n";
  auto it = triples.begin();
  while (it != triples.end()) {
    out += "  " + renderTerm(it->subject, dataset);
    const Term subject = it->subject;
    bool firstPredicate = true;
    while (it != triples.end() && it->subject == subject) {
      const Term predicate = it->predicate;
      out += firstPredicate ? " " : " ;\n      ";
      firstPredicate = false;
      out += renderTerm(predicate, dataset);
      bool firstObject = true;
      while (it != triples.end() && it->subject == subject &&
             it->predicate == predicate) {
        out += firstObject ? " " : " , ";
        firstObject = false;
        out += renderTerm(it->object, dataset);
        ++it;
      }
    }
    out += " .\n";
  }
  out += "}\n";
}

}  // namespace

Dataset parseTrig(std::string_view text,
                  const std::optional<std::string>& baseIri) {
  if (baseIri) {
    Term::iri(*baseIri);  // validate up front
  }
  Parser parser(text, baseIri);
  return parser.run();
}

std::string serializeTrig(const Dataset& dataset) {
  std::string out;
  for (const auto& [label, ns] : dataset.prefixes()) {
    out += "@prefix " + label + ": <" + ns + "> .\n";
  }
  const std::vector<Term> graphs = dataset.graphNames();
  if (!dataset.prefixes().empty() && !graphs.empty()) {
    out += "\n";
  }
  for (const Term& graph : graphs) {
    renderGraph(dataset, graph, out);
  }
  return out;
}

}  // namespace unano::trig
