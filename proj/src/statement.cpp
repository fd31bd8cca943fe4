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

#include "unano/statement.hpp"

#include <unicode/unorm2.h>
#include <unicode/ustring.h>
#include <unicode/utypes.h>

#include <cstdint>

namespace unano {
namespace {

bool isAsciiWhitespace(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}

// Characters kept verbatim by the sentence encoding. '+' is reserved for
// encoded spaces and is escaped when it occurs literally.
bool isSafeSentenceChar(char c) {
  return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') ||
         (c >= '0' && c <= '9') || c == '-' || c == '_' || c == '.' ||
         c == '~';
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

void appendPercentEscaped(std::string& out, unsigned char byte) {
  constexpr char kHex[] = "0123456789ABCDEF";
  out += '%';
  out += kHex[byte >> 4];
  out += kHex[byte & 0xF];
}

// Validates UTF-8 and counts code points; returns false on malformed input.
bool utf8Check(std::string_view text, std::size_t* codePoints) {
  std::size_t count = 0;
  std::size_t i = 0;
  while (i < text.size()) {
    auto b0 = static_cast<unsigned char>(text[i]);
    std::size_t len;
    std::uint32_t code;
    if (b0 < 0x80) {
      len = 1;
      code = b0;
    } else if ((b0 & 0xE0) == 0xC0) {
      len = 2;
      code = b0 & 0x1F;
    } else if ((b0 & 0xF0) == 0xE0) {
      len = 3;
      code = b0 & 0x0F;
    } else if ((b0 & 0xF8) == 0xF0) {
      len = 4;
      code = b0 & 0x07;
    } else {
      return false;
    }
    if (i + len > text.size()) return false;
    for (std::size_t k = 1; k < len; ++k) {
      auto b = static_cast<unsigned char>(text[i + k]);
      if ((b & 0xC0) != 0x80) return false;
      code = (code << 6) | (b & 0x3F);
    }
    // Reject overlong forms, surrogates, and out-of-range values.
    if ((len == 2 && code < 0x80) || (len == 3 && code < 0x800) ||
        (len == 4 && code < 0x10000) || code > 0x10FFFF ||
        (code >= 0xD800 && code <= 0xDFFF)) {
      return false;
    }
    i += len;
    ++count;
  }
  if (codePoints) *codePoints = count;
  return true;
}

std::string percentEncodeSentence(std::string_view sentence) {
  std::string out;
  out.reserve(sentence.size());
  for (char c : sentence) {
    if (c == ' ') {
      out += '+';
    } else if (c == '+' || c == '%' || !isSafeSentenceChar(c)) {
      appendPercentEscaped(out, static_cast<unsigned char>(c));
    } else {
      out += c;
    }
  }
  return out;
}

std::string percentDecodeSentence(std::string_view payload,
                                  std::string_view iri) {
  std::string out;
  out.reserve(payload.size());
  for (std::size_t i = 0; i < payload.size(); ++i) {
    char c = payload[i];
    if (c == '+') {
      out += ' ';
    } else if (c == '%') {
      if (i + 2 >= payload.size() || !isHexDigit(payload[i + 1]) ||
          !isHexDigit(payload[i + 2])) {
        throw Error(ErrorCode::BadPercentEscape,
                    "truncated or malformed percent escape in <" +
                        std::string(iri) + ">");
      }
      out += static_cast<char>((hexValue(payload[i + 1]) << 4) |
                               hexValue(payload[i + 2]));
      i += 2;
    } else if (isSafeSentenceChar(c)) {
      out += c;
    } else {
      throw Error(ErrorCode::NotAStatementUri,
                  "character '" + std::string(1, c) +
                      "' is not part of the sentence encoding in <" +
                      std::string(iri) + ">");
    }
  }
  return out;
}

std::string normalizedAuthority(std::string_view authority) {
  std::string result(authority);
  while (!result.empty() && result.back() == '/') result.pop_back();
  try {
    Term::iri(result);
  } catch (const Error& e) {
    throw Error(ErrorCode::InvalidAuthority, e.what());
  }
  return result;
}

void checkStatementInvariants(const Statement& s) {
  normalizedAuthority(s.authority);
  if (s.authority.empty() || s.authority.back() == '/') {
    throw Error(ErrorCode::InvalidAuthority,
                "authority must not end with '/'");
  }
  if (!isValidLanguageTag(s.language)) {
    throw Error(ErrorCode::InvalidLanguageTag,
                "language tag '" + s.language +
                    "' does not match [a-z]{2,3}(-[A-Za-z0-9]+)*");
  }
  if (s.sentence.empty()) {
    throw Error(ErrorCode::EmptySentence, "statement sentence is empty");
  }
  if (!utf8Check(s.sentence, nullptr)) {
    throw Error(ErrorCode::NotAStatementUri,
                "statement sentence is not valid UTF-8");
  }
  if (isAsciiWhitespace(s.sentence.front()) ||
      isAsciiWhitespace(s.sentence.back())) {
    throw Error(ErrorCode::NotAStatementUri,
                "sentence has leading or trailing whitespace");
  }
  for (std::size_t i = 0; i < s.sentence.size(); ++i) {
    char c = s.sentence[i];
    if (c == '\n' || c == '\r') {
      throw Error(ErrorCode::NotAStatementUri,
                  "sentence contains a line break");
    }
    if (isAsciiWhitespace(c) &&
        (c != ' ' || (i + 1 < s.sentence.size() &&
                      isAsciiWhitespace(s.sentence[i + 1])))) {
      throw Error(ErrorCode::NotAStatementUri,
                  "sentence contains unnormalized whitespace");
    }
  }
}

}  // namespace

std::string toNfc(std::string_view utf8) {
  if (!utf8Check(utf8, nullptr)) {
    throw Error(ErrorCode::InvalidLiteral, "input is not valid UTF-8");
  }
  if (utf8.empty()) return {};

  UErrorCode status = U_ZERO_ERROR;
  const UNormalizer2* nfc = unorm2_getNFCInstance(&status);
  if (U_FAILURE(status)) {
    throw Error(ErrorCode::IoError, "ICU NFC normalizer unavailable");
  }

  // UTF-8 -> UTF-16
  std::u16string utf16(utf8.size() + 1, u'\0');
  int32_t utf16Len = 0;
  status = U_ZERO_ERROR;
  u_strFromUTF8(utf16.data(), static_cast<int32_t>(utf16.size()), &utf16Len,
                utf8.data(), static_cast<int32_t>(utf8.size()), &status);
  if (U_FAILURE(status)) {
    throw Error(ErrorCode::InvalidLiteral, "input is not valid UTF-8");
  }
  utf16.resize(static_cast<std::size_t>(utf16Len));

  // Normalize
  std::u16string normalized(utf16.size() * 3 + 16, u'\0');
  status = U_ZERO_ERROR;
  int32_t normLen = unorm2_normalize(
      nfc, utf16.data(), static_cast<int32_t>(utf16.size()),
      normalized.data(), static_cast<int32_t>(normalized.size()), &status);
  if (status == U_BUFFER_OVERFLOW_ERROR) {
    normalized.assign(static_cast<std::size_t>(normLen), u'\0');
    status = U_ZERO_ERROR;
    normLen = unorm2_normalize(nfc, utf16.data(),
                               static_cast<int32_t>(utf16.size()),
                               normalized.data(),
                               static_cast<int32_t>(normalized.size()),
                               &status);
  }
  if (U_FAILURE(status)) {
    throw Error(ErrorCode::InvalidLiteral, "NFC normalization failed");
  }
  normalized.resize(static_cast<std::size_t>(normLen));

  // UTF-16 -> UTF-8
  std::string out(normalized.size() * 4 + 16, '\0');
  int32_t outLen = 0;
  status = U_ZERO_ERROR;
  u_strToUTF8(out.data(), static_cast<int32_t>(out.size()), &outLen,
              normalized.data(), static_cast<int32_t>(normalized.size()),
              &status);
  if (U_FAILURE(status)) {
    throw Error(ErrorCode::InvalidLiteral, "NFC round-trip failed");
  }
  out.resize(static_cast<std::size_t>(outLen));
  return out;
}

std::string normalizeSentence(std::string_view text, std::size_t maxLength) {
  std::string nfc = toNfc(text);
  std::string out;
  out.reserve(nfc.size());
  bool pendingSpace = false;
  for (char c : nfc) {
    if (isAsciiWhitespace(c)) {
      pendingSpace = !out.empty();
      continue;
    }
    if (pendingSpace) {
      out += ' ';
      pendingSpace = false;
    }
    out += c;
  }
  if (out.empty()) {
    throw Error(ErrorCode::EmptySentence,
                "sentence is empty after normalization");
  }
  std::size_t codePoints = 0;
  utf8Check(out, &codePoints);
  if (codePoints > maxLength) {
    throw Error(ErrorCode::SentenceTooLong,
                "sentence has " + std::to_string(codePoints) +
                    " characters; the bound is " + std::to_string(maxLength));
  }
  return out;
}

bool isNormalizedSentence(std::string_view sentence) {
  if (sentence.empty()) return false;
  Statement probe{std::string(kDefaultAuthority), "en",
                  std::string(sentence)};
  try {
    checkStatementInvariants(probe);
  } catch (const Error&) {
    return false;
  }
  try {
    return toNfc(sentence) == sentence;
  } catch (const Error&) {
    return false;
  }
}

bool isValidLanguageTag(std::string_view tag) {
  std::size_t i = 0;
  while (i < tag.size() && tag[i] >= 'a' && tag[i] <= 'z') ++i;
  if (i < 2 || i > 3) return false;
  while (i < tag.size()) {
    if (tag[i] != '-') return false;
    ++i;
    std::size_t start = i;
    while (i < tag.size() &&
           ((tag[i] >= 'a' && tag[i] <= 'z') ||
            (tag[i] >= 'A' && tag[i] <= 'Z') ||
            (tag[i] >= '0' && tag[i] <= '9'))) {
      ++i;
    }
    if (i == start) return false;
  }
  return true;
}

Statement makeStatement(std::string_view authority, std::string_view language,
                        std::string_view rawSentence, std::size_t maxLength) {
  Statement s;
  s.authority = normalizedAuthority(authority);
  s.language = std::string(language);
  s.sentence = normalizeSentence(rawSentence, maxLength);
  if (!isValidLanguageTag(s.language)) {
    throw Error(ErrorCode::InvalidLanguageTag,
                "language tag '" + s.language +
                    "' does not match [a-z]{2,3}(-[A-Za-z0-9]+)*");
  }
  return s;
}

Term encodeStatement(const Statement& s) {
  checkStatementInvariants(s);
  return Term::iri(s.authority + "/" + s.language + "/" +
                   percentEncodeSentence(s.sentence));
}

Statement decodeStatement(std::string_view iri,
                          const std::vector<std::string>& knownAuthorities) {
  const std::string* bestAuthority = nullptr;
  std::string bestNormalized;
  for (const std::string& candidate : knownAuthorities) {
    std::string normalized;
    try {
      normalized = normalizedAuthority(candidate);
    } catch (const Error&) {
      continue;  // malformed registry entries never match
    }
    if (iri.size() <= normalized.size() + 1) continue;
    if (iri.compare(0, normalized.size(), normalized) != 0) continue;
    if (iri[normalized.size()] != '/') continue;
    if (!bestAuthority || normalized.size() > bestNormalized.size()) {
      bestAuthority = &candidate;
      bestNormalized = normalized;
    }
  }
  if (!bestAuthority) {
    throw Error(ErrorCode::NotAStatementUri,
                "<" + std::string(iri) + "> is not under a known authority");
  }

  std::string_view rest = iri.substr(bestNormalized.size() + 1);
  std::size_t slash = rest.find('/');
  if (slash == std::string_view::npos) {
    throw Error(ErrorCode::NotAStatementUri,
                "missing /<language>/<sentence> path in <" +
                    std::string(iri) + ">");
  }
  std::string_view language = rest.substr(0, slash);
  std::string_view payload = rest.substr(slash + 1);
  if (!isValidLanguageTag(language)) {
    throw Error(ErrorCode::InvalidLanguageTag,
                "bad language tag '" + std::string(language) + "' in <" +
                    std::string(iri) + ">");
  }
  if (payload.empty()) {
    throw Error(ErrorCode::NotAStatementUri,
                "empty sentence payload in <" + std::string(iri) + ">");
  }

  Statement s;
  s.authority = bestNormalized;
  s.language = std::string(language);
  s.sentence = percentDecodeSentence(payload, iri);
  if (!utf8Check(s.sentence, nullptr)) {
    throw Error(ErrorCode::NotAStatementUri,
                "decoded sentence is not valid UTF-8 in <" +
                    std::string(iri) + ">");
  }
  checkStatementInvariants(s);
  return s;
}

bool isStatementUri(std::string_view iri,
                    const std::vector<std::string>& knownAuthorities) {
  try {
    decodeStatement(iri, knownAuthorities);
    return true;
  } catch (const Error&) {
    return false;
  }
}

}  // namespace unano
