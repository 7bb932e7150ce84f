// Copyright 2026 The BLANC-cpp Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "blanc/tokenizer.h"

#include <unicode/locid.h>
#include <unicode/normalizer2.h>
#include <unicode/uchar.h>
#include <unicode/unistr.h>
#include <unicode/utf8.h>

#include <optional>

#include "blanc/error.h"

namespace blanc {
namespace {

using CodePoints = std::vector<UChar32>;

CodePoints Decode(std::string_view text) {
  CodePoints out;
  out.reserve(text.size());
  const auto* bytes = reinterpret_cast<const uint8_t*>(text.data());
  const int32_t length = static_cast<int32_t>(text.size());
  for (int32_t i = 0; i < length;) {
    UChar32 c;
    U8_NEXT(bytes, i, length, c);
    out.push_back(c < 0 ? 0xFFFD : c);
  }
  return out;
}

std::string Encode(const CodePoints& cps, std::size_t begin, std::size_t end) {
  std::string out;
  for (std::size_t i = begin; i < end; ++i) {
    char buf[U8_MAX_LENGTH];
    int32_t n = 0;
    UBool error = false;
    U8_APPEND(reinterpret_cast<uint8_t*>(buf), n, U8_MAX_LENGTH, cps[i], error);
    if (!error) out.append(buf, n);
  }
  return out;
}

bool IsWhitespace(UChar32 c) {
  if (c == ' ' || c == '\t' || c == '\n' || c == '\r') return true;
  return u_charType(c) == U_SPACE_SEPARATOR;
}

bool IsControl(UChar32 c) {
  if (c == '\t' || c == '\n' || c == '\r') return false;
  switch (u_charType(c)) {
    case U_CONTROL_CHAR:
    case U_FORMAT_CHAR:
    case U_PRIVATE_USE_CHAR:
    case U_SURROGATE:
    case U_UNASSIGNED:
      return true;
    default:
      return false;
  }
}

bool IsPunctuation(UChar32 c) {
  if ((c >= 33 && c <= 47) || (c >= 58 && c <= 64) || (c >= 91 && c <= 96) ||
      (c >= 123 && c <= 126)) {
    return true;
  }
  switch (u_charType(c)) {
    case U_DASH_PUNCTUATION:
    case U_START_PUNCTUATION:
    case U_END_PUNCTUATION:
    case U_CONNECTOR_PUNCTUATION:
    case U_OTHER_PUNCTUATION:
    case U_INITIAL_PUNCTUATION:
    case U_FINAL_PUNCTUATION:
      return true;
    default:
      return false;
  }
}

bool IsCjk(UChar32 c) {
  return (c >= 0x4E00 && c <= 0x9FFF) || (c >= 0x3400 && c <= 0x4DBF) ||
         (c >= 0x20000 && c <= 0x2A6DF) || (c >= 0x2A700 && c <= 0x2B73F) ||
         (c >= 0x2B740 && c <= 0x2B81F) || (c >= 0x2B820 && c <= 0x2CEAF) ||
         (c >= 0xF900 && c <= 0xFAFF) || (c >= 0x2F800 && c <= 0x2FA1F);
}

bool IsSplitSpace(UChar32 c) {
  if (IsWhitespace(c)) return true;
  const int8_t type = u_charType(c);
  return type == U_LINE_SEPARATOR || type == U_PARAGRAPH_SEPARATOR;
}

const icu::Normalizer2& Normalizer(bool decompose) {
  UErrorCode status = U_ZERO_ERROR;
  const icu::Normalizer2* norm = decompose
                                     ? icu::Normalizer2::getNFDInstance(status)
                                     : icu::Normalizer2::getNFCInstance(status);
  if (U_FAILURE(status) || norm == nullptr) {
    throw Error(ErrorCode::kInvalidArgument,
                std::string("ICU normalizer unavailable: ") +
                    u_errorName(status));
  }
  return *norm;
}

std::string Normalize(const std::string& utf8, bool decompose) {
  UErrorCode status = U_ZERO_ERROR;
  icu::UnicodeString normalized =
      Normalizer(decompose).normalize(icu::UnicodeString::fromUTF8(utf8),
                                      status);
  std::string out;
  normalized.toUTF8String(out);
  return out;
}

// Lowercases, decomposes and drops nonspacing marks.
std::string LowerAndStripAccents(const std::string& word) {
  icu::UnicodeString lowered = icu::UnicodeString::fromUTF8(word);
  lowered.toLower(icu::Locale::getRoot());
  std::string utf8;
  lowered.toUTF8String(utf8);
  CodePoints cps = Decode(Normalize(utf8, /*decompose=*/true));
  CodePoints kept;
  kept.reserve(cps.size());
  for (UChar32 c : cps) {
    if (u_charType(c) != U_NON_SPACING_MARK) kept.push_back(c);
  }
  return Encode(kept, 0, kept.size());
}

std::vector<std::string> SplitOnSpace(const CodePoints& cps) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < cps.size()) {
    while (i < cps.size() && IsSplitSpace(cps[i])) ++i;
    std::size_t j = i;
    while (j < cps.size() && !IsSplitSpace(cps[j])) ++j;
    if (j > i) out.push_back(Encode(cps, i, j));
    i = j;
  }
  return out;
}

void SplitOnPunctuation(const std::string& word, std::vector<std::string>& out) {
  const CodePoints cps = Decode(word);
  std::size_t begin = 0;
  for (std::size_t i = 0; i < cps.size(); ++i) {
    if (!IsPunctuation(cps[i])) continue;
    if (i > begin) out.push_back(Encode(cps, begin, i));
    out.push_back(Encode(cps, i, i + 1));
    begin = i + 1;
  }
  if (begin < cps.size()) out.push_back(Encode(cps, begin, cps.size()));
}

}  // namespace

std::vector<std::string> WordPieceTokenizer::SplitWords(
    std::string_view text) const {
  CodePoints cleaned;
  for (UChar32 c : Decode(text)) {
    if (c == 0 || c == 0xFFFD || IsControl(c)) continue;
    if (IsCjk(c)) {
      cleaned.insert(cleaned.end(), {' ', c, ' '});
    } else {
      cleaned.push_back(IsWhitespace(c) ? ' ' : c);
    }
  }
  const std::string composed =
      Normalize(Encode(cleaned, 0, cleaned.size()), /*decompose=*/false);

  std::vector<std::string> words;
  for (std::string& word : SplitOnSpace(Decode(composed))) {
    if (vocab_.lowercase()) word = LowerAndStripAccents(word);
    SplitOnPunctuation(word, words);
  }
  return words;
}

void WordPieceTokenizer::AppendWordPieces(const std::string& word,
                                          std::vector<Token>& out) const {
  const CodePoints cps = Decode(word);
  auto unknown = [&] {
    out.push_back(Token{word, vocab_.specials().unk,
                        static_cast<int32_t>(cps.size()), WordRole::kWholeWord});
  };
  if (cps.size() > static_cast<std::size_t>(kMaxWordChars)) {
    unknown();
    return;
  }

  std::vector<Token> pieces;
  std::size_t start = 0;
  while (start < cps.size()) {
    std::optional<int32_t> match;
    std::size_t end = cps.size();
    for (; end > start; --end) {
      std::string candidate = Encode(cps, start, end);
      if (start > 0) candidate = vocab_.continuation_prefix() + candidate;
      match = vocab_.Find(candidate);
      if (match) break;
    }
    if (!match) {
      unknown();
      return;
    }
    pieces.push_back(Token{Encode(cps, start, end), *match,
                           static_cast<int32_t>(end - start),
                           start == 0 ? WordRole::kWordStart
                                      : WordRole::kWordContinuation});
    start = end;
  }
  if (pieces.size() == 1) pieces.front().role = WordRole::kWholeWord;
  out.insert(out.end(), std::make_move_iterator(pieces.begin()),
             std::make_move_iterator(pieces.end()));
}

std::vector<Token> WordPieceTokenizer::Tokenize(std::string_view text) const {
  std::vector<Token> out;
  for (const std::string& word : SplitWords(text)) {
    AppendWordPieces(word, out);
  }
  return out;
}

std::vector<Sentence> PrepareDocument(std::string_view document,
                                      const WordPieceTokenizer& tokenizer,
                                      const SentenceSplitter& splitter) {
  std::vector<Sentence> out;
  for (const SentenceSpan& span : splitter.Split(document)) {
    std::vector<Token> tokens = tokenizer.Tokenize(span.text);
    if (tokens.empty()) continue;
    out.push_back(Sentence{std::move(tokens), span.begin, span.end});
  }
  return out;
}

}  // namespace blanc
