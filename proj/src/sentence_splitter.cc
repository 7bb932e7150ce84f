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

#include "blanc/sentence_splitter.h"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <utility>

#include "blanc/error.h"

namespace blanc {
namespace {

// Generated from data/abbreviations.txt at configure time.
constexpr std::string_view kDefaultAbbreviations =
#include "abbreviations_data.inc"
    ;

bool IsSpace(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}

bool IsAsciiLower(char c) { return c >= 'a' && c <= 'z'; }
bool IsAsciiUpper(char c) { return c >= 'A' && c <= 'Z'; }

char ToLower(char c) { return IsAsciiUpper(c) ? static_cast<char>(c + 32) : c; }

bool StartsWithAt(std::string_view s, std::size_t pos, std::string_view what) {
  return s.substr(pos, what.size()) == what;
}

// Byte length of a terminal punctuation mark at `pos`, or 0.
std::size_t MatchTerminal(std::string_view s, std::size_t pos) {
  if (pos >= s.size()) return 0;
  const char c = s[pos];
  if (c == '.' || c == '!' || c == '?') return 1;
  if (StartsWithAt(s, pos, "…")) return 3;
  return 0;
}

std::size_t MatchCloser(std::string_view s, std::size_t pos) {
  if (pos >= s.size()) return 0;
  const char c = s[pos];
  if (c == '"' || c == '\'' || c == ')' || c == ']' || c == '}') return 1;
  for (std::string_view closer : {"”", "’", "»"}) {
    if (StartsWithAt(s, pos, closer)) return closer.size();
  }
  return 0;
}

std::size_t SkipSpace(std::string_view s, std::size_t pos) {
  while (pos < s.size() && IsSpace(s[pos])) ++pos;
  return pos;
}

}  // namespace

SentenceSplitter::SentenceSplitter()
    : abbreviations_(ParseAbbreviations(kDefaultAbbreviations)) {}

SentenceSplitter::SentenceSplitter(
    std::unordered_set<std::string> abbreviations)
    : abbreviations_(std::move(abbreviations)) {}

SentenceSplitter SentenceSplitter::FromFile(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::kInvalidArgument,
                "cannot open abbreviation list " + path.string());
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  return SentenceSplitter(ParseAbbreviations(buffer.str()));
}

std::unordered_set<std::string> SentenceSplitter::ParseAbbreviations(
    std::string_view contents) {
  std::unordered_set<std::string> out;
  std::size_t pos = 0;
  while (pos < contents.size()) {
    std::size_t eol = contents.find('\n', pos);
    if (eol == std::string_view::npos) eol = contents.size();
    std::string line(contents.substr(pos, eol - pos));
    pos = eol + 1;
    while (!line.empty() && IsSpace(line.back())) line.pop_back();
    line.erase(0, std::min(line.size(), SkipSpace(line, 0)));
    if (line.empty() || line.front() == '#') continue;
    if (line.back() == '.') line.pop_back();
    std::transform(line.begin(), line.end(), line.begin(), ToLower);
    out.insert(std::move(line));
  }
  return out;
}

bool SentenceSplitter::EndsWithAbbreviation(std::string_view document,
                                            std::size_t period) const {
  std::size_t begin = period;
  while (begin > 0 && !IsSpace(document[begin - 1])) --begin;
  std::string_view word = document.substr(begin, period - begin);
  for (bool stripped = true; stripped && !word.empty();) {
    stripped = false;
    for (std::string_view opener : {"\"", "'", "(", "[", "“", "‘"}) {
      if (word.starts_with(opener)) {
        word.remove_prefix(opener.size());
        stripped = true;
      }
    }
  }
  if (word.empty()) return false;
  if (word.size() == 1 && IsAsciiUpper(word[0])) return true;  // initial
  std::string lowered(word);
  std::transform(lowered.begin(), lowered.end(), lowered.begin(), ToLower);
  return abbreviations_.contains(lowered);
}

std::vector<SentenceSpan> SentenceSplitter::Split(
    std::string_view document) const {
  std::vector<SentenceSpan> out;
  const std::size_t n = document.size();
  std::size_t start = SkipSpace(document, 0);

  auto emit = [&](std::size_t end) {
    while (end > start && IsSpace(document[end - 1])) --end;
    if (end > start) {
      out.push_back({std::string(document.substr(start, end - start)), start,
                     end});
    }
  };

  std::size_t i = start;
  while (i < n) {
    if (IsSpace(document[i])) {
      std::size_t j = i;
      int newlines = 0;
      while (j < n && IsSpace(document[j])) {
        if (document[j] == '\n') ++newlines;
        ++j;
      }
      if (newlines >= 2) {
        emit(i);
        start = j;
      }
      i = j;
      continue;
    }
    if (MatchTerminal(document, i) == 0) {
      ++i;
      continue;
    }

    std::size_t k = i;
    int marks = 0;
    for (std::size_t len; (len = MatchTerminal(document, k)) != 0; k += len) {
      ++marks;
    }
    const bool single_period = marks == 1 && document[i] == '.';
    for (std::size_t len; (len = MatchCloser(document, k)) != 0; k += len) {
    }
    if (k < n && !IsSpace(document[k])) {
      i = k;  // "3.5", "U.S.A", "example.com"
      continue;
    }

    const std::size_t next = SkipSpace(document, k);
    bool boundary = true;
    if (next < n) {
      if (IsAsciiLower(document[next])) {
        boundary = false;
      } else if (single_period && EndsWithAbbreviation(document, i)) {
        boundary = false;
      }
    }
    if (boundary) {
      emit(k);
      start = next;
    }
    i = k;
  }
  emit(n);
  return out;
}

std::vector<SentenceSpan> SplitSentences(std::string_view document) {
  static const SentenceSplitter* const kSplitter = new SentenceSplitter();
  return kSplitter->Split(document);
}

}  // namespace blanc
