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

#ifndef BLANC_SENTENCE_SPLITTER_H_
#define BLANC_SENTENCE_SPLITTER_H_

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace blanc {

struct SentenceSpan {
  std::string text;
  // Byte offsets [begin, end) into the document; `text` is that slice.
  std::size_t begin = 0;
  std::size_t end = 0;
};

// Rule-based splitter: a sentence ends at a run of terminal punctuation
// (. ! ? and the ellipsis character), plus any closing quotes or brackets,
// when followed by whitespace and then something other than a lowercase
// letter. A single period after a listed abbreviation or a one-letter
// initial never ends a sentence. Blank lines always do.
class SentenceSplitter {
 public:
  // Uses the abbreviation list compiled in from data/abbreviations.txt.
  SentenceSplitter();
  explicit SentenceSplitter(std::unordered_set<std::string> abbreviations);

  // Abbreviation file: one entry per line, '#' comments, trailing period
  // optional, case-insensitive.
  static SentenceSplitter FromFile(const std::filesystem::path& path);
  static std::unordered_set<std::string> ParseAbbreviations(
      std::string_view contents);

  std::vector<SentenceSpan> Split(std::string_view document) const;

  const std::unordered_set<std::string>& abbreviations() const {
    return abbreviations_;
  }

 private:
  bool EndsWithAbbreviation(std::string_view document,
                            std::size_t period) const;

  std::unordered_set<std::string> abbreviations_;
};

// Splits with the default abbreviation list.
std::vector<SentenceSpan> SplitSentences(std::string_view document);

}  // namespace blanc

#endif  // BLANC_SENTENCE_SPLITTER_H_
