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

#ifndef BLANC_TOKENIZER_H_
#define BLANC_TOKENIZER_H_

#include <string>
#include <string_view>
#include <vector>

#include "blanc/sentence_splitter.h"
#include "blanc/token.h"
#include "blanc/vocabulary.h"

namespace blanc {

// BERT-style tokenization: text cleanup, CJK isolation, optional lowercasing
// with accent stripping, punctuation splitting, then greedy longest-match
// WordPiece against the vocabulary.
//
// Words that cannot be segmented (or exceed kMaxWordChars code points) map
// to the unknown id as a single whole-word token whose surface keeps the
// original (normalized) word.
class WordPieceTokenizer {
 public:
  static constexpr int kMaxWordChars = 100;

  // `vocab` must outlive the tokenizer.
  explicit WordPieceTokenizer(const Vocabulary& vocab) : vocab_(vocab) {}

  std::vector<Token> Tokenize(std::string_view text) const;

  // Pre-tokenization only: the normalized words WordPiece will see.
  std::vector<std::string> SplitWords(std::string_view text) const;

  const Vocabulary& vocabulary() const { return vocab_; }

 private:
  void AppendWordPieces(const std::string& word,
                        std::vector<Token>& out) const;

  const Vocabulary& vocab_;
};

// Splits `document` into sentences and tokenizes each one. Sentences that
// produce no tokens are dropped.
std::vector<Sentence> PrepareDocument(std::string_view document,
                                      const WordPieceTokenizer& tokenizer,
                                      const SentenceSplitter& splitter);

}  // namespace blanc

#endif  // BLANC_TOKENIZER_H_
