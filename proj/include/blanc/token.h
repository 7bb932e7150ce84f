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

#ifndef BLANC_TOKEN_H_
#define BLANC_TOKEN_H_

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace blanc {

enum class WordRole {
  kWholeWord,         // the word is a single vocabulary piece
  kWordStart,         // first piece of a split word
  kWordContinuation,  // any later piece of a split word
};

std::string_view WordRoleName(WordRole role);

struct Token {
  // Piece text without the continuation marker.
  std::string surface;
  int32_t vocab_id = 0;
  // Unicode code points in `surface`.
  int32_t char_length = 0;
  WordRole role = WordRole::kWholeWord;

  bool operator==(const Token&) const = default;
};

struct Sentence {
  std::vector<Token> tokens;
  // Byte offsets [begin, end) into the source document.
  std::size_t begin = 0;
  std::size_t end = 0;
};

std::vector<int32_t> TokenIds(const std::vector<Token>& tokens);

}  // namespace blanc

#endif  // BLANC_TOKEN_H_
