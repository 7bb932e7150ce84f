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

#include "blanc/token.h"

namespace blanc {

std::string_view WordRoleName(WordRole role) {
  switch (role) {
    case WordRole::kWholeWord:
      return "whole_word";
    case WordRole::kWordStart:
      return "word_start";
    case WordRole::kWordContinuation:
      return "word_continuation";
  }
  return "unknown";
}

std::vector<int32_t> TokenIds(const std::vector<Token>& tokens) {
  std::vector<int32_t> ids;
  ids.reserve(tokens.size());
  for (const Token& t : tokens) ids.push_back(t.vocab_id);
  return ids;
}

}  // namespace blanc
