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

#ifndef BLANC_VOCABULARY_H_
#define BLANC_VOCABULARY_H_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace blanc {

struct SpecialTokens {
  int32_t pad = 0;
  int32_t unk = 0;
  int32_t cls = 0;
  int32_t sep = 0;
  int32_t mask = 0;
  // The period token; base inputs repeat it in place of the summary.
  int32_t filler = 0;
};

// The model dictionary plus the tokenizer settings that travel with it.
class Vocabulary {
 public:
  // Throws Error(kInvalidArgument) if a special id is out of range, or if
  // mask, unk and filler are not pairwise distinct.
  Vocabulary(std::vector<std::string> tokens, SpecialTokens specials,
             int max_len, bool lowercase,
             std::string continuation_prefix = "##");

  // Reads `vocab.txt` (one token per line, line number = id) and
  // `tokenizer.json`. Throws ModelLoadError naming "vocabulary" or
  // "tokenizer-config".
  static Vocabulary Load(const std::filesystem::path& vocab_file,
                         const std::filesystem::path& config_file);

  int32_t size() const { return static_cast<int32_t>(tokens_.size()); }
  bool Contains(int32_t id) const { return id >= 0 && id < size(); }
  std::optional<int32_t> Find(std::string_view piece) const;
  const std::string& Piece(int32_t id) const { return tokens_.at(id); }

  const SpecialTokens& specials() const { return specials_; }
  int max_len() const { return max_len_; }
  bool lowercase() const { return lowercase_; }
  const std::string& continuation_prefix() const {
    return continuation_prefix_;
  }
  bool IsSpecial(int32_t id) const;

 private:
  std::vector<std::string> tokens_;
  std::unordered_map<std::string, int32_t> index_;
  SpecialTokens specials_;
  int max_len_;
  bool lowercase_;
  std::string continuation_prefix_;
};

}  // namespace blanc

#endif  // BLANC_VOCABULARY_H_
