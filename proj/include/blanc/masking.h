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

#ifndef BLANC_MASKING_H_
#define BLANC_MASKING_H_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "blanc/token.h"
#include "blanc/vocabulary.h"

namespace blanc {

// Which sentence tokens get masked, and in how many passes.
struct MaskingPolicy {
  // Mask step: each pass masks every `gap`-th token.
  int gap = 6;
  // Whole words shorter than this are never masked.
  int min_word_len = 4;
  // Word-start pieces shorter than this are never masked.
  int min_start_len = 0;
  // Continuation pieces shorter than this are never masked.
  int min_cont_len = 1000;
  // Consecutive tokens masked per selected position.
  int mask_width = 1;

  // Throws Error(kInvalidArgument) on gap < 1, mask_width < 1 or a negative
  // threshold.
  void Validate() const;

  bool operator==(const MaskingPolicy&) const = default;
};

bool IsEligible(const Token& token, const MaskingPolicy& policy);

// 0-based positions masked in pass `offset` (1..gap). Position p is chosen
// when it is eligible and (p + 1) % gap == offset % gap; with mask_width > 1
// each chosen position also pulls in the eligible ones among its next
// mask_width - 1 neighbours. Sorted, no duplicates.
std::vector<std::size_t> MaskPositions(const std::vector<Token>& sentence,
                                       const MaskingPolicy& policy, int offset);

// [CLS] prefix [SEP] sentence [SEP]
inline constexpr int kSpecialTokenCount = 3;

// One masked sentence with its two prefixes. Both prefixes always have the
// same length, so sentence tokens sit at the same absolute positions in the
// help and base inputs.
struct ClozePair {
  std::vector<int32_t> help_prefix;
  std::vector<int32_t> base_prefix;
  std::vector<int32_t> sentence_ids;  // masked positions hold the mask id
  std::vector<std::size_t> masked_positions;
  std::vector<int32_t> gold_ids;
};

// Throws Error(kSentenceTooLong) if the sentence plus special tokens does not
// fit in `max_len`. Otherwise the summary prefix is cut from its tail until
// everything fits.
ClozePair BuildClozePair(const std::vector<int32_t>& summary_ids,
                         const std::vector<Token>& sentence,
                         const std::vector<std::size_t>& positions,
                         int32_t mask_id, int32_t filler_id, int max_len);

// A model input: token ids plus the absolute positions to score.
struct MaskedInput {
  std::vector<int32_t> token_ids;
  std::vector<std::size_t> masked_positions;
  std::vector<int32_t> gold_ids;
};

enum class PrefixSide { kHelp, kBase };

MaskedInput FrameInput(const ClozePair& pair, PrefixSide side,
                       const SpecialTokens& specials);

}  // namespace blanc

#endif  // BLANC_MASKING_H_
