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

#include "blanc/masking.h"

#include <algorithm>
#include <string>

#include "blanc/error.h"

namespace blanc {

void MaskingPolicy::Validate() const {
  if (gap < 1) throw Error(ErrorCode::kInvalidArgument, "gap must be >= 1");
  if (mask_width < 1) {
    throw Error(ErrorCode::kInvalidArgument, "mask_width must be >= 1");
  }
  if (min_word_len < 0 || min_start_len < 0 || min_cont_len < 0) {
    throw Error(ErrorCode::kInvalidArgument,
                "length thresholds must be non-negative");
  }
}

bool IsEligible(const Token& token, const MaskingPolicy& policy) {
  switch (token.role) {
    case WordRole::kWholeWord:
      return token.char_length >= policy.min_word_len;
    case WordRole::kWordStart:
      return token.char_length >= policy.min_start_len;
    case WordRole::kWordContinuation:
      return token.char_length >= policy.min_cont_len;
  }
  return false;
}

std::vector<std::size_t> MaskPositions(const std::vector<Token>& sentence,
                                       const MaskingPolicy& policy,
                                       int offset) {
  policy.Validate();
  if (offset < 1 || offset > policy.gap) {
    throw Error(ErrorCode::kInvalidArgument,
                "offset " + std::to_string(offset) + " outside [1, " +
                    std::to_string(policy.gap) + "]");
  }
  const std::size_t residue = static_cast<std::size_t>(offset % policy.gap);
  std::vector<bool> selected(sentence.size(), false);
  for (std::size_t p = 0; p < sentence.size(); ++p) {
    if ((p + 1) % policy.gap != residue || !IsEligible(sentence[p], policy)) {
      continue;
    }
    const std::size_t last = std::min(
        sentence.size(), p + static_cast<std::size_t>(policy.mask_width));
    for (std::size_t q = p; q < last; ++q) {
      if (IsEligible(sentence[q], policy)) selected[q] = true;
    }
  }
  std::vector<std::size_t> out;
  for (std::size_t p = 0; p < selected.size(); ++p) {
    if (selected[p]) out.push_back(p);
  }
  return out;
}

ClozePair BuildClozePair(const std::vector<int32_t>& summary_ids,
                         const std::vector<Token>& sentence,
                         const std::vector<std::size_t>& positions,
                         int32_t mask_id, int32_t filler_id, int max_len) {
  const std::size_t budget = static_cast<std::size_t>(std::max(max_len, 0));
  if (sentence.size() + kSpecialTokenCount > budget) {
    throw Error(ErrorCode::kSentenceTooLong,
                "sentence of " + std::to_string(sentence.size()) +
                    " tokens exceeds max_len " + std::to_string(max_len));
  }
  const std::size_t prefix_len = std::min(
      summary_ids.size(), budget - sentence.size() - kSpecialTokenCount);

  ClozePair pair;
  pair.help_prefix.assign(summary_ids.begin(),
                          summary_ids.begin() + prefix_len);
  pair.base_prefix.assign(prefix_len, filler_id);
  pair.sentence_ids = TokenIds(sentence);
  for (std::size_t p : positions) {
    if (p >= sentence.size()) {
      throw Error(ErrorCode::kInvalidArgument,
                  "mask position " + std::to_string(p) + " outside sentence");
    }
    if (!pair.masked_positions.empty() && p <= pair.masked_positions.back()) {
      throw Error(ErrorCode::kInvalidArgument,
                  "mask positions must be strictly increasing");
    }
    pair.masked_positions.push_back(p);
    pair.gold_ids.push_back(sentence[p].vocab_id);
    pair.sentence_ids[p] = mask_id;
  }
  return pair;
}

MaskedInput FrameInput(const ClozePair& pair, PrefixSide side,
                       const SpecialTokens& specials) {
  const std::vector<int32_t>& prefix =
      side == PrefixSide::kHelp ? pair.help_prefix : pair.base_prefix;
  MaskedInput input;
  input.token_ids.reserve(prefix.size() + pair.sentence_ids.size() +
                          kSpecialTokenCount);
  input.token_ids.push_back(specials.cls);
  input.token_ids.insert(input.token_ids.end(), prefix.begin(), prefix.end());
  input.token_ids.push_back(specials.sep);
  const std::size_t sentence_start = input.token_ids.size();
  input.token_ids.insert(input.token_ids.end(), pair.sentence_ids.begin(),
                         pair.sentence_ids.end());
  input.token_ids.push_back(specials.sep);
  for (std::size_t p : pair.masked_positions) {
    input.masked_positions.push_back(sentence_start + p);
  }
  input.gold_ids = pair.gold_ids;
  return input;
}

}  // namespace blanc
