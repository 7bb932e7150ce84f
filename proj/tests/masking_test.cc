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

#include <gtest/gtest.h>

#include <random>
#include <set>

#include "blanc/error.h"

namespace blanc {
namespace {

std::vector<Token> RandomSentence(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> length(0, 60);
  std::uniform_int_distribution<int> role(0, 2);
  std::uniform_int_distribution<int> chars(1, 9);
  std::vector<Token> tokens(length(rng));
  for (Token& t : tokens) {
    t.role = static_cast<WordRole>(role(rng));
    t.char_length = chars(rng);
    t.vocab_id = 10;
  }
  return tokens;
}

TEST(MaskingTest, PassesPartitionEligibleTokens) {
  std::mt19937_64 rng(42);
  const MaskingPolicy defaults;
  for (int s = 0; s < 200; ++s) {
    const std::vector<Token> sentence = RandomSentence(rng);
    std::set<std::size_t> eligible;
    for (std::size_t p = 0; p < sentence.size(); ++p) {
      if (IsEligible(sentence[p], defaults)) eligible.insert(p);
    }
    for (int gap = 1; gap <= 8; ++gap) {
      MaskingPolicy policy = defaults;
      policy.gap = gap;
      std::set<std::size_t> covered;
      std::size_t count = 0;
      for (int offset = 1; offset <= gap; ++offset) {
        for (std::size_t p : MaskPositions(sentence, policy, offset)) {
          covered.insert(p);
          ++count;
        }
      }
      EXPECT_EQ(covered, eligible) << "sentence " << s << " gap " << gap;
      EXPECT_EQ(count, eligible.size()) << "passes overlap";
    }
  }
}

TEST(MaskingTest, EligibilityTruthTable) {
  const MaskingPolicy policy;
  struct Row {
    WordRole role;
    int length;
    bool eligible;
  };
  const Row rows[] = {
      {WordRole::kWholeWord, 1, false},        {WordRole::kWholeWord, 3, false},
      {WordRole::kWholeWord, 4, true},         {WordRole::kWholeWord, 5, true},
      {WordRole::kWholeWord, 1000, true},      {WordRole::kWordStart, 1, true},
      {WordRole::kWordStart, 3, true},         {WordRole::kWordStart, 4, true},
      {WordRole::kWordStart, 5, true},         {WordRole::kWordStart, 1000, true},
      {WordRole::kWordContinuation, 1, false}, {WordRole::kWordContinuation, 3, false},
      {WordRole::kWordContinuation, 4, false}, {WordRole::kWordContinuation, 5, false},
      {WordRole::kWordContinuation, 1000, true},
  };
  for (const Row& row : rows) {
    Token token{"x", 7, row.length, row.role};
    EXPECT_EQ(IsEligible(token, policy), row.eligible)
        << WordRoleName(row.role) << " length " << row.length;
  }
}

TEST(MaskingTest, SelectsEveryGapthPositionOneBased) {
  std::vector<Token> sentence(10, Token{"word", 9, 4, WordRole::kWholeWord});
  MaskingPolicy policy;
  policy.gap = 3;
  EXPECT_EQ(MaskPositions(sentence, policy, 1),
            (std::vector<std::size_t>{0, 3, 6, 9}));
  EXPECT_EQ(MaskPositions(sentence, policy, 3), (std::vector<std::size_t>{2, 5, 8}));
  EXPECT_THROW(MaskPositions(sentence, policy, 0), Error);
  EXPECT_THROW(MaskPositions(sentence, policy, 4), Error);
}

TEST(MaskingTest, WidthExtendsOverFollowingEligibleTokens) {
  std::vector<Token> sentence(8, Token{"word", 9, 4, WordRole::kWholeWord});
  sentence[1].char_length = 2;  // ineligible
  MaskingPolicy policy;
  policy.gap = 4;
  policy.mask_width = 3;
  EXPECT_EQ(MaskPositions(sentence, policy, 1),
            (std::vector<std::size_t>{0, 2, 4, 5, 6}));
}

TEST(MaskingTest, PolicyValidation) {
  MaskingPolicy policy;
  policy.gap = 0;
  EXPECT_THROW(policy.Validate(), Error);
  policy = MaskingPolicy{};
  policy.mask_width = 0;
  EXPECT_THROW(policy.Validate(), Error);
  policy = MaskingPolicy{};
  policy.min_word_len = -1;
  EXPECT_THROW(policy.Validate(), Error);
}

TEST(ClozeTest, TruncatesSummaryToFitTheBudget) {
  const std::vector<int32_t> summary(500, 7);
  const std::vector<Token> sentence(100, Token{"word", 9, 4, WordRole::kWholeWord});
  const ClozePair pair = BuildClozePair(summary, sentence, {0, 50}, 4, 5, 512);
  EXPECT_EQ(pair.help_prefix.size(), 409u);
  EXPECT_EQ(pair.base_prefix, std::vector<int32_t>(409, 5));
  EXPECT_EQ(pair.sentence_ids[0], 4);
  EXPECT_EQ(pair.sentence_ids[1], 9);
  EXPECT_EQ(pair.gold_ids, (std::vector<int32_t>{9, 9}));

  const SpecialTokens specials{.pad = 0, .unk = 1, .cls = 2, .sep = 3,
                               .mask = 4, .filler = 5};
  const MaskedInput help = FrameInput(pair, PrefixSide::kHelp, specials);
  EXPECT_EQ(help.token_ids.size(), 512u);
  EXPECT_EQ(help.token_ids.front(), 2);
  EXPECT_EQ(help.token_ids[410], 3);
  EXPECT_EQ(help.token_ids.back(), 3);
  EXPECT_EQ(help.masked_positions, (std::vector<std::size_t>{411, 461}));
  const MaskedInput base = FrameInput(pair, PrefixSide::kBase, specials);
  EXPECT_EQ(base.token_ids.size(), help.token_ids.size());
  EXPECT_EQ(base.masked_positions, help.masked_positions);
}

TEST(ClozeTest, RejectsSentencesThatCannotFit) {
  const std::vector<Token> fits(509, Token{"word", 9, 4, WordRole::kWholeWord});
  const std::vector<Token> too_long(510, Token{"word", 9, 4, WordRole::kWholeWord});
  EXPECT_EQ(BuildClozePair({7, 7}, fits, {}, 4, 5, 512).help_prefix.size(), 0u);
  try {
    BuildClozePair({7}, too_long, {}, 4, 5, 512);
    FAIL() << "expected SentenceTooLong";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kSentenceTooLong);
  }
}

TEST(ClozeTest, EmptySummaryGivesIdenticalInputs) {
  const std::vector<Token> sentence(5, Token{"word", 9, 4, WordRole::kWholeWord});
  const ClozePair pair = BuildClozePair({}, sentence, {1, 3}, 4, 5, 512);
  const SpecialTokens specials{0, 1, 2, 3, 4, 5};
  EXPECT_EQ(FrameInput(pair, PrefixSide::kHelp, specials).token_ids,
            FrameInput(pair, PrefixSide::kBase, specials).token_ids);
}

}  // namespace
}  // namespace blanc
