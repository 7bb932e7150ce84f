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

#ifndef BLANC_SCORING_H_
#define BLANC_SCORING_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "blanc/backend.h"
#include "blanc/error.h"
#include "blanc/masking.h"
#include "blanc/sentence_splitter.h"

namespace blanc {

// What is compared between the summary-assisted and filler-assisted runs.
enum class ScoreVariant {
  kAccuracy,        // top-1 hits
  kLogit,           // raw gold-token logit
  kProbability,     // softmax probability of the gold token
  kLogProbability,  // its natural log
};

std::string_view VariantName(ScoreVariant variant);
// Accepts "accuracy", "logit", "probability"/"prob",
// "log_probability"/"logprob".
std::optional<ScoreVariant> ParseVariant(std::string_view name);

struct BlancResult {
  ScoreVariant variant = ScoreVariant::kAccuracy;
  // Top-1 hit counts, filled for every variant.
  int64_t n_help = 0;
  int64_t n_base = 0;
  int64_t n_total = 0;
  double score = 0.0;

  bool operator==(const BlancResult&) const = default;
};

// One masked document token seen twice: after the summary and after the
// filler.
struct MaskedTokenTrace {
  std::size_t sentence = 0;
  int offset = 0;
  std::size_t position = 0;  // sentence-relative
  PredictionOutcome help;
  PredictionOutcome base;
};

// Runs every sentence through every masking pass. Outcomes are in document
// order: sentence, then pass, then position.
// Throws Error(kSentenceTooLong) if a sentence cannot fit the model.
std::vector<MaskedTokenTrace> TraceDocument(
    std::string_view document, std::string_view summary,
    const MaskingPolicy& policy, const MaskedLanguageModel& model,
    const SentenceSplitter& splitter = SentenceSplitter());

// Folds a trace into a score: accuracy gives (n_help - n_base) / n_total,
// the other variants the mean of (x_help - x_base) over all masked tokens.
// Throws Error(kNoMaskableTokens) on an empty trace.
BlancResult ResultFromTrace(std::span<const MaskedTokenTrace> trace,
                            ScoreVariant variant);

BlancResult ScorePair(std::string_view document, std::string_view summary,
                      const MaskingPolicy& policy, ScoreVariant variant,
                      const MaskedLanguageModel& model,
                      const SentenceSplitter& splitter = SentenceSplitter());

struct PairRecord {
  std::string id;
  std::string document;
  std::string summary;
};

struct BatchItem {
  std::string id;
  std::optional<BlancResult> result;
  std::optional<Error> error;
};

// Scores each pair independently; a failing pair records its error and the
// rest carry on. Output order matches input order and does not depend on
// `parallelism`. Throws Error(kInvalidArgument) on duplicate ids.
std::vector<BatchItem> ScoreBatch(std::span<const PairRecord> pairs,
                                  const MaskingPolicy& policy,
                                  ScoreVariant variant,
                                  const MaskedLanguageModel& model,
                                  int parallelism = 1);

// Sum of squared scores across mask steps (signs are discarded). Marked
// experimental: it cannot tell a strongly negative score from a positive one.
double CombinedSquares(std::span<const double> scores);

}  // namespace blanc

#endif  // BLANC_SCORING_H_
