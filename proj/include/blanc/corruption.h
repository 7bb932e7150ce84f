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

#ifndef BLANC_CORRUPTION_H_
#define BLANC_CORRUPTION_H_

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "blanc/entities.h"
#include "blanc/error.h"
#include "blanc/masking.h"
#include "blanc/scoring.h"

namespace blanc {

// Entities harvested from a corpus, tagged with the document they came from.
class EntityPool {
 public:
  struct Entry {
    std::string source_id;
    std::string text;
  };

  void AddDocument(const std::string& source_id, std::string_view text);

  // Distinct same-kind texts from other sources, excluding `original`, in
  // first-seen order.
  std::vector<std::string> Candidates(EntityKind kind,
                                      std::string_view exclude_source,
                                      std::string_view original) const;

 private:
  std::map<EntityKind, std::vector<Entry>> by_kind_;
};

struct SwapSpan {
  std::size_t begin = 0;  // byte offsets into the original summary
  std::size_t end = 0;
  std::string original_text;
  std::string replacement_text;
  EntityKind kind = EntityKind::kPersonLike;
};

struct SwapTrial {
  std::string trial_id;
  std::string pair_id;
  std::string original_summary;
  std::string corrupted_summary;
  SwapSpan span;
  // One entry per mask step, in the order requested.
  std::vector<double> scores_before;
  std::vector<double> scores_after;
};

// Replaces one uniformly chosen entity of `summary` (among those with at
// least one replacement candidate) by a uniformly chosen same-kind entity
// from another source. The draw depends only on `seed` and `trial_id`.
// Throws Error(kNoSwappableEntity) when no entity can be replaced.
SwapTrial SwapEntity(std::string_view trial_id, std::string_view pair_id,
                     std::string_view summary, const EntityPool& pool,
                     uint64_t seed);

struct SwapExperimentOptions {
  std::vector<int> gaps = {2, 6};
  // Thresholds and width; `gap` is overridden per entry of `gaps`.
  MaskingPolicy policy;
  ScoreVariant variant = ScoreVariant::kAccuracy;
  uint64_t seed = 0;
  int trials_per_pair = 1;
  int parallelism = 1;
};

struct SwapOutcomeSummary {
  std::string label;  // the mask step, or "combined"
  int n_trials = 0;
  double frac_decreased = 0.0;
  double frac_increased = 0.0;
  double frac_unchanged = 0.0;
};

struct SkippedTrial {
  std::string trial_id;
  std::string pair_id;
  ErrorCode code = ErrorCode::kNoSwappableEntity;
  std::string message;
};

struct SwapReport {
  std::vector<SwapTrial> trials;
  std::vector<SwapOutcomeSummary> summary;
  // Trials that could not be run, in input order.
  std::vector<SkippedTrial> skipped;
};

// |after - before| below this counts as unchanged.
inline constexpr double kUnchangedTolerance = 1e-12;

// Scores each summary before and after one entity swap, for every requested
// mask step. With two or more steps a "combined" row compares the sums of
// squared scores. The entity pool is built from all documents. Throws
// Error(kEmptyInput) if no trial succeeds.
SwapReport RunSwapExperiment(std::span<const PairRecord> pairs,
                             const SwapExperimentOptions& options,
                             const MaskedLanguageModel& model);

SwapOutcomeSummary SummarizeChanges(std::string label,
                                    std::span<const double> before,
                                    std::span<const double> after);

}  // namespace blanc

#endif  // BLANC_CORRUPTION_H_
