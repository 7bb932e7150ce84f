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

#ifndef BLANC_ANALYSIS_H_
#define BLANC_ANALYSIS_H_

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "blanc/annotations.h"
#include "blanc/correlation.h"

namespace blanc {

struct Split {
  std::vector<int> small;  // sorted member indices
  std::vector<int> large;  // the complement, sorted
};

// All C(n, k) ways to pick `k` of `n` members, in lexicographic order of the
// small group. Throws Error(kInvalidArgument) unless 0 < k < n.
std::vector<Split> EnumerateSplits(int n, int k);

// Binomial coefficient; used to size split enumerations.
uint64_t Choose(int n, int k);

using ScoreMap = std::map<std::string, double>;

struct SplitRecord {
  int split_id = 0;
  std::vector<std::string> small_group;
  std::vector<std::string> large_group;
  // Spearman of the small-group mean vs the large-group mean. Empty when a
  // series is constant.
  std::optional<CorrelationResult> human_human;
  // Spearman of the automatic score vs the large-group mean.
  std::optional<CorrelationResult> blanc_human;
  bool human_human_significant = false;
  bool blanc_human_significant = false;
};

struct SplitAnalysisOptions {
  int small_group_size = 3;
  double alpha = 0.05;
};

// For every split of the annotators into a small group and the rest,
// correlates per-pair group means. A group's mean for a pair averages
// whichever of its members rated that pair; pairs a group never rated are
// left out of that split. Throws Error(kMissingScores) if an annotated pair
// has no automatic score, Error(kInvalidArgument) if there are too few
// annotators for the split size.
std::vector<SplitRecord> SplitCorrelationAnalysis(
    const AnnotationSet& annotations, const ScoreMap& scores, Quality quality,
    const SplitAnalysisOptions& options = {});

struct OutperformSummary {
  double fraction = 0.0;
  int wins = 0;
  int compared = 0;
};

// Share of splits where the automatic score correlates with the large group
// more strongly than the small group does. Only significant coefficients
// count; a split where exactly one side is significant is won by that side,
// and splits where neither is are skipped. Throws Error(kEmptyInput) when
// nothing is left to compare.
OutperformSummary OutperformFraction(std::span<const SplitRecord> records);

struct ErrorCorrelation {
  CorrelationResult spearman;
  CorrelationResult pearson;
};

// Correlates scores with the number of distinct annotators who marked at
// least one factual error in each pair. Pairs without error records count
// zero. Throws Error(kMissingScores) for errors on unscored pairs and
// Error(kDegenerateInput) when either series is constant.
ErrorCorrelation CorrelateWithErrors(const ScoreMap& scores,
                                     std::span<const ErrorAnnotation> errors);

// Seeded synthetic study with a planted signal: each pair has a latent
// quality in [0, 4]; annotators rate it with Gaussian-like noise of scale
// `annotator_noise` (rounded, clamped to 0..4), and the automatic score is
// latent / 10 plus noise of scale `score_noise`. Uses only integer RNG output
// and arithmetic so results are identical across platforms.
struct SyntheticStudy {
  AnnotationSet annotations;
  ScoreMap scores;
};

struct SyntheticStudyOptions {
  int pairs = 60;
  int annotators = 10;
  double annotator_noise = 1.0;
  double score_noise = 0.05;
  uint64_t seed = 1;
};

SyntheticStudy GenerateSyntheticStudy(const SyntheticStudyOptions& options);

}  // namespace blanc

#endif  // BLANC_ANALYSIS_H_
