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

#include "blanc/analysis.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>
#include <set>

#include "blanc/error.h"

namespace blanc {

uint64_t Choose(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  uint64_t out = 1;
  for (int i = 1; i <= k; ++i) {
    out = out * static_cast<uint64_t>(n - k + i) / static_cast<uint64_t>(i);
  }
  return out;
}

std::vector<Split> EnumerateSplits(int n, int k) {
  if (k <= 0 || k >= n) {
    throw Error(ErrorCode::kInvalidArgument,
                "split size must satisfy 0 < k < n (n=" + std::to_string(n) +
                    ", k=" + std::to_string(k) + ")");
  }
  std::vector<Split> out;
  out.reserve(Choose(n, k));
  std::vector<int> pick(k);
  for (int i = 0; i < k; ++i) pick[i] = i;
  while (true) {
    Split split;
    split.small = pick;
    for (int m = 0, j = 0; m < n; ++m) {
      if (j < k && pick[j] == m) {
        ++j;
      } else {
        split.large.push_back(m);
      }
    }
    out.push_back(std::move(split));

    int i = k - 1;
    while (i >= 0 && pick[i] == n - k + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
  return out;
}

namespace {

std::optional<CorrelationResult> TrySpearman(const std::vector<double>& xs,
                                             const std::vector<double>& ys) {
  try {
    return Spearman(xs, ys);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kDegenerateInput) throw;
    return std::nullopt;
  }
}

bool Significant(const std::optional<CorrelationResult>& r, double alpha) {
  return r.has_value() && r->p_value < alpha;
}

}  // namespace

std::vector<SplitRecord> SplitCorrelationAnalysis(
    const AnnotationSet& annotations, const ScoreMap& scores, Quality quality,
    const SplitAnalysisOptions& options) {
  const std::vector<std::string> annotators = annotations.Annotators();
  const std::vector<std::string> pairs = annotations.PairIds(quality);
  for (const std::string& pair : pairs) {
    if (!scores.contains(pair)) {
      throw Error(ErrorCode::kMissingScores,
                  "no score for annotated pair '" + pair + "'");
    }
  }

  std::map<std::string, int> pair_index;
  for (std::size_t i = 0; i < pairs.size(); ++i) pair_index[pairs[i]] = i;
  std::map<std::string, int> annotator_index;
  for (std::size_t i = 0; i < annotators.size(); ++i) {
    annotator_index[annotators[i]] = i;
  }
  // ratings[pair][annotator], NaN when absent.
  std::vector<std::vector<double>> ratings(
      pairs.size(), std::vector<double>(annotators.size(), std::nan("")));
  for (const Annotation& a : annotations.records()) {
    if (a.quality != quality) continue;
    ratings[pair_index.at(a.pair_id)][annotator_index.at(a.annotator_id)] =
        a.score;
  }

  auto group_mean = [](const std::vector<double>& row,
                       const std::vector<int>& members) -> std::optional<double> {
    double sum = 0.0;
    int count = 0;
    for (int m : members) {
      if (std::isnan(row[m])) continue;
      sum += row[m];
      ++count;
    }
    if (count == 0) return std::nullopt;
    return sum / count;
  };

  std::vector<SplitRecord> out;
  const std::vector<Split> splits = EnumerateSplits(
      static_cast<int>(annotators.size()), options.small_group_size);
  for (std::size_t s = 0; s < splits.size(); ++s) {
    SplitRecord record;
    record.split_id = static_cast<int>(s);
    for (int m : splits[s].small) record.small_group.push_back(annotators[m]);
    for (int m : splits[s].large) record.large_group.push_back(annotators[m]);

    std::vector<double> small_means;
    std::vector<double> large_means;
    std::vector<double> automatic;
    for (std::size_t p = 0; p < pairs.size(); ++p) {
      const auto small = group_mean(ratings[p], splits[s].small);
      const auto large = group_mean(ratings[p], splits[s].large);
      if (!small || !large) continue;
      small_means.push_back(*small);
      large_means.push_back(*large);
      automatic.push_back(scores.at(pairs[p]));
    }
    record.human_human = TrySpearman(small_means, large_means);
    record.blanc_human = TrySpearman(automatic, large_means);
    record.human_human_significant =
        Significant(record.human_human, options.alpha);
    record.blanc_human_significant =
        Significant(record.blanc_human, options.alpha);
    out.push_back(std::move(record));
  }
  return out;
}

OutperformSummary OutperformFraction(std::span<const SplitRecord> records) {
  OutperformSummary out;
  for (const SplitRecord& r : records) {
    const bool human = r.human_human_significant;
    const bool automatic = r.blanc_human_significant;
    if (!human && !automatic) continue;
    ++out.compared;
    if (automatic &&
        (!human || r.blanc_human->coefficient > r.human_human->coefficient)) {
      ++out.wins;
    }
  }
  if (out.compared == 0) {
    throw Error(ErrorCode::kEmptyInput, "no split has a significant correlation");
  }
  out.fraction = static_cast<double>(out.wins) / out.compared;
  return out;
}

ErrorCorrelation CorrelateWithErrors(const ScoreMap& scores,
                                     std::span<const ErrorAnnotation> errors) {
  std::map<std::string, std::set<std::string>> flagged_by;
  for (const ErrorAnnotation& e : errors) {
    if (!scores.contains(e.pair_id)) {
      throw Error(ErrorCode::kMissingScores,
                  "error annotation for unscored pair '" + e.pair_id + "'");
    }
    flagged_by[e.pair_id].insert(e.annotator_id);
  }
  std::vector<double> xs;
  std::vector<double> counts;
  for (const auto& [pair, score] : scores) {
    xs.push_back(score);
    auto it = flagged_by.find(pair);
    counts.push_back(it == flagged_by.end() ? 0.0
                                            : static_cast<double>(it->second.size()));
  }
  return {Spearman(xs, counts), Pearson(xs, counts)};
}

namespace {

class PortableRng {
 public:
  explicit PortableRng(uint64_t seed) : engine_(seed) {}

  // Uniform in [0, 1) with 53 random bits.
  double Uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  // Irwin-Hall approximation to a standard normal.
  double Normal() {
    double sum = 0.0;
    for (int i = 0; i < 12; ++i) sum += Uniform();
    return sum - 6.0;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace

SyntheticStudy GenerateSyntheticStudy(const SyntheticStudyOptions& options) {
  if (options.pairs < 1 || options.annotators < 1) {
    throw Error(ErrorCode::kInvalidArgument,
                "synthetic study needs at least one pair and one annotator");
  }
  PortableRng rng(options.seed);
  SyntheticStudy study;
  char id[32];
  for (int p = 0; p < options.pairs; ++p) {
    std::snprintf(id, sizeof(id), "p%04d", p);
    const std::string pair_id = id;
    const double latent = 4.0 * rng.Uniform();
    study.scores[pair_id] = latent / 10.0 + options.score_noise * rng.Normal();
    for (int a = 0; a < options.annotators; ++a) {
      std::snprintf(id, sizeof(id), "a%02d", a);
      for (Quality q : {Quality::kFluent, Quality::kUnderstandable,
                        Quality::kInformative, Quality::kCompact,
                        Quality::kOverall}) {
        const double noisy = latent + options.annotator_noise * rng.Normal();
        const int rating =
            static_cast<int>(std::clamp(std::floor(noisy + 0.5), 0.0, 4.0));
        study.annotations.Add({pair_id, id, q, rating});
      }
    }
  }
  return study;
}

}  // namespace blanc
