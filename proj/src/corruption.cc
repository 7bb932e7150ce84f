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

#include "blanc/corruption.h"

#include <cmath>
#include <random>
#include <set>
#include <unordered_map>

#include "blanc/error.h"

namespace blanc {
namespace {

uint64_t Fnv1a(std::string_view s) {
  uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

// Unbiased index in [0, n) from raw engine output.
std::size_t UniformIndex(std::mt19937_64& engine, std::size_t n) {
  const uint64_t bound = static_cast<uint64_t>(n);
  const uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  uint64_t draw;
  do {
    draw = engine();
  } while (draw >= limit);
  return static_cast<std::size_t>(draw % bound);
}

}  // namespace

void EntityPool::AddDocument(const std::string& source_id,
                             std::string_view text) {
  for (EntityMention& m : ExtractEntities(text)) {
    by_kind_[m.kind].push_back({source_id, std::move(m.text)});
  }
}

std::vector<std::string> EntityPool::Candidates(EntityKind kind,
                                                std::string_view exclude_source,
                                                std::string_view original) const {
  std::vector<std::string> out;
  auto it = by_kind_.find(kind);
  if (it == by_kind_.end()) return out;
  std::set<std::string_view> seen;
  for (const Entry& e : it->second) {
    if (e.source_id == exclude_source || e.text == original) continue;
    if (seen.insert(e.text).second) out.push_back(e.text);
  }
  return out;
}

SwapTrial SwapEntity(std::string_view trial_id, std::string_view pair_id,
                     std::string_view summary, const EntityPool& pool,
                     uint64_t seed) {
  struct Option {
    EntityMention mention;
    std::vector<std::string> replacements;
  };
  std::vector<Option> options;
  for (EntityMention& m : ExtractEntities(summary)) {
    auto replacements = pool.Candidates(m.kind, pair_id, m.text);
    if (!replacements.empty()) {
      options.push_back({std::move(m), std::move(replacements)});
    }
  }
  if (options.empty()) {
    throw Error(ErrorCode::kNoSwappableEntity,
                "no entity in summary '" + std::string(pair_id) +
                    "' has a same-kind replacement");
  }

  std::mt19937_64 engine(seed ^ Fnv1a(trial_id));
  const Option& chosen = options[UniformIndex(engine, options.size())];
  const std::string& replacement =
      chosen.replacements[UniformIndex(engine, chosen.replacements.size())];

  SwapTrial trial;
  trial.trial_id = trial_id;
  trial.pair_id = pair_id;
  trial.original_summary = summary;
  trial.corrupted_summary = std::string(summary.substr(0, chosen.mention.begin)) +
                            replacement +
                            std::string(summary.substr(chosen.mention.end));
  trial.span = {chosen.mention.begin, chosen.mention.end, chosen.mention.text,
                replacement, chosen.mention.kind};
  return trial;
}

SwapOutcomeSummary SummarizeChanges(std::string label,
                                    std::span<const double> before,
                                    std::span<const double> after) {
  SwapOutcomeSummary out;
  out.label = std::move(label);
  out.n_trials = static_cast<int>(before.size());
  if (before.empty()) return out;
  int decreased = 0;
  int increased = 0;
  int unchanged = 0;
  for (std::size_t i = 0; i < before.size(); ++i) {
    const double delta = after[i] - before[i];
    if (std::abs(delta) < kUnchangedTolerance) {
      ++unchanged;
    } else if (delta < 0) {
      ++decreased;
    } else {
      ++increased;
    }
  }
  const double n = static_cast<double>(before.size());
  out.frac_decreased = decreased / n;
  out.frac_increased = increased / n;
  out.frac_unchanged = unchanged / n;
  return out;
}

SwapReport RunSwapExperiment(std::span<const PairRecord> pairs,
                             const SwapExperimentOptions& options,
                             const MaskedLanguageModel& model) {
  if (options.gaps.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "at least one mask step is required");
  }
  if (options.trials_per_pair < 1) {
    throw Error(ErrorCode::kInvalidArgument, "trials_per_pair must be >= 1");
  }
  EntityPool pool;
  for (const PairRecord& p : pairs) pool.AddDocument(p.id, p.document);

  SwapReport report;
  std::vector<SwapTrial> candidates;
  std::vector<const PairRecord*> sources;
  for (const PairRecord& p : pairs) {
    for (int k = 0; k < options.trials_per_pair; ++k) {
      const std::string trial_id =
          options.trials_per_pair == 1 ? p.id : p.id + "#" + std::to_string(k);
      try {
        candidates.push_back(
            SwapEntity(trial_id, p.id, p.summary, pool, options.seed));
        sources.push_back(&p);
      } catch (const Error& e) {
        report.skipped.push_back({trial_id, p.id, e.code(), e.what()});
      }
    }
  }

  std::vector<PairRecord> originals;
  std::vector<PairRecord> corrupted;
  std::set<std::string> original_ids;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (original_ids.insert(sources[i]->id).second) originals.push_back(*sources[i]);
    corrupted.push_back({candidates[i].trial_id, sources[i]->document,
                         candidates[i].corrupted_summary});
  }

  // scores[g][id]
  std::vector<std::unordered_map<std::string, double>> before(options.gaps.size());
  std::vector<std::unordered_map<std::string, double>> after(options.gaps.size());
  std::map<std::string, Error> failures;
  for (std::size_t g = 0; g < options.gaps.size(); ++g) {
    MaskingPolicy policy = options.policy;
    policy.gap = options.gaps[g];
    for (const BatchItem& item : ScoreBatch(originals, policy, options.variant,
                                            model, options.parallelism)) {
      if (item.result) {
        before[g][item.id] = item.result->score;
      } else {
        failures.emplace(item.id, *item.error);
      }
    }
    for (const BatchItem& item : ScoreBatch(corrupted, policy, options.variant,
                                            model, options.parallelism)) {
      if (item.result) {
        after[g][item.id] = item.result->score;
      } else {
        failures.emplace(item.id, *item.error);
      }
    }
  }

  for (SwapTrial& trial : candidates) {
    bool complete = true;
    for (std::size_t g = 0; g < options.gaps.size(); ++g) {
      auto b = before[g].find(trial.pair_id);
      auto a = after[g].find(trial.trial_id);
      if (b == before[g].end() || a == after[g].end()) {
        complete = false;
        break;
      }
      trial.scores_before.push_back(b->second);
      trial.scores_after.push_back(a->second);
    }
    if (!complete) {
      auto f = failures.find(trial.pair_id);
      if (f == failures.end()) f = failures.find(trial.trial_id);
      if (f == failures.end()) {
        report.skipped.push_back({trial.trial_id, trial.pair_id,
                                  ErrorCode::kInvalidArgument, "scoring failed"});
      } else {
        report.skipped.push_back({trial.trial_id, trial.pair_id,
                                  f->second.code(), f->second.what()});
      }
      continue;
    }
    report.trials.push_back(std::move(trial));
  }
  if (report.trials.empty()) {
    throw Error(ErrorCode::kEmptyInput, "no swap trial could be scored");
  }

  for (std::size_t g = 0; g < options.gaps.size(); ++g) {
    std::vector<double> b;
    std::vector<double> a;
    for (const SwapTrial& t : report.trials) {
      b.push_back(t.scores_before[g]);
      a.push_back(t.scores_after[g]);
    }
    report.summary.push_back(
        SummarizeChanges(std::to_string(options.gaps[g]), b, a));
  }
  if (options.gaps.size() >= 2) {
    std::vector<double> b;
    std::vector<double> a;
    for (const SwapTrial& t : report.trials) {
      b.push_back(CombinedSquares(t.scores_before));
      a.push_back(CombinedSquares(t.scores_after));
    }
    report.summary.push_back(SummarizeChanges("combined", b, a));
  }
  return report;
}

}  // namespace blanc
