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

#include "blanc/reference_backend.h"

#include <cmath>
#include <fstream>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>

#include "blanc/error.h"

namespace blanc {

ReferenceBackend::ReferenceBackend(Vocabulary vocab,
                                   std::vector<double> unigram_counts,
                                   double copy_boost, double prior_weight)
    : vocab_(std::move(vocab)), copy_boost_(copy_boost) {
  if (!(prior_weight >= 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "prior weight must be >= 0");
  }
  if (unigram_counts.size() != static_cast<std::size_t>(vocab_.size())) {
    throw Error(ErrorCode::kInvalidArgument,
                "unigram table has " + std::to_string(unigram_counts.size()) +
                    " entries for a vocabulary of " +
                    std::to_string(vocab_.size()));
  }
  log_prior_.reserve(unigram_counts.size());
  for (double count : unigram_counts) {
    if (!(count >= 0.0)) {
      throw Error(ErrorCode::kInvalidArgument, "negative unigram count");
    }
    log_prior_.push_back(prior_weight * std::log(count + 1.0));
  }
}

ReferenceBackend ReferenceBackend::Load(const std::filesystem::path& dir,
                                        double copy_boost) {
  Vocabulary vocab =
      Vocabulary::Load(dir / "vocab.txt", dir / "tokenizer.json");
  std::ifstream in(dir / "unigram.txt");
  if (!in) {
    throw ModelLoadError("unigram", "cannot open " +
                                        (dir / "unigram.txt").string());
  }
  std::vector<double> counts;
  std::string line;
  while (std::getline(in, line)) {
    try {
      counts.push_back(std::stod(line));
    } catch (const std::exception&) {
      throw ModelLoadError("unigram", "bad count on line " +
                                          std::to_string(counts.size() + 1));
    }
  }
  try {
    return ReferenceBackend(std::move(vocab), std::move(counts), copy_boost);
  } catch (const Error& e) {
    throw ModelLoadError("unigram", e.what());
  }
}

std::vector<float> ReferenceBackend::Logits(const MaskedInput& input) const {
  const SpecialTokens& specials = vocab_.specials();
  const std::vector<int32_t>& ids = input.token_ids;
  // Without a leading [CLS] the whole input is the sentence segment.
  std::size_t prefix_end = 0;
  if (!ids.empty() && ids.front() == specials.cls) {
    prefix_end = 1;
    while (prefix_end < ids.size() && ids[prefix_end] != specials.sep) {
      ++prefix_end;
    }
  }
  std::unordered_set<int32_t> in_sentence;
  for (std::size_t i = prefix_end; i < ids.size(); ++i) {
    if (!vocab_.IsSpecial(ids[i])) in_sentence.insert(ids[i]);
  }
  std::unordered_map<int32_t, int> copies;
  for (std::size_t i = 1; i < prefix_end; ++i) {
    const int32_t id = ids[i];
    if (vocab_.IsSpecial(id) || id == specials.filler ||
        in_sentence.contains(id)) {
      continue;
    }
    ++copies[id];
  }
  std::vector<float> logits(log_prior_.begin(), log_prior_.end());
  for (const auto& [id, count] : copies) {
    logits[id] = static_cast<float>(log_prior_[id] +
                                    copy_boost_ * std::log1p(count));
  }
  return logits;
}

std::vector<std::vector<PredictionOutcome>> ReferenceBackend::Predict(
    std::span<const MaskedInput> inputs) const {
  std::vector<std::vector<PredictionOutcome>> out;
  out.reserve(inputs.size());
  for (const MaskedInput& input : inputs) {
    CheckInput(input);
    std::vector<PredictionOutcome> outcomes;
    if (!input.masked_positions.empty()) {
      const std::vector<float> logits = Logits(input);
      for (int32_t gold : input.gold_ids) {
        outcomes.push_back(OutcomeFromLogits(logits, gold));
      }
    }
    out.push_back(std::move(outcomes));
  }
  return out;
}

}  // namespace blanc
