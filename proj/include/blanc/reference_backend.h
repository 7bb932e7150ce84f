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

#ifndef BLANC_REFERENCE_BACKEND_H_
#define BLANC_REFERENCE_BACKEND_H_

#include <filesystem>
#include <vector>

#include "blanc/backend.h"

namespace blanc {

// Deterministic stand-in for a masked LM: a damped unigram prior plus a copy
// model over the prefix. The logit of vocabulary entry v is
//
//   prior_weight * ln(count[v] + 1) + copy_boost * ln(1 + n(v))
//
// where n(v) counts occurrences of v in the prefix segment (between [CLS]
// and the first [SEP]), skipping special tokens, the filler, and any token
// already visible in the sentence segment. Filler-only prefixes therefore
// add nothing, while a summary that mentions a masked word raises its
// probability, which is enough to exercise every scoring path.
class ReferenceBackend : public MaskedLanguageModel {
 public:
  static constexpr double kDefaultPriorWeight = 0.25;

  ReferenceBackend(Vocabulary vocab, std::vector<double> unigram_counts,
                   double copy_boost,
                   double prior_weight = kDefaultPriorWeight);

  // Reads vocab.txt, tokenizer.json and unigram.txt (one count per line,
  // aligned with vocab.txt).
  static ReferenceBackend Load(const std::filesystem::path& dir,
                               double copy_boost);

  const Vocabulary& vocabulary() const override { return vocab_; }
  bool thread_safe() const override { return true; }
  std::vector<std::vector<PredictionOutcome>> Predict(
      std::span<const MaskedInput> inputs) const override;

  // The logit vector used for every masked position of `input`.
  std::vector<float> Logits(const MaskedInput& input) const;

  double copy_boost() const { return copy_boost_; }
  const std::vector<double>& log_prior() const { return log_prior_; }

 private:
  Vocabulary vocab_;
  std::vector<double> log_prior_;
  double copy_boost_;
};

}  // namespace blanc

#endif  // BLANC_REFERENCE_BACKEND_H_
