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

#ifndef BLANC_TESTS_TEST_SUPPORT_H_
#define BLANC_TESTS_TEST_SUPPORT_H_

#include <filesystem>
#include <functional>
#include <string>
#include <vector>

#include "blanc/backend.h"
#include "blanc/scoring.h"
#include "blanc/vocabulary.h"

namespace blanc::testing {

// Repository root and test data directory.
std::filesystem::path SourceDir();
std::filesystem::path TestDataDir();

// The built-in reference backend, loaded once.
const MaskedLanguageModel& ReferenceModel();

// The 20 news-style pairs in tests/data/desk_corpus.jsonl.
const std::vector<PairRecord>& DeskCorpus();

// 50 scoring fixtures: the desk pairs, then documents paired with other
// documents' summaries, then documents paired with their own lead sentence.
std::vector<PairRecord> ScoringFixtures();

std::string ReadFile(const std::filesystem::path& path);

// Small vocabulary for hand-built cases: specials at 0..4, "." at 5, then
// the given words from id 6 on.
Vocabulary TinyVocabulary(const std::vector<std::string>& words);

// A model whose logits come from a callback, for rigged scenarios. The
// callback sees the input and the index of the masked position.
class ScriptedModel : public MaskedLanguageModel {
 public:
  using LogitFn =
      std::function<std::vector<float>(const MaskedInput&, std::size_t)>;

  ScriptedModel(Vocabulary vocab, LogitFn fn)
      : vocab_(std::move(vocab)), fn_(std::move(fn)) {}

  const Vocabulary& vocabulary() const override { return vocab_; }
  bool thread_safe() const override { return true; }
  std::vector<std::vector<PredictionOutcome>> Predict(
      std::span<const MaskedInput> inputs) const override;

 private:
  Vocabulary vocab_;
  LogitFn fn_;
};

// True if `input` carries a summary prefix rather than filler or nothing.
bool HasSummaryPrefix(const MaskedInput& input, const SpecialTokens& specials);

}  // namespace blanc::testing

#endif  // BLANC_TESTS_TEST_SUPPORT_H_
