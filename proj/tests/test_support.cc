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

#include "test_support.h"

#include <fstream>
#include <sstream>

#include "blanc/error.h"
#include "blanc/sentence_splitter.h"
#include "nlohmann/json.hpp"

namespace blanc::testing {

std::filesystem::path SourceDir() { return BLANC_SOURCE_DIR; }

std::filesystem::path TestDataDir() { return SourceDir() / "tests" / "data"; }

const MaskedLanguageModel& ReferenceModel() {
  static const auto* model = LoadBackend("reference").release();
  return *model;
}

std::string ReadFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

const std::vector<PairRecord>& DeskCorpus() {
  static const auto* pairs = [] {
    auto* out = new std::vector<PairRecord>;
    std::ifstream in(TestDataDir() / "desk_corpus.jsonl");
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      const auto record = nlohmann::json::parse(line);
      out->push_back({record.at("id"), record.at("document"),
                      record.at("summary")});
    }
    return out;
  }();
  return *pairs;
}

std::vector<PairRecord> ScoringFixtures() {
  const std::vector<PairRecord>& desk = DeskCorpus();
  std::vector<PairRecord> out(desk.begin(), desk.end());
  const std::size_t n = desk.size();
  for (std::size_t i = 0; i < n; ++i) {
    const PairRecord& other = desk[(i + 7) % n];
    out.push_back({desk[i].id + "/mismatched", desk[i].document, other.summary});
  }
  for (std::size_t i = 0; i < 10; ++i) {
    const auto sentences = SplitSentences(desk[i].document);
    out.push_back(
        {desk[i].id + "/lead", desk[i].document, sentences.front().text});
  }
  return out;
}

Vocabulary TinyVocabulary(const std::vector<std::string>& words) {
  std::vector<std::string> tokens = {"[PAD]", "[UNK]", "[CLS]", "[SEP]",
                                     "[MASK]", "."};
  tokens.insert(tokens.end(), words.begin(), words.end());
  return Vocabulary(tokens, {.pad = 0, .unk = 1, .cls = 2, .sep = 3, .mask = 4,
                             .filler = 5},
                    512, true);
}

std::vector<std::vector<PredictionOutcome>> ScriptedModel::Predict(
    std::span<const MaskedInput> inputs) const {
  std::vector<std::vector<PredictionOutcome>> out;
  for (const MaskedInput& input : inputs) {
    CheckInput(input);
    std::vector<PredictionOutcome> outcomes;
    for (std::size_t k = 0; k < input.masked_positions.size(); ++k) {
      const std::vector<float> logits = fn_(input, k);
      outcomes.push_back(OutcomeFromLogits(logits, input.gold_ids[k]));
    }
    out.push_back(std::move(outcomes));
  }
  return out;
}

bool HasSummaryPrefix(const MaskedInput& input, const SpecialTokens& specials) {
  // [CLS] prefix [SEP] ...: anything other than filler before the first SEP.
  for (std::size_t i = 1; i < input.token_ids.size(); ++i) {
    const int32_t id = input.token_ids[i];
    if (id == specials.sep) return false;
    if (id != specials.filler) return true;
  }
  return false;
}

}  // namespace blanc::testing
