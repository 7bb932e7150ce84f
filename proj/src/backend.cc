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

#include "blanc/backend.h"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <limits>

#include "blanc/error.h"
#include "blanc/onnx_backend.h"
#include "blanc/reference_backend.h"
#include "blanc/tokenizer.h"
#include "nlohmann/json.hpp"

#ifndef BLANC_DEFAULT_DATA_DIR
#define BLANC_DEFAULT_DATA_DIR "data"
#endif

namespace blanc {

PredictionOutcome OutcomeFromLogits(std::span<const float> logits,
                                    int32_t gold_id) {
  if (logits.empty() || gold_id < 0 ||
      static_cast<std::size_t>(gold_id) >= logits.size()) {
    throw Error(ErrorCode::kInvalidArgument, "gold id outside logit vector");
  }
  const auto top = std::max_element(logits.begin(), logits.end());
  const double max_logit = *top;
  double sum = 0.0;
  for (float l : logits) sum += std::exp(static_cast<double>(l) - max_logit);

  PredictionOutcome out;
  out.gold_id = gold_id;
  out.top_id = static_cast<int32_t>(top - logits.begin());
  out.gold_logit = logits[gold_id];
  out.gold_logprob = (out.gold_logit - max_logit) - std::log(sum);
  out.gold_prob = std::exp(out.gold_logprob);
  if (out.gold_prob <= 0.0) {
    out.gold_prob = std::numeric_limits<double>::min();
    out.gold_logprob = std::log(out.gold_prob);
  }
  return out;
}

std::vector<double> Softmax(std::span<const float> logits) {
  std::vector<double> out(logits.size());
  if (logits.empty()) return out;
  const double max_logit = *std::max_element(logits.begin(), logits.end());
  double sum = 0.0;
  for (std::size_t i = 0; i < logits.size(); ++i) {
    out[i] = std::exp(static_cast<double>(logits[i]) - max_logit);
    sum += out[i];
  }
  for (double& p : out) p /= sum;
  return out;
}

void MaskedLanguageModel::CheckInput(const MaskedInput& input) const {
  const Vocabulary& vocab = vocabulary();
  if (input.token_ids.size() > static_cast<std::size_t>(vocab.max_len())) {
    throw Error(ErrorCode::kInputTooLong,
                "input of " + std::to_string(input.token_ids.size()) +
                    " tokens exceeds max_len " +
                    std::to_string(vocab.max_len()));
  }
  for (int32_t id : input.token_ids) {
    if (!vocab.Contains(id)) {
      throw Error(ErrorCode::kInvalidArgument,
                  "token id " + std::to_string(id) + " not in vocabulary");
    }
  }
  if (input.masked_positions.size() != input.gold_ids.size()) {
    throw Error(ErrorCode::kInvalidArgument,
                "masked positions and gold ids differ in length");
  }
  for (std::size_t i = 0; i < input.masked_positions.size(); ++i) {
    if (input.masked_positions[i] >= input.token_ids.size() ||
        !vocab.Contains(input.gold_ids[i])) {
      throw Error(ErrorCode::kInvalidArgument, "bad masked position");
    }
  }
}

std::filesystem::path DefaultDataDir() {
  if (const char* env = std::getenv("BLANC_DATA_DIR"); env && *env) {
    return env;
  }
  return BLANC_DEFAULT_DATA_DIR;
}

void RunSelfTest(const MaskedLanguageModel& model,
                 const std::filesystem::path& selftest_file) {
  std::ifstream in(selftest_file);
  if (!in) {
    throw ModelLoadError("self-test", "cannot open " + selftest_file.string());
  }
  nlohmann::json fixture;
  try {
    fixture = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ModelLoadError("self-test", e.what());
  }

  try {
    const WordPieceTokenizer tokenizer(model.vocabulary());
    for (const auto& item : fixture.value("tokenization", nlohmann::json::array())) {
      const auto expected = item.at("ids").get<std::vector<int32_t>>();
      const std::string text = item.at("text").get<std::string>();
      if (TokenIds(tokenizer.Tokenize(text)) != expected) {
        throw ModelLoadError("self-test", "tokenization mismatch on \"" + text + "\"");
      }
    }

    std::vector<MaskedInput> inputs;
    std::vector<std::vector<int32_t>> expected_top;
    for (const auto& item : fixture.value("predictions", nlohmann::json::array())) {
      MaskedInput input;
      input.token_ids = item.at("input_ids").get<std::vector<int32_t>>();
      input.masked_positions =
          item.at("masked_positions").get<std::vector<std::size_t>>();
      expected_top.push_back(
          item.at("expected_top_ids").get<std::vector<int32_t>>());
      // Gold ids are irrelevant for top-1 agreement.
      input.gold_ids.assign(input.masked_positions.size(),
                            model.vocabulary().specials().unk);
      inputs.push_back(std::move(input));
    }
    if (inputs.empty()) return;
    const auto outcomes = model.Predict(inputs);
    std::size_t total = 0;
    std::size_t agree = 0;
    for (std::size_t i = 0; i < inputs.size(); ++i) {
      if (expected_top[i].size() != outcomes[i].size()) {
        throw ModelLoadError("self-test", "expected ids misaligned");
      }
      for (std::size_t j = 0; j < outcomes[i].size(); ++j) {
        ++total;
        if (outcomes[i][j].top_id == expected_top[i][j]) ++agree;
      }
    }
    if (static_cast<double>(agree) < 0.98 * static_cast<double>(total)) {
      throw ModelLoadError("self-test",
                           "top-1 agreement " + std::to_string(agree) + "/" +
                               std::to_string(total) + " below 98%");
    }
  } catch (const nlohmann::json::exception& e) {
    throw ModelLoadError("self-test", e.what());
  } catch (const ModelLoadError&) {
    throw;
  } catch (const Error& e) {
    throw ModelLoadError("self-test", e.what());
  }
}

std::unique_ptr<MaskedLanguageModel> LoadBackend(std::string_view spec,
                                                 const BackendOptions& options) {
  namespace fs = std::filesystem;
  const fs::path dir = spec == "reference" ? DefaultDataDir() / "reference"
                                           : fs::path(spec);
  if (!fs::is_directory(dir)) {
    throw ModelLoadError("vocabulary", "bundle directory " + dir.string() +
                                           " does not exist");
  }
  if (!fs::exists(dir / "vocab.txt")) {
    throw ModelLoadError("vocabulary", "missing " + (dir / "vocab.txt").string());
  }

  std::unique_ptr<MaskedLanguageModel> model;
  if (fs::exists(dir / "model.onnx")) {
    model = std::make_unique<OnnxBackend>(OnnxBackend::Load(dir, options));
  } else if (fs::exists(dir / "unigram.txt")) {
    model = std::make_unique<ReferenceBackend>(
        ReferenceBackend::Load(dir, options.copy_boost));
  } else {
    throw ModelLoadError("model", "neither model.onnx nor unigram.txt in " +
                                      dir.string());
  }
  if (fs::exists(dir / "selftest.json")) {
    RunSelfTest(*model, dir / "selftest.json");
  }
  return model;
}

}  // namespace blanc
