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

#ifndef BLANC_BACKEND_H_
#define BLANC_BACKEND_H_

#include <cstdint>
#include <filesystem>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "blanc/masking.h"
#include "blanc/vocabulary.h"

namespace blanc {

// What the model said about one masked position.
struct PredictionOutcome {
  int32_t gold_id = 0;
  int32_t top_id = 0;  // argmax of the logits; lowest id wins ties
  double gold_logit = 0.0;
  double gold_prob = 0.0;
  double gold_logprob = 0.0;

  bool operator==(const PredictionOutcome&) const = default;
};

// Max-subtracted softmax over one position's logits, evaluated only at the
// gold id. Probabilities are clamped away from zero so that the log
// probability stays finite.
PredictionOutcome OutcomeFromLogits(std::span<const float> logits,
                                    int32_t gold_id);

// Full distribution; only tests and diagnostics need it.
std::vector<double> Softmax(std::span<const float> logits);

class MaskedLanguageModel {
 public:
  virtual ~MaskedLanguageModel() = default;

  virtual const Vocabulary& vocabulary() const = 0;

  // True if Predict may be called from several threads at once.
  virtual bool thread_safe() const = 0;

  // One outcome list per input, one outcome per masked position, in input
  // order. Results never depend on how inputs are grouped into calls.
  // Throws Error(kInputTooLong) or Error(kInvalidArgument) on bad ids.
  virtual std::vector<std::vector<PredictionOutcome>> Predict(
      std::span<const MaskedInput> inputs) const = 0;

 protected:
  // Shared input validation for implementations.
  void CheckInput(const MaskedInput& input) const;
};

struct BackendOptions {
  // Maximum inputs per inference call (ONNX backend only).
  int batch_size = 8;
  // Intra-op threads for the ONNX runtime; 0 lets the runtime decide.
  int intra_op_threads = 1;
  // Context copy boost for the reference backend.
  double copy_boost = 4.0;
};

// Opens a backend from a bundle directory, or the built-in reference
// backend when `spec` is "reference". Directories containing model.onnx
// load the ONNX backend; directories with unigram.txt load a reference
// backend over that vocabulary. If selftest.json is present it is checked.
// Throws ModelLoadError naming the failing component.
std::unique_ptr<MaskedLanguageModel> LoadBackend(
    std::string_view spec, const BackendOptions& options = {});

// Directory holding the built-in reference vocabulary. BLANC_DATA_DIR in the
// environment overrides the compiled-in location.
std::filesystem::path DefaultDataDir();

// Validates selftest.json against a loaded backend: tokenization must match
// exactly and at least 98% of top-1 predictions must agree. Throws
// ModelLoadError("self-test").
void RunSelfTest(const MaskedLanguageModel& model,
                 const std::filesystem::path& selftest_file);

}  // namespace blanc

#endif  // BLANC_BACKEND_H_
