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

#ifndef BLANC_ONNX_BACKEND_H_
#define BLANC_ONNX_BACKEND_H_

#include <filesystem>
#include <memory>
#include <string>
#include <vector>

#include "blanc/backend.h"

namespace blanc {

// Masked LM served by ONNX Runtime. The graph takes int64 `input_ids` and
// `attention_mask` (and optionally `token_type_ids`) of shape [batch, seq]
// and returns float logits of shape [batch, seq, vocab] as its first output.
//
// The runtime library is opened with dlopen: BLANC_ONNXRUNTIME_LIB in the
// environment wins, then the path found at build time, then the system
// loader's search path.
class OnnxBackend : public MaskedLanguageModel {
 public:
  // Throws ModelLoadError("vocabulary" | "tokenizer-config" | "runtime" |
  // "model").
  static OnnxBackend Load(const std::filesystem::path& bundle_dir,
                          const BackendOptions& options);

  OnnxBackend(OnnxBackend&&) noexcept;
  OnnxBackend& operator=(OnnxBackend&&) noexcept;
  ~OnnxBackend() override;

  const Vocabulary& vocabulary() const override;
  bool thread_safe() const override { return true; }

  // Inputs are grouped by exact length and run in chunks of at most
  // batch_size, so no padding ever enters the graph.
  std::vector<std::vector<PredictionOutcome>> Predict(
      std::span<const MaskedInput> inputs) const override;

  // Raw logits for one unpadded sequence, row-major [seq, vocab].
  std::vector<float> Logits(const std::vector<int32_t>& token_ids) const;

 private:
  struct Impl;
  explicit OnnxBackend(std::unique_ptr<Impl> impl);
  std::unique_ptr<Impl> impl_;
};

}  // namespace blanc

#endif  // BLANC_ONNX_BACKEND_H_
