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

#ifndef BLANC_ERROR_H_
#define BLANC_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace blanc {

enum class ErrorCode {
  kInvalidArgument,
  kParse,
  kModelLoad,
  kInputTooLong,
  kSentenceTooLong,
  kNoMaskableTokens,
  kDegenerateInput,
  kMissingScores,
  kEmptyInput,
  kNoSwappableEntity,
};

// Stable snake_case name, used in JSONL error records.
std::string_view ErrorCodeName(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

// Raised while opening a model bundle. `component` names the failing part:
// "vocabulary", "tokenizer-config", "unigram", "model", "runtime" or
// "self-test".
class ModelLoadError : public Error {
 public:
  ModelLoadError(std::string component, const std::string& detail)
      : Error(ErrorCode::kModelLoad, component + ": " + detail),
        component_(std::move(component)) {}

  const std::string& component() const { return component_; }

 private:
  std::string component_;
};

}  // namespace blanc

#endif  // BLANC_ERROR_H_
