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

#include "blanc/error.h"

namespace blanc {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument:
      return "invalid_argument";
    case ErrorCode::kParse:
      return "parse_error";
    case ErrorCode::kModelLoad:
      return "model_load_error";
    case ErrorCode::kInputTooLong:
      return "input_too_long";
    case ErrorCode::kSentenceTooLong:
      return "sentence_too_long";
    case ErrorCode::kNoMaskableTokens:
      return "no_maskable_tokens";
    case ErrorCode::kDegenerateInput:
      return "degenerate_input";
    case ErrorCode::kMissingScores:
      return "missing_scores";
    case ErrorCode::kEmptyInput:
      return "empty_input";
    case ErrorCode::kNoSwappableEntity:
      return "no_swappable_entity";
  }
  return "unknown";
}

}  // namespace blanc
