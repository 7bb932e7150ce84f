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

#ifndef BLANC_ANNOTATIONS_H_
#define BLANC_ANNOTATIONS_H_

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

namespace blanc {

// Human-rated summary qualities, each on a 0 (very bad) .. 4 (very good)
// scale.
enum class Quality { kFluent, kUnderstandable, kInformative, kCompact, kOverall };

std::string_view QualityName(Quality quality);
std::optional<Quality> ParseQuality(std::string_view name);

struct Annotation {
  std::string pair_id;
  std::string annotator_id;
  Quality quality = Quality::kOverall;
  int score = 0;
};

// Rejects scores outside 0..4 and a second rating for the same
// (pair, annotator, quality) with Error(kInvalidArgument).
class AnnotationSet {
 public:
  void Add(Annotation annotation);

  const std::vector<Annotation>& records() const { return records_; }
  // Sorted, distinct.
  std::vector<std::string> Annotators() const;
  std::vector<std::string> PairIds(Quality quality) const;

 private:
  std::vector<Annotation> records_;
  std::set<std::tuple<std::string, std::string, Quality>> keys_;
};

enum class ErrorType {
  kIncorrectNamedEntity,
  kIncorrectData,
  kCascading,
  kHallucination,
  kNegation,
  kOther,
};

std::string_view ErrorTypeName(ErrorType type);
std::optional<ErrorType> ParseErrorType(std::string_view name);

struct ErrorAnnotation {
  std::string pair_id;
  std::string annotator_id;
  ErrorType type = ErrorType::kOther;
  // Character span in the summary; both -1 when not recorded.
  int span_begin = -1;
  int span_end = -1;
};

}  // namespace blanc

#endif  // BLANC_ANNOTATIONS_H_
