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

#include "blanc/annotations.h"

#include <algorithm>

#include "blanc/error.h"

namespace blanc {

std::string_view QualityName(Quality quality) {
  switch (quality) {
    case Quality::kFluent:
      return "fluent";
    case Quality::kUnderstandable:
      return "understandable";
    case Quality::kInformative:
      return "informative";
    case Quality::kCompact:
      return "compact";
    case Quality::kOverall:
      return "overall";
  }
  return "unknown";
}

std::optional<Quality> ParseQuality(std::string_view name) {
  for (Quality q : {Quality::kFluent, Quality::kUnderstandable,
                    Quality::kInformative, Quality::kCompact,
                    Quality::kOverall}) {
    if (QualityName(q) == name) return q;
  }
  return std::nullopt;
}

void AnnotationSet::Add(Annotation annotation) {
  if (annotation.score < 0 || annotation.score > 4) {
    throw Error(ErrorCode::kInvalidArgument,
                "score " + std::to_string(annotation.score) +
                    " outside 0..4");
  }
  if (!keys_.emplace(annotation.pair_id, annotation.annotator_id,
                     annotation.quality)
           .second) {
    throw Error(ErrorCode::kInvalidArgument,
                "duplicate rating for pair '" + annotation.pair_id +
                    "', annotator '" + annotation.annotator_id + "', quality " +
                    std::string(QualityName(annotation.quality)));
  }
  records_.push_back(std::move(annotation));
}

std::vector<std::string> AnnotationSet::Annotators() const {
  std::set<std::string> ids;
  for (const Annotation& a : records_) ids.insert(a.annotator_id);
  return {ids.begin(), ids.end()};
}

std::vector<std::string> AnnotationSet::PairIds(Quality quality) const {
  std::set<std::string> ids;
  for (const Annotation& a : records_) {
    if (a.quality == quality) ids.insert(a.pair_id);
  }
  return {ids.begin(), ids.end()};
}

std::string_view ErrorTypeName(ErrorType type) {
  switch (type) {
    case ErrorType::kIncorrectNamedEntity:
      return "incorrect_named_entity";
    case ErrorType::kIncorrectData:
      return "incorrect_data";
    case ErrorType::kCascading:
      return "cascading";
    case ErrorType::kHallucination:
      return "hallucination";
    case ErrorType::kNegation:
      return "negation";
    case ErrorType::kOther:
      return "other";
  }
  return "unknown";
}

std::optional<ErrorType> ParseErrorType(std::string_view name) {
  for (ErrorType t :
       {ErrorType::kIncorrectNamedEntity, ErrorType::kIncorrectData,
        ErrorType::kCascading, ErrorType::kHallucination, ErrorType::kNegation,
        ErrorType::kOther}) {
    if (ErrorTypeName(t) == name) return t;
  }
  return std::nullopt;
}

}  // namespace blanc
