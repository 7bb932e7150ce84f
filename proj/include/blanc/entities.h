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

#ifndef BLANC_ENTITIES_H_
#define BLANC_ENTITIES_H_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace blanc {

enum class EntityKind { kPersonLike, kNumber, kDate };

std::string_view EntityKindName(EntityKind kind);
std::optional<EntityKind> ParseEntityKind(std::string_view name);

struct EntityMention {
  std::size_t begin = 0;  // byte offsets into the text
  std::size_t end = 0;
  std::string text;
  EntityKind kind = EntityKind::kPersonLike;

  bool operator==(const EntityMention&) const = default;
};

// Pattern-based mentions, sorted and non-overlapping. Dates are matched
// first (month names with optional day and year, day-month forms, ISO dates,
// weekdays, years 1800-2099), then numbers (digit groups with optional
// decimals, percent sign and a scale word such as "million"), then runs of
// capitalized words joined by spaces or by "of"/"de"/"van"-style particles.
// Leading function words and titles ("The", "Mayor") are trimmed from
// capitalized runs and a trailing possessive "'s" is dropped.
std::vector<EntityMention> ExtractEntities(std::string_view text);

}  // namespace blanc

#endif  // BLANC_ENTITIES_H_
