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

#include "blanc/entities.h"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <regex>
#include <string>
#include <unordered_set>

#include "blanc/backend.h"

namespace blanc {
namespace {

constexpr const char* kMonths =
    "January|February|March|April|June|July|August|September|October|"
    "November|December";
constexpr const char* kMonthAbbrevs =
    "Jan\\.|Feb\\.|Mar\\.|Apr\\.|Jun\\.|Jul\\.|Aug\\.|Sept\\.|Sep\\.|Oct\\.|"
    "Nov\\.|Dec\\.";
constexpr const char* kWeekdays =
    "Monday|Tuesday|Wednesday|Thursday|Friday|Saturday|Sunday";

const std::vector<std::regex>& DatePatterns() {
  static const auto* patterns = [] {
    const std::string day = "\\d{1,2}(?:st|nd|rd|th)?";
    const std::string month_any = std::string("(?:") + kMonths + "|May|" +
                                  kMonthAbbrevs + ")";
    auto* out = new std::vector<std::regex>{
        // 5 March 2019
        std::regex("\\b" + day + "\\s+" + month_any + "(?:,?\\s+\\d{4})?\\b"),
        // March 5, 2019 / March 2025 / May 5 / Jan. 3
        std::regex("\\b" + month_any + "\\s+" + day + "(?:,?\\s+\\d{4})?\\b"),
        std::regex("\\b" + month_any + ",?\\s+\\d{4}\\b"),
        // Bare month names; "May" alone is too ambiguous.
        std::regex(std::string("\\b(?:") + kMonths + ")\\b"),
        std::regex("\\b\\d{4}-\\d{2}-\\d{2}\\b"),
        std::regex(std::string("\\b(?:") + kWeekdays + ")\\b"),
        std::regex("\\b(?:18|19|20)\\d{2}\\b(?![.,]?\\d)"),
    };
    return out;
  }();
  return *patterns;
}

const std::regex& NumberPattern() {
  static const std::regex pattern(
      "\\d+(?:[.,]\\d+)*%?(?:\\s+(?:hundred|thousand|million|billion|"
      "trillion)\\b)?(?![A-Za-z0-9])");
  return pattern;
}

const std::regex& WordPattern() {
  static const std::regex pattern("[A-Za-z][A-Za-z'\\-]*(?:\\.[A-Z][A-Za-z]*)*");
  return pattern;
}

// Capitalized words that do not start a name on their own.
const std::unordered_set<std::string>& LeadingStopwords() {
  static const auto* words = new std::unordered_set<std::string>{
      "A", "An", "The", "This", "That", "These", "Those", "He", "She", "It",
      "They", "We", "I", "You", "His", "Her", "Its", "Their", "Our", "My",
      "Your", "In", "On", "At", "For", "From", "To", "With", "By", "Of",
      "As", "Into", "About", "After", "Before", "During", "Over", "Under",
      "Between", "Since", "Until", "But", "And", "Or", "Nor", "So", "Yet",
      "If", "When", "While", "Where", "Why", "How", "What", "Which", "Who",
      "Whom", "Whose", "There", "Here", "Then", "Now", "Also", "However",
      "Although", "Though", "Because", "Despite", "No", "Not", "Yes", "All",
      "Some", "Many", "Most", "More", "Several", "Each", "Every", "Both",
      "Few", "Other", "Another", "Such", "One", "Two", "Three", "Four",
      "Five", "Six", "Seven", "Eight", "Nine", "Ten", "Local", "Officials",
      "Mayor", "Governor", "President", "Professor", "Prof", "Doctor", "Dr",
      "Mr", "Mrs", "Ms", "Inspector", "Chief", "Minister", "Senator",
      "Coach", "General", "Captain", "Judge", "King", "Queen", "Prince",
      "Princess", "Sir", "Dame", "Lord", "Lady", "Director", "Spokesman",
      "Spokeswoman", "Chairman", "Chairwoman", "Executive", "Officer",
      "Team", "Leader", "Volcanologist", "Architect", "Education", "Water",
      "Program", "Union", "Opposition", "Grandmaster",
  };
  return *words;
}

// Frequent lowercase English words, read once from the data directory.
// An absent list leaves the set empty.
const std::unordered_set<std::string>& CommonWords() {
  static const auto* words = [] {
    auto* out = new std::unordered_set<std::string>();
    std::ifstream in(DefaultDataDir() / "common_words.txt");
    std::string line;
    while (std::getline(in, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.empty() || line[0] == '#') continue;
      out->insert(line);
    }
    return out;
  }();
  return *words;
}

bool IsCommonWord(std::string_view word) {
  std::string lower(word);
  for (char& c : lower) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return CommonWords().contains(lower);
}

bool IsParticle(std::string_view word) {
  return word == "of" || word == "de" || word == "del" || word == "da" ||
         word == "van" || word == "von" || word == "la" || word == "le" ||
         word == "al" || word == "bin";
}

bool IsCapitalized(std::string_view word) {
  return !word.empty() && word[0] >= 'A' && word[0] <= 'Z';
}

bool AllSpaces(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
    return c == ' ' || c == '\t';
  });
}

struct Word {
  std::size_t begin;
  std::size_t end;
};

}  // namespace

std::string_view EntityKindName(EntityKind kind) {
  switch (kind) {
    case EntityKind::kPersonLike:
      return "PERSON-LIKE";
    case EntityKind::kNumber:
      return "NUMBER";
    case EntityKind::kDate:
      return "DATE";
  }
  return "UNKNOWN";
}

std::optional<EntityKind> ParseEntityKind(std::string_view name) {
  for (EntityKind k :
       {EntityKind::kPersonLike, EntityKind::kNumber, EntityKind::kDate}) {
    if (EntityKindName(k) == name) return k;
  }
  return std::nullopt;
}

std::vector<EntityMention> ExtractEntities(std::string_view text) {
  const std::string owned(text);
  std::vector<bool> taken(owned.size(), false);
  std::vector<EntityMention> out;

  auto free_range = [&](std::size_t b, std::size_t e) {
    return std::none_of(taken.begin() + b, taken.begin() + e,
                        [](bool t) { return t; });
  };
  auto claim = [&](std::size_t b, std::size_t e, EntityKind kind) {
    std::fill(taken.begin() + b, taken.begin() + e, true);
    out.push_back({b, e, owned.substr(b, e - b), kind});
  };
  auto scan = [&](const std::regex& re, EntityKind kind) {
    for (auto it = std::sregex_iterator(owned.begin(), owned.end(), re);
         it != std::sregex_iterator(); ++it) {
      const std::size_t b = it->position();
      const std::size_t e = b + it->length();
      if (e > b && free_range(b, e)) claim(b, e, kind);
    }
  };

  for (const std::regex& re : DatePatterns()) scan(re, EntityKind::kDate);
  scan(NumberPattern(), EntityKind::kNumber);

  std::vector<Word> words;
  for (auto it = std::sregex_iterator(owned.begin(), owned.end(), WordPattern());
       it != std::sregex_iterator(); ++it) {
    const std::size_t b = it->position();
    words.push_back({b, b + it->length()});
  }
  auto word_text = [&](const Word& w) {
    return std::string_view(owned).substr(w.begin, w.end - w.begin);
  };
  auto joinable = [&](const Word& a, const Word& b) {
    return AllSpaces(std::string_view(owned).substr(a.end, b.begin - a.end));
  };

  // Capitalization at a sentence start says nothing about names.
  auto sentence_initial = [&](const Word& w) {
    std::size_t k = w.begin;
    while (k > 0 && std::isspace(static_cast<unsigned char>(owned[k - 1]))) --k;
    while (k > 0 && (owned[k - 1] == '"' || owned[k - 1] == '\'' ||
                     owned[k - 1] == ')')) {
      --k;
    }
    return k == 0 || owned[k - 1] == '.' || owned[k - 1] == '!' ||
           owned[k - 1] == '?' || owned[k - 1] == '\n';
  };
  auto bare = [](std::string_view word) {
    return word.size() > 2 && word.ends_with("'s") ? word.substr(0, word.size() - 2)
                                                  : word;
  };
  std::unordered_set<std::string_view> capitalized_inside;
  for (const Word& w : words) {
    if (IsCapitalized(word_text(w)) && !sentence_initial(w)) {
      capitalized_inside.insert(bare(word_text(w)));
    }
  }

  for (std::size_t i = 0; i < words.size();) {
    if (!IsCapitalized(word_text(words[i])) ||
        !free_range(words[i].begin, words[i].end)) {
      ++i;
      continue;
    }
    // Extend over capitalized words and particles sandwiched between them.
    std::size_t j = i;
    while (j + 1 < words.size() && joinable(words[j], words[j + 1]) &&
           free_range(words[j + 1].begin, words[j + 1].end)) {
      const std::string_view next = word_text(words[j + 1]);
      if (IsCapitalized(next)) {
        ++j;
      } else if (IsParticle(next) && j + 2 < words.size() &&
                 joinable(words[j + 1], words[j + 2]) &&
                 IsCapitalized(word_text(words[j + 2])) &&
                 free_range(words[j + 2].begin, words[j + 2].end)) {
        j += 2;
      } else {
        break;
      }
    }
    std::size_t first = i;
    while (first <= j && LeadingStopwords().contains(std::string(word_text(words[first])))) {
      ++first;
    }
    // A run must not start on a particle after trimming.
    while (first <= j && !IsCapitalized(word_text(words[first]))) ++first;
    // A lone sentence-initial word counts only if it is possessive, also
    // capitalized mid-sentence somewhere in the text, or not a common word.
    if (first == j && first == i && sentence_initial(words[first])) {
      const std::string_view word = word_text(words[first]);
      if (bare(word) == word && !capitalized_inside.contains(word) &&
          IsCommonWord(word)) {
        first = j + 1;
      }
    }
    if (first <= j) {
      std::size_t end = words[j].end;
      const std::string_view last = word_text(words[j]);
      if (last.size() > 2 && last.ends_with("'s")) end -= 2;
      claim(words[first].begin, end, EntityKind::kPersonLike);
    }
    i = j + 1;
  }

  std::sort(out.begin(), out.end(),
            [](const EntityMention& a, const EntityMention& b) {
              return a.begin < b.begin;
            });
  return out;
}

}  // namespace blanc
