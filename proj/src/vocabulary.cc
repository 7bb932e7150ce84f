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

#include "blanc/vocabulary.h"

#include <fstream>
#include <utility>

#include "blanc/error.h"
#include "nlohmann/json.hpp"

namespace blanc {

Vocabulary::Vocabulary(std::vector<std::string> tokens, SpecialTokens specials,
                       int max_len, bool lowercase,
                       std::string continuation_prefix)
    : tokens_(std::move(tokens)),
      specials_(specials),
      max_len_(max_len),
      lowercase_(lowercase),
      continuation_prefix_(std::move(continuation_prefix)) {
  for (int32_t id : {specials_.pad, specials_.unk, specials_.cls, specials_.sep,
                     specials_.mask, specials_.filler}) {
    if (!Contains(id)) {
      throw Error(ErrorCode::kInvalidArgument,
                  "special token id " + std::to_string(id) +
                      " outside vocabulary of size " + std::to_string(size()));
    }
  }
  if (specials_.mask == specials_.unk || specials_.mask == specials_.filler ||
      specials_.unk == specials_.filler) {
    throw Error(ErrorCode::kInvalidArgument,
                "mask, unknown and filler ids must be distinct");
  }
  if (max_len_ < 4) {
    throw Error(ErrorCode::kInvalidArgument, "max_len must be at least 4");
  }
  index_.reserve(tokens_.size());
  for (int32_t id = 0; id < size(); ++id) {
    // First occurrence wins, as in the reference tokenizer.
    index_.emplace(tokens_[id], id);
  }
}

std::optional<int32_t> Vocabulary::Find(std::string_view piece) const {
  auto it = index_.find(std::string(piece));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool Vocabulary::IsSpecial(int32_t id) const {
  return id == specials_.pad || id == specials_.unk || id == specials_.cls ||
         id == specials_.sep || id == specials_.mask;
}

Vocabulary Vocabulary::Load(const std::filesystem::path& vocab_file,
                            const std::filesystem::path& config_file) {
  std::ifstream vocab_in(vocab_file);
  if (!vocab_in) {
    throw ModelLoadError("vocabulary", "cannot open " + vocab_file.string());
  }
  std::vector<std::string> tokens;
  std::string line;
  while (std::getline(vocab_in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    tokens.push_back(line);
  }
  if (tokens.empty()) {
    throw ModelLoadError("vocabulary", vocab_file.string() + " is empty");
  }

  std::ifstream config_in(config_file);
  if (!config_in) {
    throw ModelLoadError("tokenizer-config",
                         "cannot open " + config_file.string());
  }
  try {
    const nlohmann::json config = nlohmann::json::parse(config_in);
    const auto& ids = config.at("special_tokens");
    SpecialTokens specials{
        .pad = ids.at("pad").get<int32_t>(),
        .unk = ids.at("unk").get<int32_t>(),
        .cls = ids.at("cls").get<int32_t>(),
        .sep = ids.at("sep").get<int32_t>(),
        .mask = ids.at("mask").get<int32_t>(),
        .filler = ids.at("filler").get<int32_t>(),
    };
    return Vocabulary(std::move(tokens), specials,
                      config.at("max_len").get<int>(),
                      config.at("lowercase").get<bool>(),
                      config.value("continuation_prefix", std::string("##")));
  } catch (const nlohmann::json::exception& e) {
    throw ModelLoadError("tokenizer-config", e.what());
  } catch (const Error& e) {
    throw ModelLoadError("tokenizer-config", e.what());
  }
}

}  // namespace blanc
