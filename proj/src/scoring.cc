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

#include "blanc/scoring.h"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <set>
#include <thread>

#include "blanc/tokenizer.h"

namespace blanc {

std::string_view VariantName(ScoreVariant variant) {
  switch (variant) {
    case ScoreVariant::kAccuracy:
      return "accuracy";
    case ScoreVariant::kLogit:
      return "logit";
    case ScoreVariant::kProbability:
      return "probability";
    case ScoreVariant::kLogProbability:
      return "log_probability";
  }
  return "unknown";
}

std::optional<ScoreVariant> ParseVariant(std::string_view name) {
  if (name == "accuracy") return ScoreVariant::kAccuracy;
  if (name == "logit" || name == "logits") return ScoreVariant::kLogit;
  if (name == "probability" || name == "prob") {
    return ScoreVariant::kProbability;
  }
  if (name == "log_probability" || name == "logprob") {
    return ScoreVariant::kLogProbability;
  }
  return std::nullopt;
}

std::vector<MaskedTokenTrace> TraceDocument(std::string_view document,
                                            std::string_view summary,
                                            const MaskingPolicy& policy,
                                            const MaskedLanguageModel& model,
                                            const SentenceSplitter& splitter) {
  policy.Validate();
  const Vocabulary& vocab = model.vocabulary();
  const WordPieceTokenizer tokenizer(vocab);
  const std::vector<int32_t> summary_ids =
      TokenIds(tokenizer.Tokenize(summary));
  const std::vector<Sentence> sentences =
      PrepareDocument(document, tokenizer, splitter);

  struct Pass {
    std::size_t sentence;
    int offset;
    std::vector<std::size_t> positions;
  };
  std::vector<Pass> passes;
  std::vector<MaskedInput> inputs;
  for (std::size_t s = 0; s < sentences.size(); ++s) {
    for (int offset = 1; offset <= policy.gap; ++offset) {
      std::vector<std::size_t> positions =
          MaskPositions(sentences[s].tokens, policy, offset);
      if (positions.empty()) continue;
      const ClozePair pair =
          BuildClozePair(summary_ids, sentences[s].tokens, positions,
                         vocab.specials().mask, vocab.specials().filler,
                         vocab.max_len());
      inputs.push_back(FrameInput(pair, PrefixSide::kHelp, vocab.specials()));
      inputs.push_back(FrameInput(pair, PrefixSide::kBase, vocab.specials()));
      passes.push_back({s, offset, std::move(positions)});
    }
  }

  const auto outcomes = model.Predict(inputs);
  std::vector<MaskedTokenTrace> trace;
  for (std::size_t i = 0; i < passes.size(); ++i) {
    const auto& help = outcomes[2 * i];
    const auto& base = outcomes[2 * i + 1];
    for (std::size_t j = 0; j < passes[i].positions.size(); ++j) {
      trace.push_back({passes[i].sentence, passes[i].offset,
                       passes[i].positions[j], help[j], base[j]});
    }
  }
  return trace;
}

BlancResult ResultFromTrace(std::span<const MaskedTokenTrace> trace,
                            ScoreVariant variant) {
  if (trace.empty()) {
    throw Error(ErrorCode::kNoMaskableTokens,
                "no document token is eligible for masking");
  }
  BlancResult result;
  result.variant = variant;
  double sum = 0.0;
  for (const MaskedTokenTrace& t : trace) {
    ++result.n_total;
    if (t.help.top_id == t.help.gold_id) ++result.n_help;
    if (t.base.top_id == t.base.gold_id) ++result.n_base;
    switch (variant) {
      case ScoreVariant::kAccuracy:
        break;
      case ScoreVariant::kLogit:
        sum += t.help.gold_logit - t.base.gold_logit;
        break;
      case ScoreVariant::kProbability:
        sum += t.help.gold_prob - t.base.gold_prob;
        break;
      case ScoreVariant::kLogProbability:
        sum += t.help.gold_logprob - t.base.gold_logprob;
        break;
    }
  }
  const double total = static_cast<double>(result.n_total);
  result.score = variant == ScoreVariant::kAccuracy
                     ? static_cast<double>(result.n_help - result.n_base) / total
                     : sum / total;
  return result;
}

BlancResult ScorePair(std::string_view document, std::string_view summary,
                      const MaskingPolicy& policy, ScoreVariant variant,
                      const MaskedLanguageModel& model,
                      const SentenceSplitter& splitter) {
  const auto trace = TraceDocument(document, summary, policy, model, splitter);
  return ResultFromTrace(trace, variant);
}

std::vector<BatchItem> ScoreBatch(std::span<const PairRecord> pairs,
                                  const MaskingPolicy& policy,
                                  ScoreVariant variant,
                                  const MaskedLanguageModel& model,
                                  int parallelism) {
  std::set<std::string_view> seen;
  for (const PairRecord& p : pairs) {
    if (!seen.insert(p.id).second) {
      throw Error(ErrorCode::kInvalidArgument, "duplicate pair id '" + p.id + "'");
    }
  }
  policy.Validate();

  std::vector<BatchItem> out(pairs.size());
  const SentenceSplitter splitter;
  std::mutex model_mutex;
  auto score_one = [&](std::size_t i) {
    out[i].id = pairs[i].id;
    try {
      std::unique_lock<std::mutex> lock(model_mutex, std::defer_lock);
      if (!model.thread_safe()) lock.lock();
      out[i].result = ScorePair(pairs[i].document, pairs[i].summary, policy,
                                variant, model, splitter);
    } catch (const Error& e) {
      out[i].error = e;
    } catch (const std::exception& e) {
      out[i].error = Error(ErrorCode::kInvalidArgument, e.what());
    }
  };

  const std::size_t workers = std::min<std::size_t>(
      pairs.size(), static_cast<std::size_t>(std::max(1, parallelism)));
  if (workers <= 1) {
    for (std::size_t i = 0; i < pairs.size(); ++i) score_one(i);
    return out;
  }
  std::atomic<std::size_t> next{0};
  {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < pairs.size(); i = next++) score_one(i);
      });
    }
  }
  return out;
}

double CombinedSquares(std::span<const double> scores) {
  double sum = 0.0;
  for (double s : scores) sum += s * s;
  return sum;
}

}  // namespace blanc
