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

// Acceptance report: one PASS, FAIL or SKIP line per criterion. Exits
// non-zero if any criterion fails. Criteria that need an exported model
// bundle run only when BLANC_BUNDLE names one.

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "blanc/analysis.h"
#include "blanc/backend.h"
#include "blanc/cli.h"
#include "blanc/correlation.h"
#include "blanc/corruption.h"
#include "blanc/masking.h"
#include "blanc/scoring.h"
#include "blanc/sentence_splitter.h"
#include "blanc/tokenizer.h"
#include "nlohmann/json.hpp"
#include "test_support.h"

namespace blanc {
namespace {

namespace fs = std::filesystem;

struct Outcome {
  enum Status { kPass, kFail, kSkip } status = kPass;
  std::string detail;
};

Outcome Pass(std::string detail) { return {Outcome::kPass, std::move(detail)}; }
Outcome Fail(std::string detail) { return {Outcome::kFail, std::move(detail)}; }
Outcome Skip(std::string detail) { return {Outcome::kSkip, std::move(detail)}; }

constexpr ScoreVariant kAllVariants[] = {
    ScoreVariant::kAccuracy, ScoreVariant::kLogit, ScoreVariant::kProbability,
    ScoreVariant::kLogProbability};

std::string Fmt(double v) {
  std::ostringstream s;
  s.precision(4);
  s << v;
  return s.str();
}

Outcome MaskPartition() {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> length(0, 60);
  std::uniform_int_distribution<int> role(0, 2);
  std::uniform_int_distribution<int> chars(1, 9);
  const MaskingPolicy defaults;
  int checked = 0;
  for (int s = 0; s < 200; ++s) {
    std::vector<Token> sentence(length(rng));
    for (Token& t : sentence) {
      t.role = static_cast<WordRole>(role(rng));
      t.char_length = chars(rng);
      t.vocab_id = 10;
    }
    std::set<std::size_t> eligible;
    for (std::size_t p = 0; p < sentence.size(); ++p) {
      if (IsEligible(sentence[p], defaults)) eligible.insert(p);
    }
    for (int gap = 1; gap <= 8; ++gap) {
      MaskingPolicy policy = defaults;
      policy.gap = gap;
      std::set<std::size_t> covered;
      std::size_t count = 0;
      for (int offset = 1; offset <= gap; ++offset) {
        for (std::size_t p : MaskPositions(sentence, policy, offset)) {
          covered.insert(p);
          ++count;
        }
      }
      if (covered != eligible || count != eligible.size()) {
        return Fail("sentence " + std::to_string(s) + " gap " +
                    std::to_string(gap));
      }
      ++checked;
    }
  }
  return Pass(std::to_string(checked) + " sentence/gap cases");
}

Outcome EligibilityTruthTable() {
  const MaskingPolicy policy;
  int rows = 0;
  for (WordRole role : {WordRole::kWholeWord, WordRole::kWordStart,
                        WordRole::kWordContinuation}) {
    for (int length : {1, 3, 4, 5, 1000}) {
      bool expected = false;
      switch (role) {
        case WordRole::kWholeWord: expected = length >= 4; break;
        case WordRole::kWordStart: expected = true; break;
        case WordRole::kWordContinuation: expected = length >= 1000; break;
      }
      const Token token{"x", 7, length, role};
      if (IsEligible(token, policy) != expected) {
        return Fail(std::string(WordRoleName(role)) + " length " +
                    std::to_string(length));
      }
      ++rows;
    }
  }
  return Pass(std::to_string(rows) + " rows");
}

BlancResult Recount(const PairRecord& pair, const MaskingPolicy& policy,
                    const MaskedLanguageModel& model) {
  const Vocabulary& vocab = model.vocabulary();
  const WordPieceTokenizer tokenizer(vocab);
  const auto summary = TokenIds(tokenizer.Tokenize(pair.summary));
  BlancResult r;
  for (const SentenceSpan& span : SplitSentences(pair.document)) {
    const auto tokens = tokenizer.Tokenize(span.text);
    for (int offset = 1; offset <= policy.gap; ++offset) {
      const auto positions = MaskPositions(tokens, policy, offset);
      if (positions.empty()) continue;
      const ClozePair cloze =
          BuildClozePair(summary, tokens, positions, vocab.specials().mask,
                         vocab.specials().filler, vocab.max_len());
      const MaskedInput inputs[] = {
          FrameInput(cloze, PrefixSide::kHelp, vocab.specials()),
          FrameInput(cloze, PrefixSide::kBase, vocab.specials())};
      const auto outcomes = model.Predict(inputs);
      for (std::size_t k = 0; k < positions.size(); ++k) {
        ++r.n_total;
        r.n_help += outcomes[0][k].top_id == outcomes[0][k].gold_id;
        r.n_base += outcomes[1][k].top_id == outcomes[1][k].gold_id;
      }
    }
  }
  r.score = static_cast<double>(r.n_help - r.n_base) / r.n_total;
  return r;
}

Outcome ScoreDefinition() {
  const auto fixtures = testing::ScoringFixtures();
  const MaskedLanguageModel& model = testing::ReferenceModel();
  MaskingPolicy policy;
  for (const PairRecord& pair : fixtures) {
    const BlancResult got =
        ScorePair(pair.document, pair.summary, policy, ScoreVariant::kAccuracy, model);
    const BlancResult want = Recount(pair, policy, model);
    if (got.n_help != want.n_help || got.n_base != want.n_base ||
        got.n_total != want.n_total || got.score != want.score) {
      return Fail("recount differs on " + pair.id);
    }
  }

  const Vocabulary vocab = testing::TinyVocabulary({"harbor", "bridge"});
  const int32_t gold = *vocab.Find("harbor");
  const double others = static_cast<double>(vocab.size() - 1);
  const float help = static_cast<float>(std::log(0.6 / 0.4 * others));
  const float base = static_cast<float>(std::log(0.4 / 0.6 * others));
  testing::ScriptedModel scripted(vocab, [&](const MaskedInput& input, std::size_t) {
    std::vector<float> logits(vocab.size(), 0.0f);
    logits[gold] = testing::HasSummaryPrefix(input, vocab.specials()) ? help : base;
    return logits;
  });
  auto prob = [&](float logit) {
    return std::exp(double{logit}) / (std::exp(double{logit}) + others);
  };
  MaskingPolicy one;
  one.gap = 1;
  auto score = [&](ScoreVariant v) {
    return ScorePair("harbor", "bridge", one, v, scripted).score;
  };
  const double want_logit = double{help} - double{base};
  const double want_prob = prob(help) - prob(base);
  const double want_logprob = std::log(prob(help)) - std::log(prob(base));
  if (std::abs(score(ScoreVariant::kLogit) - want_logit) > 1e-12 ||
      std::abs(score(ScoreVariant::kProbability) - want_prob) > 1e-12 ||
      std::abs(score(ScoreVariant::kLogProbability) - want_logprob) > 1e-12) {
    return Fail("generalized variant differs from hand arithmetic");
  }
  return Pass(std::to_string(fixtures.size()) +
              " recounts exact; 1-token variants within 1e-12");
}

Outcome ZeroSummary() {
  const MaskedLanguageModel& model = testing::ReferenceModel();
  int checked = 0;
  for (const PairRecord& pair : testing::DeskCorpus()) {
    for (ScoreVariant variant : kAllVariants) {
      const BlancResult r = ScorePair(pair.document, "", MaskingPolicy{}, variant, model);
      if (r.score != 0.0) {
        return Fail(pair.id + " " + std::string(VariantName(variant)) + " = " +
                    Fmt(r.score));
      }
      ++checked;
    }
  }
  return Pass(std::to_string(checked) + " pair/variant scores are 0");
}

Outcome CorrelationOracle() {
  const auto fixtures = nlohmann::json::parse(
      testing::ReadFile(testing::TestDataDir() / "correlation_fixtures.json"));
  double worst = 0.0;
  const auto& cases = fixtures.at("cases");
  for (const auto& c : cases) {
    const std::vector<double> x = c.at("x");
    const std::vector<double> y = c.at("y");
    const CorrelationResult p = Pearson(x, y);
    const CorrelationResult s = Spearman(x, y);
    worst = std::max({worst,
                      std::abs(p.coefficient - c.at("pearson_r").get<double>()),
                      std::abs(p.p_value - c.at("pearson_p").get<double>()),
                      std::abs(s.coefficient - c.at("spearman_rho").get<double>()),
                      std::abs(s.p_value - c.at("spearman_p").get<double>())});
  }
  if (worst > 1e-9) return Fail("max deviation " + Fmt(worst));

  std::mt19937_64 rng(11);
  std::normal_distribution<double> normal;
  std::vector<double> x(60);
  std::vector<double> y(60);
  for (std::size_t i = 0; i < x.size(); ++i) {
    x[i] = std::round(normal(rng) * 3.0);
    y[i] = x[i] + normal(rng);
  }
  const CorrelationResult base = Spearman(x, y);
  std::uniform_real_distribution<double> coef(0.1, 3.0);
  for (int t = 0; t < 20; ++t) {
    const double a = coef(rng);
    const double b = coef(rng) - 1.5;
    std::vector<double> tx(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
      const double v = x[i];
      switch (t % 4) {
        case 0: tx[i] = a * v + b; break;
        case 1: tx[i] = std::exp(a * v / 10.0); break;
        case 2: tx[i] = v * v * v + a * v; break;
        default: tx[i] = std::atan(v) * a + b; break;
      }
    }
    const CorrelationResult got = Spearman(tx, y);
    if (std::abs(got.coefficient - base.coefficient) > 1e-12 ||
        std::abs(got.p_value - base.p_value) > 1e-12) {
      return Fail("monotone transform " + std::to_string(t) + " changed Spearman");
    }
  }
  return Pass(std::to_string(cases.size()) + " fixtures, max deviation " +
              Fmt(worst) + "; 20 monotone transforms invariant");
}

Outcome SplitEnumeration() {
  const auto splits = EnumerateSplits(10, 3);
  std::set<std::vector<int>> distinct;
  for (const Split& s : splits) distinct.insert(s.small);
  if (splits.size() != 120 || distinct.size() != 120) {
    return Fail("enumerate_splits(10,3) gave " + std::to_string(distinct.size()));
  }
  int checked = 0;
  for (int n = 2; n <= 12; ++n) {
    for (int k = 1; k < n; ++k) {
      const auto all = EnumerateSplits(n, k);
      std::set<std::vector<int>> seen;
      for (const Split& s : all) seen.insert(s.small);
      uint64_t pascal = 1;
      for (int i = 1; i <= k; ++i) pascal = pascal * (n - k + i) / i;
      if (all.size() != pascal || seen.size() != pascal || Choose(n, k) != pascal) {
        return Fail("C(" + std::to_string(n) + "," + std::to_string(k) + ")");
      }
      ++checked;
    }
  }
  return Pass("120 distinct splits; " + std::to_string(checked) +
              " (n,k) counts for n <= 12");
}

struct CliRun {
  int code = 0;
  std::string out;
};

CliRun RunBlanc(std::vector<std::string> args) {
  args.insert(args.begin(), "blanc");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  CliRun r;
  r.code = RunCli(static_cast<int>(argv.size()), argv.data(), out, err);
  r.out = out.str();
  return r;
}

Outcome Determinism() {
  const fs::path dir = fs::temp_directory_path() /
                       ("blanc_acceptance_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  const std::string input = (dir / "pairs.jsonl").string();
  {
    std::ofstream f(input);
    const auto fixtures = testing::ScoringFixtures();
    for (std::size_t i = 0; i < 20; ++i) {
      f << nlohmann::json{{"id", fixtures[i].id},
                          {"document", fixtures[i].document},
                          {"summary", fixtures[i].summary}}
               .dump()
        << "\n";
    }
  }
  const CliRun serial = RunBlanc({"score", "--input", input, "--parallelism", "1"});
  const CliRun parallel = RunBlanc({"score", "--input", input, "--parallelism", "8"});
  auto swap = [&](const std::string& name) {
    const std::string out = (dir / name).string();
    const std::string summary = (dir / (name + ".csv")).string();
    RunBlanc({"swap-sim", "--input", input, "--seed", "17", "--trials-per-pair",
              "2", "--output", out, "--summary", summary});
    return testing::ReadFile(out);
  };
  const std::string swap_a = swap("swap_a.jsonl");
  const std::string swap_b = swap("swap_b.jsonl");
  fs::remove_all(dir);
  if (serial.code != kExitOk || serial.out.empty()) return Fail("score run failed");
  if (serial.out != parallel.out) return Fail("parallelism 1 and 8 differ");
  if (swap_a.empty() || swap_a != swap_b) return Fail("swap JSONL differs");
  return Pass("score output and swap JSONL byte-identical");
}

const char* BundlePath() {
  const char* bundle = std::getenv("BLANC_BUNDLE");
  return bundle && *bundle ? bundle : nullptr;
}

double Median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

std::vector<double> Scores(const std::vector<PairRecord>& pairs, int gap,
                           const MaskedLanguageModel& model) {
  MaskingPolicy policy;
  policy.gap = gap;
  std::vector<double> out;
  for (const BatchItem& item :
       ScoreBatch(pairs, policy, ScoreVariant::kAccuracy, model)) {
    if (!item.result) throw std::runtime_error("pair " + item.id + " failed");
    out.push_back(item.result->score);
  }
  return out;
}

Outcome RealModelDeskCheck() {
  const char* bundle = BundlePath();
  if (!bundle) return Skip("BLANC_BUNDLE not set");
  const auto model = LoadBackend(bundle);
  const std::vector<PairRecord>& own = testing::DeskCorpus();
  std::vector<PairRecord> mismatched = own;
  for (std::size_t i = 0; i < own.size(); ++i) {
    mismatched[i].summary = own[(i + 7) % own.size()].summary;
  }
  const std::vector<double> at6 = Scores(own, 6, *model);
  const std::vector<double> at2 = Scores(own, 2, *model);
  const std::vector<double> wrong = Scores(mismatched, 6, *model);
  const double median = Median(at6);
  std::size_t beats = 0;
  for (std::size_t i = 0; i < at6.size(); ++i) beats += at6[i] > wrong[i];
  const double beat_frac = static_cast<double>(beats) / at6.size();
  auto mean = [](const std::vector<double>& v) {
    double s = 0;
    for (double x : v) s += x;
    return s / v.size();
  };
  const bool a = median >= 0.02 && median <= 0.40;
  const bool b = beat_frac >= 0.70;
  const bool c = mean(at2) >= mean(at6);
  const std::string detail = "median@6=" + Fmt(median) + (a ? " ok" : " out") +
                             ", own>mismatched=" + Fmt(beat_frac) +
                             (b ? " ok" : " low") + ", mean@2=" + Fmt(mean(at2)) +
                             " mean@6=" + Fmt(mean(at6)) + (c ? " ok" : " inverted");
  return a && b && c ? Pass(detail) : Fail(detail);
}

Outcome SwapSensitivity() {
  const char* bundle = BundlePath();
  if (!bundle) return Skip("BLANC_BUNDLE not set");
  const auto model = LoadBackend(bundle);
  SwapExperimentOptions options;
  options.gaps = {2};
  options.seed = 2021;
  options.trials_per_pair = 5;
  const SwapReport report = RunSwapExperiment(testing::DeskCorpus(), options, *model);
  const SwapOutcomeSummary& row = report.summary.front();
  const std::string detail = std::to_string(row.n_trials) + " swaps, decreased=" +
                             Fmt(row.frac_decreased) +
                             " increased=" + Fmt(row.frac_increased);
  const bool ok = row.frac_decreased >= 0.46 && row.frac_decreased <= 0.66 &&
                  row.frac_decreased > row.frac_increased;
  return ok ? Pass(detail) : Fail(detail);
}

}  // namespace
}  // namespace blanc

int main() {
  using blanc::Outcome;
  const std::pair<const char*, std::function<Outcome()>> criteria[] = {
      {"mask-partition", blanc::MaskPartition},
      {"eligibility-truth-table", blanc::EligibilityTruthTable},
      {"score-definition", blanc::ScoreDefinition},
      {"zero-summary", blanc::ZeroSummary},
      {"correlation-oracle", blanc::CorrelationOracle},
      {"split-enumeration", blanc::SplitEnumeration},
      {"determinism", blanc::Determinism},
      {"real-model-desk-check", blanc::RealModelDeskCheck},
      {"swap-sensitivity", blanc::SwapSensitivity},
  };
  int failures = 0;
  for (const auto& [name, check] : criteria) {
    Outcome outcome;
    try {
      outcome = check();
    } catch (const std::exception& e) {
      outcome = blanc::Fail(std::string("exception: ") + e.what());
    }
    const char* label = outcome.status == Outcome::kPass   ? "PASS"
                        : outcome.status == Outcome::kSkip ? "SKIP"
                                                           : "FAIL";
    failures += outcome.status == Outcome::kFail;
    std::cout << label << " " << name << ": " << outcome.detail << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
