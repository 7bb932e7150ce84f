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

#include "blanc/cli.h"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "blanc/analysis.h"
#include "cli/records.h"
#include "nlohmann/json.hpp"
#include "test_support.h"

#include <unistd.h>

namespace blanc {
namespace {

namespace fs = std::filesystem;

struct RunResult {
  int code = 0;
  std::string out;
  std::string err;
};

RunResult RunBlanc(std::vector<std::string> args) {
  args.insert(args.begin(), "blanc");
  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  RunResult r;
  r.code = RunCli(static_cast<int>(argv.size()), argv.data(), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::vector<std::string> Lines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  return lines;
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("blanc_cli_" + std::to_string(::getpid()) + "_" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string Write(const std::string& name, const std::string& content) {
    const fs::path path = dir_ / name;
    std::ofstream(path, std::ios::binary) << content;
    return path.string();
  }
  std::string Path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
  const std::string desk_ = (testing::TestDataDir() / "desk_corpus.jsonl").string();
};

TEST_F(CliTest, ScoresSinglePairFromFiles) {
  const auto& pair = testing::DeskCorpus().front();
  const RunResult r = RunBlanc({"score", "--doc", Write("doc.txt", pair.document),
                           "--summary", Write("sum.txt", pair.summary), "--id",
                           "one", "--backend", "reference"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto lines = Lines(r.out);
  ASSERT_EQ(lines.size(), 1u);
  const auto record = nlohmann::json::parse(lines[0]);
  EXPECT_EQ(record["schema"], "blanc.score.v1");
  EXPECT_EQ(record["id"], "one");
  EXPECT_EQ(record["variant"], "accuracy");
  EXPECT_EQ(record["gap"], 6);
  for (const char* key : {"score", "n_help", "n_base", "n_total"}) {
    EXPECT_TRUE(record.contains(key)) << key;
  }
  const BlancResult direct = ScorePair(pair.document, pair.summary, MaskingPolicy{},
                                       ScoreVariant::kAccuracy,
                                       testing::ReferenceModel());
  EXPECT_EQ(record["score"].get<double>(), direct.score);
  EXPECT_EQ(record["n_total"].get<int64_t>(), direct.n_total);
}

TEST_F(CliTest, MalformedLineIsIsolated) {
  const std::string input = Write(
      "in.jsonl",
      "{\"id\":\"a\",\"document\":\"The harbor bridge opened today.\","
      "\"summary\":\"Bridge opens.\"}\n"
      "{\"id\": 5, \"document\": \"x\"}\n"
      "not json at all\n"
      "{\"id\":\"b\",\"document\":\"Engineers celebrated the opening.\","
      "\"summary\":\"\"}\n");
  const RunResult r = RunBlanc({"score", "--input", input, "--backend", "reference"});
  EXPECT_EQ(r.code, kExitPartial);
  EXPECT_NE(r.err.find("in.jsonl:2:"), std::string::npos) << r.err;
  EXPECT_NE(r.err.find("in.jsonl:3:"), std::string::npos) << r.err;
  const auto lines = Lines(r.out);
  ASSERT_EQ(lines.size(), 4u);
  EXPECT_EQ(nlohmann::json::parse(lines[0])["id"], "a");
  EXPECT_EQ(nlohmann::json::parse(lines[1])["line"], 2);
  EXPECT_TRUE(nlohmann::json::parse(lines[1]).contains("error"));
  EXPECT_EQ(nlohmann::json::parse(lines[3])["score"], 0.0);
}

TEST_F(CliTest, PerPairErrorsGiveExitTwo) {
  const std::string input = Write(
      "in.jsonl",
      "{\"id\":\"a\",\"document\":\"a b c. I am.\",\"summary\":\"x\"}\n"
      "{\"id\":\"b\",\"document\":\"Engineers celebrated the opening.\","
      "\"summary\":\"x\"}\n");
  const RunResult r = RunBlanc({"score", "--input", input});
  EXPECT_EQ(r.code, kExitPartial);
  const auto first = nlohmann::json::parse(Lines(r.out)[0]);
  EXPECT_EQ(first["error"]["code"], "no_maskable_tokens");
}

TEST_F(CliTest, FatalProblemsGiveExitOne) {
  EXPECT_EQ(RunBlanc({"score", "--input", desk_, "--backend", "/nonexistent"}).code,
            kExitFatal);
  EXPECT_EQ(RunBlanc({"score", "--input", Path("missing.jsonl")}).code, kExitFatal);
  EXPECT_EQ(RunBlanc({"score", "--input", desk_, "--variant", "bogus"}).code, kExitFatal);
  EXPECT_EQ(RunBlanc({"score"}).code, kExitFatal);
  EXPECT_EQ(RunBlanc({"frobnicate"}).code, kExitFatal);
  EXPECT_EQ(RunBlanc({"score", "--input", Write("bad.jsonl", "nope\n")}).code,
            kExitFatal);
  EXPECT_EQ(RunBlanc({"--help"}).code, kExitOk);
}

TEST_F(CliTest, ScoreOutputIndependentOfParallelism) {
  const RunResult serial =
      RunBlanc({"score", "--input", desk_, "--parallelism", "1", "--variant", "logprob"});
  const RunResult parallel =
      RunBlanc({"score", "--input", desk_, "--parallelism", "8", "--variant", "logprob"});
  const RunResult again =
      RunBlanc({"score", "--input", desk_, "--parallelism", "8", "--variant", "logprob"});
  ASSERT_EQ(serial.code, kExitOk);
  EXPECT_EQ(Lines(serial.out).size(), 20u);
  EXPECT_EQ(serial.out, parallel.out);
  EXPECT_EQ(parallel.out, again.out);
}

TEST_F(CliTest, OutputFlagWritesFile) {
  const std::string out = Path("scores.jsonl");
  const RunResult r = RunBlanc({"score", "--input", desk_, "--output", out});
  ASSERT_EQ(r.code, kExitOk);
  EXPECT_TRUE(r.out.empty());
  EXPECT_EQ(Lines(testing::ReadFile(out)).size(), 20u);
}

TEST_F(CliTest, SweepSingleGapGivesOneRow) {
  const RunResult r = RunBlanc({"sweep", "--input", desk_, "--gaps", "1"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto lines = Lines(r.out);
  ASSERT_EQ(lines.size(), 3u);
  EXPECT_EQ(lines[0], "# schema: blanc.sweep.v1");
  EXPECT_EQ(lines[1],
            "gap,mask_width,n_pairs,n_failed,mean_score,spearman_rho,spearman_p");
  EXPECT_EQ(lines[2].substr(0, 9), "1,1,20,0,");
}

TEST_F(CliTest, SweepMeansMatchDirectScoring) {
  const RunResult r = RunBlanc({"sweep", "--input", desk_, "--gaps", "2,6",
                           "--variant", "logit"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  std::istringstream in(r.out);
  const auto rows = cli::ReadCsv(in);
  ASSERT_EQ(rows.size(), 3u);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    MaskingPolicy policy;
    policy.gap = std::stoi(rows[i].fields[0]);
    double sum = 0.0;
    for (const PairRecord& p : testing::DeskCorpus()) {
      sum += ScorePair(p.document, p.summary, policy, ScoreVariant::kLogit,
                       testing::ReferenceModel())
                 .score;
    }
    EXPECT_EQ(rows[i].fields[4], cli::FormatDouble(sum / 20.0));
  }
}

TEST_F(CliTest, SweepCorrelatesWithAnnotations) {
  std::string csv = "pair_id,annotator_id,quality,score\n";
  int k = 0;
  for (const PairRecord& p : testing::DeskCorpus()) {
    csv += p.id + ",a1,overall," + std::to_string(k++ % 5) + "\n";
  }
  const RunResult r = RunBlanc({"sweep", "--input", desk_, "--gaps", "6",
                           "--annotations", Write("ann.csv", csv)});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  std::istringstream in(r.out);
  const auto rows = cli::ReadCsv(in);
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_FALSE(rows[1].fields[5].empty());
  EXPECT_FALSE(rows[1].fields[6].empty());
}

TEST_F(CliTest, AnalyzeSyntheticStudy) {
  const std::string ann = Path("ann.csv");
  const std::string scores = Path("scores.jsonl");
  ASSERT_EQ(RunBlanc({"synth-annotations", "--annotations", ann, "--scores", scores}).code,
            kExitOk);
  const std::string table = Path("splits.csv");
  const RunResult r = RunBlanc({"analyze", "--annotations", ann, "--scores", scores,
                           "--output", table});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  std::ifstream in(table);
  const auto rows = cli::ReadCsv(in);
  ASSERT_EQ(rows.size(), 121u);
  EXPECT_EQ(rows[0].fields,
            (std::vector<std::string>{"split_id", "members", "human_human_rho",
                                      "human_human_p", "blanc_human_rho",
                                      "blanc_human_p"}));
  EXPECT_EQ(rows[1].fields[1], "a00;a01;a02");
  EXPECT_NE(r.out.find("outperform_fraction="), std::string::npos);
  EXPECT_NE(r.out.find("splits=120"), std::string::npos);
}

TEST_F(CliTest, AnalyzePerfectAgreement) {
  std::string csv = "pair_id,annotator_id,quality,score\n";
  std::string scores;
  for (int p = 0; p < 12; ++p) {
    for (int a = 0; a < 10; ++a) {
      csv += "p" + std::to_string(p) + ",a" + std::to_string(a) + ",overall," +
             std::to_string(p % 5) + "\n";
    }
    scores += "{\"id\":\"p" + std::to_string(p) + "\",\"score\":" +
              std::to_string(p) + "}\n";
  }
  const RunResult r = RunBlanc({"analyze", "--annotations", Write("a.csv", csv),
                           "--scores", Write("s.jsonl", scores)});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  std::istringstream in(r.out);
  const auto rows = cli::ReadCsv(in);
  ASSERT_EQ(rows.size(), 121u);
  for (std::size_t i = 1; i < rows.size(); ++i) EXPECT_EQ(rows[i].fields[2], "1");
  EXPECT_NE(r.out.find("# summary:"), std::string::npos);
}

TEST_F(CliTest, AnalyzeNamesSchemaViolations) {
  const std::string ann = Write("a.csv",
                                "pair_id,annotator_id,quality,score\n"
                                "p1,a1,overall,3\n"
                                "p1,a2,overall,seven\n"
                                "p1,a3,charm,2\n"
                                "p1,a4,overall,9\n"
                                "p2,a1,overall\n");
  const std::string scores = Write("s.jsonl", "{\"id\":\"p1\",\"score\":0.1}\n");
  const RunResult r = RunBlanc({"analyze", "--annotations", ann, "--scores", scores,
                           "--group-size", "1"});
  for (int line : {3, 4, 5, 6}) {
    EXPECT_NE(r.err.find("a.csv:" + std::to_string(line) + ":"), std::string::npos)
        << r.err;
  }
  EXPECT_EQ(r.err.find("a.csv:2:"), std::string::npos);
  const RunResult bad_header =
      RunBlanc({"analyze", "--annotations", Write("b.csv", "pair,annotator,q,s\n"),
           "--scores", scores});
  EXPECT_EQ(bad_header.code, kExitFatal);
  EXPECT_NE(bad_header.err.find("b.csv:1: header must be"), std::string::npos)
      << bad_header.err;
}

TEST_F(CliTest, AnalyzeMissingScoresIsFatal) {
  const std::string ann = Write("a.csv",
                                "pair_id,annotator_id,quality,score\n"
                                "p1,a1,overall,3\np1,a2,overall,2\n");
  const RunResult r = RunBlanc({"analyze", "--annotations", ann, "--scores",
                           Write("s.jsonl", "{\"id\":\"p9\",\"score\":0.1}\n"),
                           "--group-size", "1"});
  EXPECT_EQ(r.code, kExitFatal);
  EXPECT_NE(r.err.find("p1"), std::string::npos);
}

TEST_F(CliTest, SwapSimulationIsReproducible) {
  const std::vector<std::string> args = {
      "swap-sim", "--input", desk_, "--seed", "17", "--gaps", "2,6",
      "--trials-per-pair", "2", "--summary", Path("summary.csv")};
  const RunResult a = RunBlanc(args);
  ASSERT_EQ(a.code, kExitOk) << a.err;
  const RunResult b = RunBlanc(args);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(Lines(a.out).size(), 40u);
  const auto first = nlohmann::json::parse(Lines(a.out)[0]);
  EXPECT_EQ(first["schema"], "blanc.swap.v1");
  EXPECT_EQ(first["scores_before"].size(), 2u);
  std::ifstream in(Path("summary.csv"));
  const auto rows = cli::ReadCsv(in);
  ASSERT_EQ(rows.size(), 4u);
  EXPECT_EQ(rows[0].fields,
            (std::vector<std::string>{"gap", "n_trials", "frac_decreased",
                                      "frac_increased", "frac_unchanged"}));
  EXPECT_EQ(rows[3].fields[0], "combined");
  const RunResult reseeded = RunBlanc({"swap-sim", "--input", desk_, "--seed", "18",
                                  "--trials-per-pair", "2", "--summary",
                                  Path("summary2.csv")});
  EXPECT_NE(reseeded.out, a.out);
}

TEST(CsvTest, QuotingRoundTrips) {
  const std::string field = "a,\"b\"";
  EXPECT_EQ(cli::ParseCsvLine(cli::QuoteCsv(field) + ",x"),
            (std::vector<std::string>{field, "x"}));
  EXPECT_THROW(cli::ParseCsvLine("\"open"), Error);
}

}  // namespace
}  // namespace blanc
