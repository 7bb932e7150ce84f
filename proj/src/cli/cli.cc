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

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "blanc/analysis.h"
#include "blanc/backend.h"
#include "blanc/correlation.h"
#include "blanc/corruption.h"
#include "blanc/error.h"
#include "blanc/scoring.h"
#include "cli/records.h"
#include "nlohmann/json.hpp"

namespace blanc {
namespace {

using cli::FormatDouble;
using cli::LineError;
using cli::QuoteCsv;
using Json = nlohmann::ordered_json;

// Flags shared by the commands that run a model.
struct ModelFlags {
  std::string backend;
  int batch_size = 8;
  int parallelism = 1;
  std::string variant = "accuracy";
  int min_word_len = MaskingPolicy{}.min_word_len;
  int mask_width = 1;
  double copy_boost = BackendOptions{}.copy_boost;
};

void AddModelFlags(CLI::App& cmd, ModelFlags& flags) {
  const char* env = std::getenv("BLANC_BUNDLE");
  flags.backend = env != nullptr && *env != '\0' ? env : "reference";
  cmd.add_option("--backend", flags.backend,
                 "Model bundle directory or 'reference' (default: "
                 "$BLANC_BUNDLE, else 'reference')");
  cmd.add_option("--batch-size", flags.batch_size, "Inputs per inference call")
      ->check(CLI::PositiveNumber);
  cmd.add_option("--parallelism", flags.parallelism, "Pairs scored concurrently")
      ->check(CLI::PositiveNumber);
  cmd.add_option("--variant", flags.variant,
                 "accuracy, logit, probability or log_probability");
  cmd.add_option("--min-word-len", flags.min_word_len,
                 "Shortest whole word that may be masked")
      ->check(CLI::NonNegativeNumber);
  cmd.add_option("--copy-boost", flags.copy_boost,
                 "Copy strength of the reference backend")
      ->check(CLI::NonNegativeNumber);
}

// Thrown for problems that end the command with exit code 1.
struct Fatal {
  std::string message;
};

ScoreVariant VariantOrThrow(const std::string& name) {
  auto variant = ParseVariant(name);
  if (!variant) throw Fatal{"unknown variant '" + name + "'"};
  return *variant;
}

MaskingPolicy PolicyFrom(const ModelFlags& flags, int gap) {
  MaskingPolicy policy;
  policy.gap = gap;
  policy.min_word_len = flags.min_word_len;
  policy.mask_width = flags.mask_width;
  try {
    policy.Validate();
  } catch (const Error& e) {
    throw Fatal{e.what()};
  }
  return policy;
}

std::unique_ptr<MaskedLanguageModel> OpenBackend(const ModelFlags& flags) {
  BackendOptions options;
  options.batch_size = flags.batch_size;
  options.copy_boost = flags.copy_boost;
  try {
    return LoadBackend(flags.backend, options);
  } catch (const Error& e) {
    throw Fatal{std::string("cannot load backend '") + flags.backend +
                "': " + e.what()};
  }
}

std::vector<int> ParseIntList(const std::string& text, const char* flag,
                              int min_value) {
  std::vector<int> values;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    try {
      std::size_t used = 0;
      const int value = std::stoi(item, &used);
      if (used != item.size() || value < min_value) throw std::invalid_argument(item);
      values.push_back(value);
    } catch (const std::exception&) {
      throw Fatal{std::string(flag) + ": invalid value '" + item + "'"};
    }
  }
  if (values.empty()) throw Fatal{std::string(flag) + " needs at least one value"};
  return values;
}

std::ifstream OpenInput(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Fatal{"cannot open " + path};
  return in;
}

std::string ReadWholeFile(const std::string& path) {
  std::ifstream in = OpenInput(path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

// Writes to `path`, or to `fallback` when the path is empty.
class Output {
 public:
  Output(const std::string& path, std::ostream& fallback) {
    if (path.empty()) {
      stream_ = &fallback;
    } else {
      file_.open(path, std::ios::binary);
      if (!file_) throw Fatal{"cannot write " + path};
      stream_ = &file_;
    }
  }
  bool is_file() const { return stream_ == &file_; }
  std::ostream& operator*() { return *stream_; }

 private:
  std::ofstream file_;
  std::ostream* stream_ = nullptr;
};

void ReportLines(std::ostream& err, const std::string& source,
                 const std::vector<LineError>& errors) {
  for (const LineError& e : errors) {
    err << source << ":" << e.line << ": " << e.message << "\n";
  }
}

cli::PairFile LoadPairs(const std::string& path, std::ostream& err) {
  std::ifstream in = OpenInput(path);
  cli::PairFile file = cli::ReadPairs(in);
  ReportLines(err, path, file.errors);
  if (file.pairs.empty()) throw Fatal{"no valid pairs in " + path};
  return file;
}

Json ErrorJson(const Error& error) {
  return Json{{"code", ErrorCodeName(error.code())}, {"message", error.what()}};
}

// ---------------------------------------------------------------- score

struct ScoreFlags {
  ModelFlags model;
  std::string input;
  std::string doc;
  std::string summary;
  std::string id = "pair";
  int gap = 6;
  std::string output;
};

int RunScore(const ScoreFlags& flags, std::ostream& out, std::ostream& err) {
  const ScoreVariant variant = VariantOrThrow(flags.model.variant);
  const MaskingPolicy policy = PolicyFrom(flags.model, flags.gap);

  cli::PairFile file;
  if (!flags.input.empty()) {
    if (!flags.doc.empty() || !flags.summary.empty()) {
      throw Fatal{"use either --input or --doc/--summary"};
    }
    file = LoadPairs(flags.input, err);
  } else {
    if (flags.doc.empty() || flags.summary.empty()) {
      throw Fatal{"--input or both --doc and --summary are required"};
    }
    file.pairs.push_back(
        {flags.id, ReadWholeFile(flags.doc), ReadWholeFile(flags.summary)});
    file.lines.push_back(1);
  }

  const auto model = OpenBackend(flags.model);
  Output sink(flags.output, out);
  const std::vector<BatchItem> items =
      ScoreBatch(file.pairs, policy, variant, *model, flags.model.parallelism);

  // Merge scored pairs and rejected lines back into input order.
  std::map<int, Json> records;
  for (const LineError& e : file.errors) {
    records.emplace(e.line,
                    Json{{"schema", cli::kScoreSchema},
                         {"id", nullptr},
                         {"line", e.line},
                         {"error", {{"code", "parse"}, {"message", e.message}}}});
  }
  bool partial = !file.errors.empty();
  for (std::size_t i = 0; i < items.size(); ++i) {
    const BatchItem& item = items[i];
    Json record{{"schema", cli::kScoreSchema},
                {"id", item.id},
                {"variant", VariantName(variant)},
                {"gap", policy.gap},
                {"mask_width", policy.mask_width}};
    if (item.result) {
      record["score"] = item.result->score;
      record["n_help"] = item.result->n_help;
      record["n_base"] = item.result->n_base;
      record["n_total"] = item.result->n_total;
    } else {
      partial = true;
      record["error"] = ErrorJson(*item.error);
      err << "pair '" << item.id << "': " << item.error->what() << "\n";
    }
    records.emplace(file.lines[i], std::move(record));
  }
  for (const auto& [line, record] : records) *sink << record.dump() << "\n";
  return partial ? kExitPartial : kExitOk;
}

// ---------------------------------------------------------------- sweep

struct SweepFlags {
  ModelFlags model;
  std::string input;
  std::string gaps = "1,2,3,6";
  std::string mask_widths = "1";
  std::string annotations;
  std::string quality = "overall";
  std::string output;
};

// Mean human rating per pair for one quality.
std::map<std::string, double> MeanRatings(const AnnotationSet& annotations,
                                          Quality quality) {
  std::map<std::string, std::pair<double, int>> sums;
  for (const Annotation& a : annotations.records()) {
    if (a.quality != quality) continue;
    auto& [sum, count] = sums[a.pair_id];
    sum += a.score;
    ++count;
  }
  std::map<std::string, double> means;
  for (const auto& [id, sum_count] : sums) {
    means[id] = sum_count.first / sum_count.second;
  }
  return means;
}

cli::AnnotationFile LoadAnnotations(const std::string& path, std::ostream& err) {
  std::ifstream in = OpenInput(path);
  cli::AnnotationFile file = cli::ReadAnnotations(in);
  ReportLines(err, path, file.errors);
  if (file.annotations.records().empty()) {
    throw Fatal{"no valid annotations in " + path};
  }
  return file;
}

int RunSweep(const SweepFlags& flags, std::ostream& out, std::ostream& err) {
  const ScoreVariant variant = VariantOrThrow(flags.model.variant);
  const std::vector<int> gaps = ParseIntList(flags.gaps, "--gaps", 1);
  const std::vector<int> widths =
      ParseIntList(flags.mask_widths, "--mask-width", 1);
  const auto quality = ParseQuality(flags.quality);
  if (!quality) throw Fatal{"unknown quality '" + flags.quality + "'"};
  for (int gap : gaps) {
    for (int width : widths) {
      ModelFlags model = flags.model;
      model.mask_width = width;
      PolicyFrom(model, gap);
    }
  }

  cli::PairFile file = LoadPairs(flags.input, err);
  bool partial = !file.errors.empty();
  std::optional<std::map<std::string, double>> human;
  if (!flags.annotations.empty()) {
    cli::AnnotationFile annotations = LoadAnnotations(flags.annotations, err);
    partial = partial || !annotations.errors.empty();
    human = MeanRatings(annotations.annotations, *quality);
  }

  const auto model = OpenBackend(flags.model);
  Output sink(flags.output, out);
  *sink << "# schema: " << cli::kSweepSchema << "\n";
  *sink << "gap,mask_width,n_pairs,n_failed,mean_score,spearman_rho,spearman_p\n";
  for (int gap : gaps) {
    for (int width : widths) {
      ModelFlags widened = flags.model;
      widened.mask_width = width;
      const MaskingPolicy policy = PolicyFrom(widened, gap);
      const std::vector<BatchItem> items = ScoreBatch(
          file.pairs, policy, variant, *model, flags.model.parallelism);
      double sum = 0.0;
      int scored = 0;
      std::vector<double> blanc;
      std::vector<double> people;
      for (const BatchItem& item : items) {
        if (!item.result) {
          partial = true;
          err << "gap " << gap << ", pair '" << item.id
              << "': " << item.error->what() << "\n";
          continue;
        }
        sum += item.result->score;
        ++scored;
        if (human) {
          auto it = human->find(item.id);
          if (it != human->end()) {
            blanc.push_back(item.result->score);
            people.push_back(it->second);
          }
        }
      }
      std::string rho;
      std::string p;
      if (human) {
        try {
          const CorrelationResult r = Spearman(blanc, people);
          rho = FormatDouble(r.coefficient);
          p = FormatDouble(r.p_value);
        } catch (const Error& e) {
          err << "gap " << gap << ": no correlation: " << e.what() << "\n";
        }
      }
      *sink << gap << ',' << width << ',' << items.size() << ','
            << items.size() - scored << ','
            << (scored > 0 ? FormatDouble(sum / scored) : std::string()) << ','
            << rho << ',' << p << "\n";
    }
  }
  return partial ? kExitPartial : kExitOk;
}

// ---------------------------------------------------------------- analyze

struct AnalyzeFlags {
  std::string annotations;
  std::string scores;
  std::string errors;
  std::string quality = "overall";
  int group_size = 3;
  double alpha = 0.05;
  std::string output;
};

std::string Join(const std::vector<std::string>& items, char sep) {
  std::string out;
  for (const std::string& item : items) {
    if (!out.empty()) out += sep;
    out += item;
  }
  return out;
}

int RunAnalyze(const AnalyzeFlags& flags, std::ostream& out, std::ostream& err) {
  const auto quality = ParseQuality(flags.quality);
  if (!quality) throw Fatal{"unknown quality '" + flags.quality + "'"};
  if (!(flags.alpha > 0.0 && flags.alpha < 1.0)) {
    throw Fatal{"--alpha must lie in (0, 1)"};
  }

  cli::AnnotationFile annotations = LoadAnnotations(flags.annotations, err);
  std::ifstream scores_in = OpenInput(flags.scores);
  cli::ScoreFile scores = cli::ReadScores(scores_in);
  ReportLines(err, flags.scores, scores.errors);
  bool partial = !annotations.errors.empty() || !scores.errors.empty();

  std::vector<SplitRecord> splits;
  try {
    splits = SplitCorrelationAnalysis(
        annotations.annotations, scores.scores, *quality,
        {.small_group_size = flags.group_size, .alpha = flags.alpha});
  } catch (const Error& e) {
    throw Fatal{e.what()};
  }

  Output sink(flags.output, out);
  *sink << "# schema: " << cli::kSplitsSchema << "\n";
  *sink << "split_id,members,human_human_rho,human_human_p,blanc_human_rho,"
           "blanc_human_p\n";
  auto cells = [](const std::optional<CorrelationResult>& r) {
    if (!r) return std::string(",");
    return FormatDouble(r->coefficient) + "," + FormatDouble(r->p_value);
  };
  for (const SplitRecord& s : splits) {
    *sink << s.split_id << ',' << QuoteCsv(Join(s.small_group, ';')) << ','
          << cells(s.human_human) << ',' << cells(s.blanc_human) << "\n";
  }

  // With the table on stdout the summary becomes a trailing comment.
  const char* lead = sink.is_file() ? "" : "# ";
  try {
    const OutperformSummary summary = OutperformFraction(splits);
    out << lead << "summary: quality=" << QualityName(*quality)
        << " splits=" << splits.size()
        << " outperform_fraction=" << FormatDouble(summary.fraction)
        << " wins=" << summary.wins << " compared=" << summary.compared << "\n";
  } catch (const Error&) {
    out << lead << "summary: quality=" << QualityName(*quality)
        << " splits=" << splits.size()
        << " outperform_fraction=nan wins=0 compared=0\n";
  }

  if (!flags.errors.empty()) {
    std::ifstream errors_in = OpenInput(flags.errors);
    cli::ErrorFile errors = cli::ReadErrorAnnotations(errors_in);
    ReportLines(err, flags.errors, errors.problems);
    partial = partial || !errors.problems.empty();
    try {
      const ErrorCorrelation c = CorrelateWithErrors(scores.scores, errors.errors);
      out << lead << "error_correlation: n=" << c.spearman.n
          << " spearman_rho=" << FormatDouble(c.spearman.coefficient)
          << " spearman_p=" << FormatDouble(c.spearman.p_value)
          << " pearson_r=" << FormatDouble(c.pearson.coefficient)
          << " pearson_p=" << FormatDouble(c.pearson.p_value) << "\n";
    } catch (const Error& e) {
      throw Fatal{std::string("error correlation: ") + e.what()};
    }
  }
  return partial ? kExitPartial : kExitOk;
}

// ---------------------------------------------------------------- swap-sim

struct SwapFlags {
  ModelFlags model;
  std::string input;
  std::string gaps = "2,6";
  uint64_t seed = 0;
  int trials_per_pair = 1;
  std::string output;
  std::string summary;
};

int RunSwapSim(const SwapFlags& flags, std::ostream& out, std::ostream& err) {
  SwapExperimentOptions options;
  options.variant = VariantOrThrow(flags.model.variant);
  options.gaps = ParseIntList(flags.gaps, "--gaps", 1);
  options.policy = PolicyFrom(flags.model, options.gaps.front());
  options.seed = flags.seed;
  options.trials_per_pair = flags.trials_per_pair;
  options.parallelism = flags.model.parallelism;

  cli::PairFile file = LoadPairs(flags.input, err);
  bool partial = !file.errors.empty();
  const auto model = OpenBackend(flags.model);
  Output sink(flags.output, out);
  Output summary_sink(flags.summary, err);

  SwapReport report;
  try {
    report = RunSwapExperiment(file.pairs, options, *model);
  } catch (const Error& e) {
    throw Fatal{e.what()};
  }

  for (const SwapTrial& t : report.trials) {
    Json record{{"schema", cli::kSwapSchema},
                {"trial_id", t.trial_id},
                {"pair_id", t.pair_id},
                {"seed", flags.seed},
                {"variant", VariantName(options.variant)},
                {"gaps", options.gaps},
                {"entity_kind", EntityKindName(t.span.kind)},
                {"original", t.span.original_text},
                {"replacement", t.span.replacement_text},
                {"span_begin", t.span.begin},
                {"span_end", t.span.end},
                {"corrupted_summary", t.corrupted_summary},
                {"scores_before", t.scores_before},
                {"scores_after", t.scores_after}};
    *sink << record.dump() << "\n";
  }
  for (const SkippedTrial& s : report.skipped) {
    Json record{{"schema", cli::kSwapSchema},
                {"trial_id", s.trial_id},
                {"pair_id", s.pair_id},
                {"seed", flags.seed},
                {"skipped", {{"code", ErrorCodeName(s.code)},
                             {"message", s.message}}}};
    *sink << record.dump() << "\n";
    if (s.code != ErrorCode::kNoSwappableEntity) {
      partial = true;
      err << "trial '" << s.trial_id << "': " << s.message << "\n";
    }
  }

  *summary_sink << "# schema: " << cli::kSwapSummarySchema << "\n";
  *summary_sink << "gap,n_trials,frac_decreased,frac_increased,frac_unchanged\n";
  for (const SwapOutcomeSummary& row : report.summary) {
    *summary_sink << row.label << ',' << row.n_trials << ','
                  << FormatDouble(row.frac_decreased) << ','
                  << FormatDouble(row.frac_increased) << ','
                  << FormatDouble(row.frac_unchanged) << "\n";
  }
  return partial ? kExitPartial : kExitOk;
}

// ---------------------------------------------------------------- synth

struct SynthFlags {
  SyntheticStudyOptions options;
  std::string annotations;
  std::string scores;
};

int RunSynth(const SynthFlags& flags, std::ostream& out) {
  SyntheticStudy study;
  try {
    study = GenerateSyntheticStudy(flags.options);
  } catch (const Error& e) {
    throw Fatal{e.what()};
  }
  Output annotations(flags.annotations, out);
  cli::WriteAnnotations(study.annotations, *annotations);
  Output scores(flags.scores, out);
  for (const auto& [id, score] : study.scores) {
    Json record{{"schema", cli::kScoreSchema},
                {"id", id},
                {"variant", "synthetic"},
                {"score", score}};
    *scores << record.dump() << "\n";
  }
  return kExitOk;
}

}  // namespace

int RunCli(int argc, const char* const* argv, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Reference-free summary evaluation with masked language models",
               "blanc"};
  app.require_subcommand(1);

  ScoreFlags score;
  CLI::App* score_cmd =
      app.add_subcommand("score", "Score document/summary pairs (JSONL out)");
  AddModelFlags(*score_cmd, score.model);
  score_cmd->add_option("--input", score.input, "JSONL of {id, document, summary}");
  score_cmd->add_option("--doc", score.doc, "Document text file");
  score_cmd->add_option("--summary", score.summary, "Summary text file");
  score_cmd->add_option("--id", score.id, "Record id for --doc/--summary");
  score_cmd->add_option("--gap", score.gap, "Mask step")->check(CLI::PositiveNumber);
  score_cmd->add_option("--mask-width", score.model.mask_width,
                        "Tokens masked per selection")
      ->check(CLI::PositiveNumber);
  score_cmd->add_option("--output", score.output, "Output JSONL (default stdout)");

  SweepFlags sweep;
  CLI::App* sweep_cmd =
      app.add_subcommand("sweep", "Mean score per mask step and width (CSV out)");
  AddModelFlags(*sweep_cmd, sweep.model);
  sweep_cmd->add_option("--input", sweep.input, "JSONL of {id, document, summary}")
      ->required();
  sweep_cmd->add_option("--gaps", sweep.gaps, "Comma-separated mask steps");
  sweep_cmd->add_option("--mask-width", sweep.mask_widths,
                        "Comma-separated mask widths");
  sweep_cmd->add_option("--annotations", sweep.annotations,
                        "Annotation CSV for rank correlation");
  sweep_cmd->add_option("--quality", sweep.quality, "Quality to correlate with");
  sweep_cmd->add_option("--output", sweep.output, "Output CSV (default stdout)");

  AnalyzeFlags analyze;
  CLI::App* analyze_cmd = app.add_subcommand(
      "analyze", "Annotator-split correlation analysis (CSV out)");
  analyze_cmd->add_option("--annotations", analyze.annotations, "Annotation CSV")
      ->required();
  analyze_cmd->add_option("--scores", analyze.scores, "Score JSONL")->required();
  analyze_cmd->add_option("--errors", analyze.errors, "Factual-error CSV");
  analyze_cmd->add_option("--quality", analyze.quality, "Quality to analyze");
  analyze_cmd->add_option("--group-size", analyze.group_size,
                          "Annotators in the small group")
      ->check(CLI::PositiveNumber);
  analyze_cmd->add_option("--alpha", analyze.alpha, "Significance level");
  analyze_cmd->add_option("--output", analyze.output,
                          "Per-split CSV (default stdout)");

  SwapFlags swap;
  CLI::App* swap_cmd = app.add_subcommand(
      "swap-sim", "Entity-swap sensitivity experiment (JSONL + CSV out)");
  AddModelFlags(*swap_cmd, swap.model);
  swap_cmd->add_option("--input", swap.input, "JSONL of {id, document, summary}")
      ->required();
  swap_cmd->add_option("--gaps", swap.gaps, "Comma-separated mask steps");
  swap_cmd->add_option("--seed", swap.seed, "Random seed");
  swap_cmd->add_option("--trials-per-pair", swap.trials_per_pair,
                       "Independent swaps per summary")
      ->check(CLI::PositiveNumber);
  swap_cmd->add_option("--mask-width", swap.model.mask_width,
                       "Tokens masked per selection")
      ->check(CLI::PositiveNumber);
  swap_cmd->add_option("--output", swap.output, "Trial JSONL (default stdout)");
  swap_cmd->add_option("--summary", swap.summary,
                       "Summary CSV (default stderr)");

  SynthFlags synth;
  CLI::App* synth_cmd = app.add_subcommand(
      "synth-annotations", "Write a seeded synthetic annotation study");
  synth_cmd->add_option("--pairs", synth.options.pairs)->check(CLI::PositiveNumber);
  synth_cmd->add_option("--annotators", synth.options.annotators)
      ->check(CLI::PositiveNumber);
  synth_cmd->add_option("--annotator-noise", synth.options.annotator_noise)
      ->check(CLI::NonNegativeNumber);
  synth_cmd->add_option("--score-noise", synth.options.score_noise)
      ->check(CLI::NonNegativeNumber);
  synth_cmd->add_option("--seed", synth.options.seed);
  synth_cmd->add_option("--annotations", synth.annotations, "Annotation CSV out")
      ->required();
  synth_cmd->add_option("--scores", synth.scores, "Score JSONL out")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitFatal;
  }

  try {
    if (score_cmd->parsed()) return RunScore(score, out, err);
    if (sweep_cmd->parsed()) return RunSweep(sweep, out, err);
    if (analyze_cmd->parsed()) return RunAnalyze(analyze, out, err);
    if (swap_cmd->parsed()) return RunSwapSim(swap, out, err);
    if (synth_cmd->parsed()) return RunSynth(synth, out);
  } catch (const Fatal& f) {
    err << "error: " << f.message << "\n";
    return kExitFatal;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitFatal;
  }
  return kExitFatal;
}

}  // namespace blanc
