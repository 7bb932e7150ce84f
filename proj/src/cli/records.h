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

#ifndef BLANC_CLI_RECORDS_H_
#define BLANC_CLI_RECORDS_H_

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "blanc/analysis.h"
#include "blanc/annotations.h"
#include "blanc/scoring.h"

namespace blanc::cli {

inline constexpr std::string_view kScoreSchema = "blanc.score.v1";
inline constexpr std::string_view kSwapSchema = "blanc.swap.v1";
inline constexpr std::string_view kSweepSchema = "blanc.sweep.v1";
inline constexpr std::string_view kSplitsSchema = "blanc.splits.v1";
inline constexpr std::string_view kSwapSummarySchema = "blanc.swap_summary.v1";
inline constexpr std::string_view kAnnotationsSchema = "blanc.annotations.v1";

// A rejected input line.
struct LineError {
  int line = 0;  // 1-based
  std::string message;
};

struct PairFile {
  std::vector<PairRecord> pairs;
  std::vector<int> lines;  // source line of each pair
  std::vector<LineError> errors;
};

// Reads {"id", "document", "summary"} objects, one per line. Blank lines are
// ignored. Bad lines and repeated ids are reported and skipped.
PairFile ReadPairs(std::istream& in);

// Splits one CSV line (comma delimiter, double-quote quoting with "" as an
// escaped quote). Throws Error(kParse) on an unterminated quote.
std::vector<std::string> ParseCsvLine(std::string_view line);

// Quotes a CSV field.
std::string QuoteCsv(std::string_view field);

// Shortest round-trip decimal text for a double; "nan" and "inf" pass
// through.
std::string FormatDouble(double value);

// Reads lines of a CSV file, skipping blank lines and '#' comments, and
// keeping the source line number of each row.
struct CsvRow {
  int line = 0;
  std::vector<std::string> fields;
};
std::vector<CsvRow> ReadCsv(std::istream& in);

// Annotation CSV with header pair_id,annotator_id,quality,score. Rows that
// break the schema are returned as errors; the header must be exact.
struct AnnotationFile {
  AnnotationSet annotations;
  std::vector<LineError> errors;
};
AnnotationFile ReadAnnotations(std::istream& in);
void WriteAnnotations(const AnnotationSet& annotations, std::ostream& out);

// Error CSV with header pair_id,annotator_id,error_type[,span_begin,span_end].
struct ErrorFile {
  std::vector<ErrorAnnotation> errors;
  std::vector<LineError> problems;
};
ErrorFile ReadErrorAnnotations(std::istream& in);

// Reads `id` and `score` from score JSONL records. Records carrying an
// error instead of a score are skipped silently; malformed lines and
// repeated ids are reported.
struct ScoreFile {
  ScoreMap scores;
  std::vector<LineError> errors;
};
ScoreFile ReadScores(std::istream& in);

}  // namespace blanc::cli

#endif  // BLANC_CLI_RECORDS_H_
