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

#include "cli/records.h"

#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <set>

#include "blanc/error.h"
#include "nlohmann/json.hpp"

namespace blanc::cli {
namespace {

using nlohmann::json;

bool IsBlank(std::string_view line) {
  return line.find_first_not_of(" \t\r") == std::string_view::npos;
}

void StripCr(std::string& line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
}

bool ParseInt(std::string_view text, int& value) {
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  return ec == std::errc() && ptr == end;
}

std::string FieldCountMessage(std::size_t got, std::size_t want) {
  return "expected " + std::to_string(want) + " fields, found " +
         std::to_string(got);
}

// Checks the header row. Returns an error message, or "" if it matches.
std::string CheckHeader(const std::vector<CsvRow>& rows,
                        const std::vector<std::string>& required,
                        std::size_t optional_tail = 0,
                        const std::vector<std::string>& optional = {}) {
  if (rows.empty()) return "missing header row";
  const auto& header = rows.front().fields;
  bool ok = header.size() >= required.size() &&
            header.size() <= required.size() + optional_tail;
  for (std::size_t i = 0; ok && i < header.size(); ++i) {
    const std::string& want =
        i < required.size() ? required[i] : optional[i - required.size()];
    ok = header[i] == want;
  }
  if (ok) return "";
  std::string want;
  for (const auto& name : required) want += (want.empty() ? "" : ",") + name;
  return "header must be " + want;
}

}  // namespace

PairFile ReadPairs(std::istream& in) {
  PairFile out;
  std::set<std::string> seen;
  std::string line;
  for (int number = 1; std::getline(in, line); ++number) {
    StripCr(line);
    if (IsBlank(line)) continue;
    try {
      const json record = json::parse(line);
      if (!record.is_object()) throw Error(ErrorCode::kParse, "not a JSON object");
      for (const char* key : {"id", "document", "summary"}) {
        auto it = record.find(key);
        if (it == record.end() || !it->is_string()) {
          throw Error(ErrorCode::kParse,
                      std::string("field '") + key + "' must be a string");
        }
      }
      PairRecord pair{record["id"].get<std::string>(),
                      record["document"].get<std::string>(),
                      record["summary"].get<std::string>()};
      if (!seen.insert(pair.id).second) {
        throw Error(ErrorCode::kParse, "duplicate id '" + pair.id + "'");
      }
      out.pairs.push_back(std::move(pair));
      out.lines.push_back(number);
    } catch (const json::exception& e) {
      out.errors.push_back({number, e.what()});
    } catch (const Error& e) {
      out.errors.push_back({number, e.what()});
    }
  }
  return out;
}

std::vector<std::string> ParseCsvLine(std::string_view line) {
  std::vector<std::string> fields(1);
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          fields.back() += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        fields.back() += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.emplace_back();
    } else {
      fields.back() += c;
    }
  }
  if (quoted) throw Error(ErrorCode::kParse, "unterminated quoted field");
  return fields;
}

std::string QuoteCsv(std::string_view field) {
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string FormatDouble(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, ptr);
}

std::vector<CsvRow> ReadCsv(std::istream& in) {
  std::vector<CsvRow> rows;
  std::string line;
  for (int number = 1; std::getline(in, line); ++number) {
    StripCr(line);
    if (IsBlank(line) || line.front() == '#') continue;
    rows.push_back({number, ParseCsvLine(line)});
  }
  return rows;
}

AnnotationFile ReadAnnotations(std::istream& in) {
  AnnotationFile out;
  std::vector<CsvRow> rows;
  try {
    rows = ReadCsv(in);
  } catch (const Error& e) {
    out.errors.push_back({0, e.what()});
    return out;
  }
  const std::string header_error =
      CheckHeader(rows, {"pair_id", "annotator_id", "quality", "score"});
  if (!header_error.empty()) {
    out.errors.push_back({rows.empty() ? 1 : rows.front().line, header_error});
    return out;
  }
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const CsvRow& row = rows[r];
    if (row.fields.size() != 4) {
      out.errors.push_back({row.line, FieldCountMessage(row.fields.size(), 4)});
      continue;
    }
    const auto quality = ParseQuality(row.fields[2]);
    if (!quality) {
      out.errors.push_back({row.line, "unknown quality '" + row.fields[2] + "'"});
      continue;
    }
    int score = 0;
    if (!ParseInt(row.fields[3], score)) {
      out.errors.push_back({row.line, "score '" + row.fields[3] +
                                          "' is not an integer"});
      continue;
    }
    if (row.fields[0].empty() || row.fields[1].empty()) {
      out.errors.push_back({row.line, "pair_id and annotator_id are required"});
      continue;
    }
    try {
      out.annotations.Add({row.fields[0], row.fields[1], *quality, score});
    } catch (const Error& e) {
      out.errors.push_back({row.line, e.what()});
    }
  }
  return out;
}

void WriteAnnotations(const AnnotationSet& annotations, std::ostream& out) {
  out << "# schema: " << kAnnotationsSchema << "\n";
  out << "pair_id,annotator_id,quality,score\n";
  for (const Annotation& a : annotations.records()) {
    out << QuoteCsv(a.pair_id) << ',' << QuoteCsv(a.annotator_id) << ','
        << QuoteCsv(QualityName(a.quality)) << ',' << a.score << '\n';
  }
}

ErrorFile ReadErrorAnnotations(std::istream& in) {
  ErrorFile out;
  std::vector<CsvRow> rows;
  try {
    rows = ReadCsv(in);
  } catch (const Error& e) {
    out.problems.push_back({0, e.what()});
    return out;
  }
  const std::string header_error =
      CheckHeader(rows, {"pair_id", "annotator_id", "error_type"}, 2,
                  {"span_begin", "span_end"});
  if (!header_error.empty()) {
    out.problems.push_back({rows.empty() ? 1 : rows.front().line, header_error});
    return out;
  }
  const std::size_t width = rows.front().fields.size();
  if (width == 4) {
    out.problems.push_back({rows.front().line,
                            "span_begin and span_end must appear together"});
    return out;
  }
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const CsvRow& row = rows[r];
    if (row.fields.size() != width) {
      out.problems.push_back(
          {row.line, FieldCountMessage(row.fields.size(), width)});
      continue;
    }
    const auto type = ParseErrorType(row.fields[2]);
    if (!type) {
      out.problems.push_back(
          {row.line, "unknown error_type '" + row.fields[2] + "'"});
      continue;
    }
    ErrorAnnotation record{row.fields[0], row.fields[1], *type};
    if (width == 5 && !(row.fields[3].empty() && row.fields[4].empty())) {
      if (!ParseInt(row.fields[3], record.span_begin) ||
          !ParseInt(row.fields[4], record.span_end) || record.span_begin < 0 ||
          record.span_end < record.span_begin) {
        out.problems.push_back({row.line, "invalid span"});
        continue;
      }
    }
    out.errors.push_back(std::move(record));
  }
  return out;
}

ScoreFile ReadScores(std::istream& in) {
  ScoreFile out;
  std::string line;
  for (int number = 1; std::getline(in, line); ++number) {
    StripCr(line);
    if (IsBlank(line)) continue;
    try {
      const json record = json::parse(line);
      if (!record.is_object()) throw Error(ErrorCode::kParse, "not a JSON object");
      auto id = record.find("id");
      if (id == record.end() || !id->is_string()) {
        throw Error(ErrorCode::kParse, "field 'id' must be a string");
      }
      auto score = record.find("score");
      if (score == record.end() || score->is_null()) {
        if (record.contains("error")) continue;
        throw Error(ErrorCode::kParse, "field 'score' is missing");
      }
      if (!score->is_number()) {
        throw Error(ErrorCode::kParse, "field 'score' must be a number");
      }
      if (!out.scores.emplace(id->get<std::string>(), score->get<double>())
               .second) {
        throw Error(ErrorCode::kParse,
                    "duplicate id '" + id->get<std::string>() + "'");
      }
    } catch (const json::exception& e) {
      out.errors.push_back({number, e.what()});
    } catch (const Error& e) {
      out.errors.push_back({number, e.what()});
    }
  }
  return out;
}

}  // namespace blanc::cli
