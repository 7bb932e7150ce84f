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

// Python bindings for the scoring core.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "blanc/analysis.h"
#include "blanc/backend.h"
#include "blanc/cli.h"
#include "blanc/correlation.h"
#include "blanc/entities.h"
#include "blanc/error.h"
#include "blanc/scoring.h"
#include "blanc/sentence_splitter.h"
#include "blanc/tokenizer.h"

namespace py = pybind11;

namespace blanc {
namespace {

// Owns a backend; Python sees it as blanc.Model.
struct Model {
  std::shared_ptr<const MaskedLanguageModel> impl;
};

ScoreVariant VariantOrThrow(const std::string& name) {
  const auto variant = ParseVariant(name);
  if (!variant) {
    throw Error(ErrorCode::kInvalidArgument, "unknown variant '" + name + "'");
  }
  return *variant;
}

MaskingPolicy Policy(int gap, int mask_width, int min_word_len) {
  MaskingPolicy policy;
  policy.gap = gap;
  policy.mask_width = mask_width;
  policy.min_word_len = min_word_len;
  policy.Validate();
  return policy;
}

py::dict ResultDict(const BlancResult& r) {
  py::dict d;
  d["variant"] = std::string(VariantName(r.variant));
  d["score"] = r.score;
  d["n_help"] = r.n_help;
  d["n_base"] = r.n_base;
  d["n_total"] = r.n_total;
  return d;
}

py::tuple CorrelationTuple(const CorrelationResult& r) {
  return py::make_tuple(r.coefficient, r.p_value);
}

}  // namespace
}  // namespace blanc

PYBIND11_MODULE(_core, m) {
  using namespace blanc;
  m.doc() = "BLANC summary-quality scoring";

  // Kept alive by the module attribute for the interpreter's lifetime.
  static py::handle error_type = py::exception<Error>(m, "BlancError").release();
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object exc = error_type(e.what());
      exc.attr("code") = std::string(ErrorCodeName(e.code()));
      py::set_error(error_type, exc);
    }
  });

  py::class_<Model>(m, "Model")
      .def_property_readonly("vocab_size",
                             [](const Model& model) {
                               return model.impl->vocabulary().size();
                             })
      .def("tokenize", [](const Model& model, const std::string& text) {
        const WordPieceTokenizer tokenizer(model.impl->vocabulary());
        std::vector<std::string> pieces;
        for (const Token& t : tokenizer.Tokenize(text)) {
          pieces.push_back(model.impl->vocabulary().Piece(t.vocab_id));
        }
        return pieces;
      }, py::arg("text"), "Word pieces of `text` as vocabulary strings.");

  m.def(
      "load_backend",
      [](const std::string& spec, int batch_size, double copy_boost) {
        BackendOptions options;
        options.batch_size = batch_size;
        options.copy_boost = copy_boost;
        return Model{LoadBackend(spec, options)};
      },
      py::arg("spec") = "reference", py::arg("batch_size") = 8,
      py::arg("copy_boost") = BackendOptions{}.copy_boost,
      "Opens a model bundle directory, or the built-in reference backend.");

  m.def(
      "score_pair",
      [](const Model& model, const std::string& document,
         const std::string& summary, int gap, const std::string& variant,
         int mask_width, int min_word_len) {
        const MaskingPolicy policy = Policy(gap, mask_width, min_word_len);
        BlancResult r;
        {
          py::gil_scoped_release release;
          r = ScorePair(document, summary, policy, VariantOrThrow(variant),
                        *model.impl);
        }
        return ResultDict(r);
      },
      py::arg("model"), py::arg("document"), py::arg("summary"),
      py::arg("gap") = 6, py::arg("variant") = "accuracy",
      py::arg("mask_width") = 1, py::arg("min_word_len") = 4);

  m.def(
      "score_batch",
      [](const Model& model, const std::vector<std::tuple<std::string, std::string,
                                                          std::string>>& triples,
         int gap, const std::string& variant, int mask_width, int min_word_len,
         int parallelism) {
        const MaskingPolicy policy = Policy(gap, mask_width, min_word_len);
        const ScoreVariant v = VariantOrThrow(variant);
        std::vector<PairRecord> pairs;
        for (const auto& [id, document, summary] : triples) {
          pairs.push_back({id, document, summary});
        }
        std::vector<BatchItem> items;
        {
          py::gil_scoped_release release;
          items = ScoreBatch(pairs, policy, v, *model.impl, parallelism);
        }
        py::list out;
        for (const BatchItem& item : items) {
          py::dict d = item.result ? ResultDict(*item.result) : py::dict();
          d["id"] = item.id;
          if (item.error) {
            d["error"] = std::string(ErrorCodeName(item.error->code()));
            d["message"] = std::string(item.error->what());
          }
          out.append(d);
        }
        return out;
      },
      py::arg("model"), py::arg("pairs"), py::arg("gap") = 6,
      py::arg("variant") = "accuracy", py::arg("mask_width") = 1,
      py::arg("min_word_len") = 4, py::arg("parallelism") = 1,
      "Scores (id, document, summary) triples; failures are reported per pair.");

  m.def("pearson", [](const std::vector<double>& x, const std::vector<double>& y) {
    return CorrelationTuple(Pearson(x, y));
  }, py::arg("x"), py::arg("y"), "(coefficient, two-sided p-value)");
  m.def("spearman", [](const std::vector<double>& x, const std::vector<double>& y) {
    return CorrelationTuple(Spearman(x, y));
  }, py::arg("x"), py::arg("y"), "(coefficient, two-sided p-value)");

  m.def("enumerate_splits", [](int n, int k) {
    std::vector<std::pair<std::vector<int>, std::vector<int>>> out;
    for (const Split& s : EnumerateSplits(n, k)) out.emplace_back(s.small, s.large);
    return out;
  }, py::arg("n"), py::arg("k"));

  m.def("split_sentences", [](const std::string& document) {
    std::vector<std::string> out;
    for (const SentenceSpan& s : SplitSentences(document)) out.push_back(s.text);
    return out;
  }, py::arg("document"));

  m.def("extract_entities", [](const std::string& text) {
    std::vector<py::tuple> out;
    for (const EntityMention& e : ExtractEntities(text)) {
      out.push_back(py::make_tuple(e.text, std::string(EntityKindName(e.kind)),
                                   e.begin, e.end));
    }
    return out;
  }, py::arg("text"), "(text, kind, begin, end) tuples in text order.");

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::vector<std::string> full = {"blanc"};
    full.insert(full.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& a : full) argv.push_back(a.c_str());
    std::ostringstream out;
    std::ostringstream err;
    int code = 0;
    {
      py::gil_scoped_release release;
      code = RunCli(static_cast<int>(argv.size()), argv.data(), out, err);
    }
    return py::make_tuple(code, out.str(), err.str());
  }, py::arg("args"), "Runs the command-line tool; returns (code, stdout, stderr).");
}
