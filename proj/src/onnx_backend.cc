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

#include "blanc/onnx_backend.h"

#include <dlfcn.h>

#include <algorithm>
#include <cstdlib>
#include <map>
#include <mutex>
#include <string_view>
#include <utility>

#include "blanc/error.h"
#include "ort_api.h"

#ifndef BLANC_DEFAULT_ORT_LIBRARY
#define BLANC_DEFAULT_ORT_LIBRARY ""
#endif

namespace blanc {
namespace {

// The runtime library and its process-wide environment. Loaded once and
// intentionally never unloaded.
struct Runtime {
  const OrtApi* api = nullptr;
  OrtEnv* env = nullptr;
};

const OrtApi* OpenLibrary(std::string& error) {
  std::vector<std::string> candidates;
  // An explicit override is the only candidate; otherwise fall back from the
  // build-time location to the dynamic loader's search path.
  if (const char* env = std::getenv("BLANC_ONNXRUNTIME_LIB"); env && *env) {
    candidates.emplace_back(env);
  } else {
    if (std::string_view(BLANC_DEFAULT_ORT_LIBRARY).size() > 0) {
      candidates.emplace_back(BLANC_DEFAULT_ORT_LIBRARY);
    }
    candidates.emplace_back("libonnxruntime.so.1");
    candidates.emplace_back("libonnxruntime.so");
  }
  for (const std::string& path : candidates) {
    void* handle = dlopen(path.c_str(), RTLD_NOW | RTLD_LOCAL);
    if (handle == nullptr) {
      error += std::string(dlerror()) + "; ";
      continue;
    }
    using GetApiBase = const OrtApiBase* (*)();
    auto get_base = reinterpret_cast<GetApiBase>(dlsym(handle, "OrtGetApiBase"));
    if (get_base == nullptr) {
      error += path + " lacks OrtGetApiBase; ";
      continue;
    }
    const OrtApi* api = get_base()->GetApi(ort::kApiVersion);
    if (api == nullptr) {
      error += path + " rejected API version; ";
      continue;
    }
    return api;
  }
  return nullptr;
}

void Check(const OrtApi* api, OrtStatus* status, const char* component) {
  if (status == nullptr) return;
  std::string message = api->GetErrorMessage(status);
  api->ReleaseStatus(status);
  throw ModelLoadError(component, message);
}

const Runtime& GetRuntime() {
  static std::once_flag once;
  static Runtime runtime;
  static std::string failure;
  std::call_once(once, [] {
    std::string error;
    runtime.api = OpenLibrary(error);
    if (runtime.api == nullptr) {
      failure = "cannot load ONNX Runtime: " + error;
      return;
    }
    OrtStatus* status = runtime.api->CreateEnv(ort::kLoggingLevelError, "blanc",
                                               &runtime.env);
    if (status != nullptr) {
      failure = runtime.api->GetErrorMessage(status);
      runtime.api->ReleaseStatus(status);
      runtime.api = nullptr;
    }
  });
  if (runtime.api == nullptr) throw ModelLoadError("runtime", failure);
  return runtime;
}

template <typename T, auto Release>
struct OrtDeleter {
  void operator()(T* p) const {
    if (p != nullptr) (GetRuntime().api->*Release)(p);
  }
};

using ValuePtr =
    std::unique_ptr<OrtValue, OrtDeleter<OrtValue, &OrtApi::ReleaseValue>>;

}  // namespace

struct OnnxBackend::Impl {
  Impl(Vocabulary v, const BackendOptions& o)
      : vocab(std::move(v)), options(o) {}
  ~Impl() {
    if (api == nullptr) return;
    if (session != nullptr) api->ReleaseSession(session);
    if (memory_info != nullptr) api->ReleaseMemoryInfo(memory_info);
  }

  // Runs one [batch, seq] block; returns logits [batch, seq, vocab].
  std::vector<float> Run(const std::vector<int64_t>& ids, int64_t batch,
                         int64_t seq) const;

  Vocabulary vocab;
  BackendOptions options;
  const OrtApi* api = nullptr;
  OrtSession* session = nullptr;
  OrtMemoryInfo* memory_info = nullptr;
  std::vector<std::string> input_names;
  std::string output_name;
};

std::vector<float> OnnxBackend::Impl::Run(const std::vector<int64_t>& ids,
                                          int64_t batch, int64_t seq) const {
  const int64_t shape[2] = {batch, seq};
  std::vector<int64_t> attention(ids.size(), 1);
  std::vector<int64_t> type_ids(ids.size(), 0);

  std::vector<ValuePtr> inputs;
  std::vector<const char*> names;
  for (const std::string& name : input_names) {
    const std::vector<int64_t>* data = &type_ids;
    if (name == "input_ids") data = &ids;
    if (name == "attention_mask") data = &attention;
    OrtValue* value = nullptr;
    Check(api,
          api->CreateTensorWithDataAsOrtValue(
              memory_info, const_cast<int64_t*>(data->data()),
              data->size() * sizeof(int64_t), shape, 2, ort::kElementInt64,
              &value),
          "model");
    inputs.emplace_back(value);
    names.push_back(name.c_str());
  }
  std::vector<const OrtValue*> raw_inputs;
  for (const ValuePtr& v : inputs) raw_inputs.push_back(v.get());

  const char* output_names[1] = {output_name.c_str()};
  OrtValue* output = nullptr;
  Check(api,
        api->Run(session, nullptr, names.data(), raw_inputs.data(),
                 raw_inputs.size(), output_names, 1, &output),
        "model");
  ValuePtr output_guard(output);

  OrtTensorTypeAndShapeInfo* info = nullptr;
  Check(api, api->GetTensorTypeAndShape(output, &info), "model");
  size_t rank = 0;
  std::vector<int64_t> dims;
  OrtStatus* status = api->GetDimensionsCount(info, &rank);
  if (status == nullptr) {
    dims.resize(rank);
    status = api->GetDimensions(info, dims.data(), rank);
  }
  api->ReleaseTensorTypeAndShapeInfo(info);
  Check(api, status, "model");
  if (rank != 3 || dims[0] != batch || dims[1] != seq ||
      dims[2] != vocab.size()) {
    throw ModelLoadError("model",
                         "logits shape does not match [batch, seq, vocab]");
  }
  void* data = nullptr;
  Check(api, api->GetTensorMutableData(output, &data), "model");
  const float* logits = static_cast<const float*>(data);
  return std::vector<float>(logits, logits + batch * seq * vocab.size());
}

OnnxBackend::OnnxBackend(std::unique_ptr<Impl> impl) : impl_(std::move(impl)) {}
OnnxBackend::OnnxBackend(OnnxBackend&&) noexcept = default;
OnnxBackend& OnnxBackend::operator=(OnnxBackend&&) noexcept = default;
OnnxBackend::~OnnxBackend() = default;

const Vocabulary& OnnxBackend::vocabulary() const { return impl_->vocab; }

OnnxBackend OnnxBackend::Load(const std::filesystem::path& bundle_dir,
                              const BackendOptions& options) {
  auto impl = std::make_unique<Impl>(
      Vocabulary::Load(bundle_dir / "vocab.txt",
                       bundle_dir / "tokenizer.json"),
      options);
  const std::filesystem::path model_path = bundle_dir / "model.onnx";
  if (!std::filesystem::exists(model_path)) {
    throw ModelLoadError("model", "missing " + model_path.string());
  }

  const Runtime& runtime = GetRuntime();
  const OrtApi* api = runtime.api;
  impl->api = api;

  OrtSessionOptions* session_options = nullptr;
  Check(api, api->CreateSessionOptions(&session_options), "runtime");
  std::unique_ptr<OrtSessionOptions,
                  OrtDeleter<OrtSessionOptions, &OrtApi::ReleaseSessionOptions>>
      options_guard(session_options);
  Check(api,
        api->SetSessionGraphOptimizationLevel(session_options,
                                              ort::kGraphOptimizationAll),
        "runtime");
  if (options.intra_op_threads > 0) {
    Check(api,
          api->SetIntraOpNumThreads(session_options, options.intra_op_threads),
          "runtime");
  }
  Check(api,
        api->CreateSession(runtime.env, model_path.c_str(), session_options,
                           &impl->session),
        "model");
  Check(api,
        api->CreateCpuMemoryInfo(ort::kArenaAllocator, ort::kMemTypeDefault,
                                 &impl->memory_info),
        "runtime");

  OrtAllocator* allocator = nullptr;
  Check(api, api->GetAllocatorWithDefaultOptions(&allocator), "runtime");
  auto take_name = [&](char* raw) {
    std::string name(raw);
    Check(api, api->AllocatorFree(allocator, raw), "runtime");
    return name;
  };
  size_t input_count = 0;
  Check(api, api->SessionGetInputCount(impl->session, &input_count), "model");
  for (size_t i = 0; i < input_count; ++i) {
    char* raw = nullptr;
    Check(api, api->SessionGetInputName(impl->session, i, allocator, &raw),
          "model");
    impl->input_names.push_back(take_name(raw));
  }
  for (const std::string& name : impl->input_names) {
    if (name != "input_ids" && name != "attention_mask" &&
        name != "token_type_ids") {
      throw ModelLoadError("model", "unsupported graph input '" + name + "'");
    }
  }
  if (std::find(impl->input_names.begin(), impl->input_names.end(),
                "input_ids") == impl->input_names.end()) {
    throw ModelLoadError("model", "graph has no input_ids input");
  }
  size_t output_count = 0;
  Check(api, api->SessionGetOutputCount(impl->session, &output_count), "model");
  if (output_count == 0) throw ModelLoadError("model", "graph has no outputs");
  char* raw = nullptr;
  Check(api, api->SessionGetOutputName(impl->session, 0, allocator, &raw),
        "model");
  impl->output_name = take_name(raw);

  // Probe once so shape mismatches surface at load time.
  const SpecialTokens& sp = impl->vocab.specials();
  impl->Run({sp.cls, sp.sep}, 1, 2);
  return OnnxBackend(std::move(impl));
}

std::vector<float> OnnxBackend::Logits(
    const std::vector<int32_t>& token_ids) const {
  MaskedInput probe{token_ids, {}, {}};
  CheckInput(probe);
  std::vector<int64_t> ids(token_ids.begin(), token_ids.end());
  return impl_->Run(ids, 1, static_cast<int64_t>(ids.size()));
}

std::vector<std::vector<PredictionOutcome>> OnnxBackend::Predict(
    std::span<const MaskedInput> inputs) const {
  std::vector<std::vector<PredictionOutcome>> out(inputs.size());
  std::map<std::size_t, std::vector<std::size_t>> by_length;
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    CheckInput(inputs[i]);
    if (inputs[i].masked_positions.empty()) continue;
    by_length[inputs[i].token_ids.size()].push_back(i);
  }

  const std::size_t chunk =
      static_cast<std::size_t>(std::max(1, impl_->options.batch_size));
  const std::size_t vocab = static_cast<std::size_t>(impl_->vocab.size());
  for (const auto& [seq, members] : by_length) {
    for (std::size_t first = 0; first < members.size(); first += chunk) {
      const std::size_t last = std::min(members.size(), first + chunk);
      std::vector<int64_t> ids;
      ids.reserve((last - first) * seq);
      for (std::size_t m = first; m < last; ++m) {
        const auto& tokens = inputs[members[m]].token_ids;
        ids.insert(ids.end(), tokens.begin(), tokens.end());
      }
      const std::vector<float> logits =
          impl_->Run(ids, static_cast<int64_t>(last - first),
                     static_cast<int64_t>(seq));
      for (std::size_t m = first; m < last; ++m) {
        const MaskedInput& input = inputs[members[m]];
        const float* row_base = logits.data() + (m - first) * seq * vocab;
        auto& outcomes = out[members[m]];
        for (std::size_t j = 0; j < input.masked_positions.size(); ++j) {
          std::span<const float> row(
              row_base + input.masked_positions[j] * vocab, vocab);
          outcomes.push_back(OutcomeFromLogits(row, input.gold_ids[j]));
        }
      }
    }
  }
  return out;
}

}  // namespace blanc
