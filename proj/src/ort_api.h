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

#ifndef BLANC_SRC_ORT_API_H_
#define BLANC_SRC_ORT_API_H_

// The subset of the ONNX Runtime C API this project calls. OrtApi is an
// append-only table of function pointers, so only the leading entries up to
// ReleaseSessionOptions are declared; unused slots are typed as void*.

#include <cstddef>
#include <cstdint>

extern "C" {

struct OrtStatus;
struct OrtEnv;
struct OrtSession;
struct OrtSessionOptions;
struct OrtRunOptions;
struct OrtMemoryInfo;
struct OrtValue;
struct OrtAllocator;
struct OrtTensorTypeAndShapeInfo;

struct OrtApi {
  void* CreateStatus;  // 0
  void* GetErrorCode;  // 1
  const char* (*GetErrorMessage)(const OrtStatus* status);  // 2
  OrtStatus* (*CreateEnv)(int logging_level, const char* log_id, OrtEnv** out);  // 3
  void* CreateEnvWithCustomLogger;  // 4
  void* EnableTelemetryEvents;  // 5
  void* DisableTelemetryEvents;  // 6
  OrtStatus* (*CreateSession)(const OrtEnv* env, const char* model_path, const OrtSessionOptions* options, OrtSession** out);  // 7
  void* CreateSessionFromArray;  // 8
  OrtStatus* (*Run)(OrtSession* session, const OrtRunOptions* run_options, const char* const* input_names, const OrtValue* const* inputs, size_t input_count, const char* const* output_names, size_t output_count, OrtValue** outputs);  // 9
  OrtStatus* (*CreateSessionOptions)(OrtSessionOptions** out);  // 10
  void* SetOptimizedModelFilePath;  // 11
  void* CloneSessionOptions;  // 12
  void* SetSessionExecutionMode;  // 13
  void* EnableProfiling;  // 14
  void* DisableProfiling;  // 15
  void* EnableMemPattern;  // 16
  void* DisableMemPattern;  // 17
  void* EnableCpuMemArena;  // 18
  void* DisableCpuMemArena;  // 19
  void* SetSessionLogId;  // 20
  void* SetSessionLogVerbosityLevel;  // 21
  void* SetSessionLogSeverityLevel;  // 22
  OrtStatus* (*SetSessionGraphOptimizationLevel)(OrtSessionOptions* options, int level);  // 23
  OrtStatus* (*SetIntraOpNumThreads)(OrtSessionOptions* options, int threads);  // 24
  void* SetInterOpNumThreads;  // 25
  void* CreateCustomOpDomain;  // 26
  void* CustomOpDomain_Add;  // 27
  void* AddCustomOpDomain;  // 28
  void* RegisterCustomOpsLibrary;  // 29
  OrtStatus* (*SessionGetInputCount)(const OrtSession* session, size_t* out);  // 30
  OrtStatus* (*SessionGetOutputCount)(const OrtSession* session, size_t* out);  // 31
  void* SessionGetOverridableInitializerCount;  // 32
  void* SessionGetInputTypeInfo;  // 33
  void* SessionGetOutputTypeInfo;  // 34
  void* SessionGetOverridableInitializerTypeInfo;  // 35
  OrtStatus* (*SessionGetInputName)(const OrtSession* session, size_t index, OrtAllocator* allocator, char** out);  // 36
  OrtStatus* (*SessionGetOutputName)(const OrtSession* session, size_t index, OrtAllocator* allocator, char** out);  // 37
  void* SessionGetOverridableInitializerName;  // 38
  void* CreateRunOptions;  // 39
  void* RunOptionsSetRunLogVerbosityLevel;  // 40
  void* RunOptionsSetRunLogSeverityLevel;  // 41
  void* RunOptionsSetRunTag;  // 42
  void* RunOptionsGetRunLogVerbosityLevel;  // 43
  void* RunOptionsGetRunLogSeverityLevel;  // 44
  void* RunOptionsGetRunTag;  // 45
  void* RunOptionsSetTerminate;  // 46
  void* RunOptionsUnsetTerminate;  // 47
  void* CreateTensorAsOrtValue;  // 48
  OrtStatus* (*CreateTensorWithDataAsOrtValue)(const OrtMemoryInfo* info, void* data, size_t data_bytes, const int64_t* shape, size_t shape_len, int element_type, OrtValue** out);  // 49
  void* IsTensor;  // 50
  OrtStatus* (*GetTensorMutableData)(OrtValue* value, void** out);  // 51
  void* FillStringTensor;  // 52
  void* GetStringTensorDataLength;  // 53
  void* GetStringTensorContent;  // 54
  void* CastTypeInfoToTensorInfo;  // 55
  void* GetOnnxTypeFromTypeInfo;  // 56
  void* CreateTensorTypeAndShapeInfo;  // 57
  void* SetTensorElementType;  // 58
  void* SetDimensions;  // 59
  void* GetTensorElementType;  // 60
  OrtStatus* (*GetDimensionsCount)(const OrtTensorTypeAndShapeInfo* info, size_t* out);  // 61
  OrtStatus* (*GetDimensions)(const OrtTensorTypeAndShapeInfo* info, int64_t* dims, size_t dims_len);  // 62
  void* GetSymbolicDimensions;  // 63
  void* GetTensorShapeElementCount;  // 64
  OrtStatus* (*GetTensorTypeAndShape)(const OrtValue* value, OrtTensorTypeAndShapeInfo** out);  // 65
  void* GetTypeInfo;  // 66
  void* GetValueType;  // 67
  void* CreateMemoryInfo;  // 68
  OrtStatus* (*CreateCpuMemoryInfo)(int allocator_type, int mem_type, OrtMemoryInfo** out);  // 69
  void* CompareMemoryInfo;  // 70
  void* MemoryInfoGetName;  // 71
  void* MemoryInfoGetId;  // 72
  void* MemoryInfoGetMemType;  // 73
  void* MemoryInfoGetType;  // 74
  void* AllocatorAlloc;  // 75
  OrtStatus* (*AllocatorFree)(OrtAllocator* allocator, void* p);  // 76
  void* AllocatorGetInfo;  // 77
  OrtStatus* (*GetAllocatorWithDefaultOptions)(OrtAllocator** out);  // 78
  void* AddFreeDimensionOverride;  // 79
  void* GetValue;  // 80
  void* GetValueCount;  // 81
  void* CreateValue;  // 82
  void* CreateOpaqueValue;  // 83
  void* GetOpaqueValue;  // 84
  void* KernelInfoGetAttribute_float;  // 85
  void* KernelInfoGetAttribute_int64;  // 86
  void* KernelInfoGetAttribute_string;  // 87
  void* KernelContext_GetInputCount;  // 88
  void* KernelContext_GetOutputCount;  // 89
  void* KernelContext_GetInput;  // 90
  void* KernelContext_GetOutput;  // 91
  void (*ReleaseEnv)(OrtEnv*);  // 92
  void (*ReleaseStatus)(OrtStatus*);  // 93
  void (*ReleaseMemoryInfo)(OrtMemoryInfo*);  // 94
  void (*ReleaseSession)(OrtSession*);  // 95
  void (*ReleaseValue)(OrtValue*);  // 96
  void* ReleaseRunOptions;  // 97
  void* ReleaseTypeInfo;  // 98
  void (*ReleaseTensorTypeAndShapeInfo)(OrtTensorTypeAndShapeInfo*);  // 99
  void (*ReleaseSessionOptions)(OrtSessionOptions*);  // 100
};

struct OrtApiBase {
  const OrtApi* (*GetApi)(uint32_t version);
  const char* (*GetVersionString)();
};

}  // extern "C"

namespace blanc::ort {

// Table version whose layout matches OrtApi above.
inline constexpr uint32_t kApiVersion = 8;

inline constexpr int kLoggingLevelError = 3;
inline constexpr int kGraphOptimizationAll = 99;
inline constexpr int kArenaAllocator = 1;
inline constexpr int kMemTypeDefault = 0;
inline constexpr int kElementFloat = 1;
inline constexpr int kElementInt64 = 7;

}  // namespace blanc::ort

#endif  // BLANC_SRC_ORT_API_H_
