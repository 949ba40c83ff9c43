// core/src/common/error.cpp

// Copyright 2026  The Vocalid Authors

// See COPYING in the project root for clarification regarding multiple authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#include "vocalid/common/error.hpp"

namespace vocalid {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kFormat: return "format-error";
    case ErrorCode::kUnsupportedEncoding: return "unsupported-encoding";
    case ErrorCode::kEmptyAudio: return "empty-audio";
    case ErrorCode::kInvalidArgument: return "invalid-argument";
    case ErrorCode::kTooShort: return "too-short";
    case ErrorCode::kDegenerateFilterbank: return "degenerate-filterbank";
    case ErrorCode::kEmptyResult: return "empty-result";
    case ErrorCode::kShape: return "shape-error";
    case ErrorCode::kState: return "state-error";
    case ErrorCode::kCorruptArchive: return "corrupt-archive";
    case ErrorCode::kIncompatibleWeights: return "incompatible-weights";
    case ErrorCode::kCannotBalance: return "cannot-balance";
    case ErrorCode::kInvalidTask: return "invalid-task";
    case ErrorCode::kConfig: return "config-error";
    case ErrorCode::kUndefinedDistance: return "undefined-distance";
    case ErrorCode::kIncompatibleDb: return "incompatible-db";
    case ErrorCode::kNoReferences: return "no-references";
    case ErrorCode::kMissingEmbedding: return "missing-embedding";
    case ErrorCode::kDegenerateTrials: return "degenerate-trials";
    case ErrorCode::kNotComputable: return "not-computable";
    case ErrorCode::kIo: return "io-error";
  }
  return "unknown-error";
}

}  // namespace vocalid
