// core/include/vocalid/common/error.hpp

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

#ifndef VOCALID_COMMON_ERROR_HPP_
#define VOCALID_COMMON_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace vocalid {

enum class ErrorCode {
  kFormat,                // malformed container / file structure
  kUnsupportedEncoding,   // valid container, codec we do not read
  kEmptyAudio,            // zero-length audio payload
  kInvalidArgument,
  kTooShort,              // clip shorter than one analysis window
  kDegenerateFilterbank,  // a mel filter with no FFT-bin support
  kEmptyResult,           // e.g. trimming removed everything
  kShape,                 // tensor shape mismatch
  kState,                 // API called out of order (backward before forward)
  kCorruptArchive,        // bad magic / checksum / truncation
  kIncompatibleWeights,   // archive does not match the target network
  kCannotBalance,         // a class required for balancing is empty
  kInvalidTask,           // e.g. fewer than two singers for the classifier
  kConfig,                // missing/invalid configuration (no val split, ...)
  kUndefinedDistance,     // cosine distance of a zero-norm vector
  kIncompatibleDb,        // profile db fingerprint does not match embedder
  kNoReferences,          // identification against an empty db
  kMissingEmbedding,      // trial construction hit a track without embedding
  kDegenerateTrials,      // single-class trial set
  kNotComputable,         // metric undefined for this subset
  kIo,
};

const char* error_code_name(ErrorCode code);

/// Exception carrying a machine-checkable code plus a human message.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& msg)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + msg),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace vocalid

#endif  // VOCALID_COMMON_ERROR_HPP_
