// core/src/audio/clip.cpp

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

#include "vocalid/audio/clip.hpp"

#include <cmath>

#include "vocalid/common/error.hpp"

namespace vocalid::audio {

void validate_clip(const AudioClip& clip) {
  if (clip.sample_rate_hz <= 0)
    throw Error(ErrorCode::kInvalidArgument,
                clip.source_id + ": sample rate must be positive");
  for (double x : clip.samples)
    if (!std::isfinite(x))
      throw Error(ErrorCode::kInvalidArgument,
                  clip.source_id + ": non-finite sample");
}

AudioClip crop(const AudioClip& clip, size_t begin, size_t len) {
  AudioClip out;
  out.sample_rate_hz = clip.sample_rate_hz;
  out.source_id = clip.source_id;
  if (begin >= clip.samples.size()) return out;
  size_t end = std::min(clip.samples.size(), begin + len);
  out.samples.assign(clip.samples.begin() + begin, clip.samples.begin() + end);
  return out;
}

double rms(const std::vector<double>& samples) {
  if (samples.empty()) return 0.0;
  double acc = 0.0;
  for (double x : samples) acc += x * x;
  return std::sqrt(acc / samples.size());
}

}  // namespace vocalid::audio
