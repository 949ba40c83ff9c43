// core/include/vocalid/audio/clip.hpp

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

#ifndef VOCALID_AUDIO_CLIP_HPP_
#define VOCALID_AUDIO_CLIP_HPP_

#include <cstddef>
#include <string>
#include <vector>

namespace vocalid::audio {

constexpr int kPipelineRateHz = 16000;

/// Mono sample buffer; the unit of ingestion.  Amplitudes live in [-1, 1].
struct AudioClip {
  std::vector<double> samples;
  int sample_rate_hz = 0;
  std::string source_id;

  size_t size() const { return samples.size(); }
  bool empty() const { return samples.empty(); }
  double duration_s() const {
    return sample_rate_hz > 0
               ? static_cast<double>(samples.size()) / sample_rate_hz
               : 0.0;
  }
};

/// Throws kInvalidArgument on NaN/Inf samples or nonpositive rate.
void validate_clip(const AudioClip& clip);

/// Sub-range copy [begin, begin+len), clamped to the clip.
AudioClip crop(const AudioClip& clip, size_t begin, size_t len);

double rms(const std::vector<double>& samples);

}  // namespace vocalid::audio

#endif  // VOCALID_AUDIO_CLIP_HPP_
