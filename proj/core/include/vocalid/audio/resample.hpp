// core/include/vocalid/audio/resample.hpp

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

#ifndef VOCALID_AUDIO_RESAMPLE_HPP_
#define VOCALID_AUDIO_RESAMPLE_HPP_

#include "vocalid/audio/clip.hpp"

namespace vocalid::audio {

/// Band-limited rate conversion: windowed-sinc interpolation (Kaiser window,
/// beta = 12, 32 sinc zero-crossings per side), evaluated polyphase when the
/// rate ratio reduces to a small denominator.  Same-rate calls return the
/// input bit-identically.  Output length is round(len * target / source).
///
/// Errors: kInvalidArgument (target_hz == 0), kEmptyAudio (empty input).
AudioClip resample(const AudioClip& clip, int target_hz);

/// load_wav + resample to the 16 kHz pipeline rate.
AudioClip load_and_resample(const std::string& path,
                            int target_hz = kPipelineRateHz);

}  // namespace vocalid::audio

#endif  // VOCALID_AUDIO_RESAMPLE_HPP_
