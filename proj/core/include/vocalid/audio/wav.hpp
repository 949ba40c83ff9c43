// core/include/vocalid/audio/wav.hpp

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

#ifndef VOCALID_AUDIO_WAV_HPP_
#define VOCALID_AUDIO_WAV_HPP_

#include <string>

#include "vocalid/audio/clip.hpp"

namespace vocalid::audio {

/// Reads a RIFF/WAVE file: PCM16 or IEEE float32, little-endian, 1 or 2
/// channels (WAVE_FORMAT_EXTENSIBLE wrapping either is accepted).  Stereo is
/// downmixed to mono by channel mean; PCM16 is scaled by 1/32768.  The
/// original sample rate is preserved.
///
/// Errors: kFormat (malformed container), kUnsupportedEncoding (other
/// codecs/bit depths/channel counts), kEmptyAudio (zero-length data chunk).
AudioClip load_wav(const std::string& path);

/// Parses WAV bytes already in memory; load_wav is this plus file reading.
AudioClip parse_wav(const std::vector<uint8_t>& bytes,
                    const std::string& source_id);

/// Writes mono PCM16.  Samples are clamped to [-1, 1] and scaled by 32768
/// (so -1.0 maps to -32768 and 32767/32768 maps to 32767).
void write_wav_pcm16(const std::string& path, const AudioClip& clip);

std::vector<uint8_t> encode_wav_pcm16(const AudioClip& clip);

}  // namespace vocalid::audio

#endif  // VOCALID_AUDIO_WAV_HPP_
