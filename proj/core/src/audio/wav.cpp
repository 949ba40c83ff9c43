// core/src/audio/wav.cpp

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

#include "vocalid/audio/wav.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>

#include "vocalid/common/error.hpp"
#include "vocalid/common/io.hpp"

namespace vocalid::audio {

namespace {

constexpr uint16_t kFormatPcm = 0x0001;
constexpr uint16_t kFormatIeeeFloat = 0x0003;
constexpr uint16_t kFormatExtensible = 0xFFFE;

struct FmtChunk {
  uint16_t format = 0;
  uint16_t channels = 0;
  uint32_t sample_rate = 0;
  uint16_t block_align = 0;
  uint16_t bits = 0;
};

uint16_t read_u16le(const uint8_t* p) {
  return uint16_t(p[0]) | uint16_t(p[1]) << 8;
}

uint32_t read_u32le(const uint8_t* p) {
  return uint32_t(p[0]) | uint32_t(p[1]) << 8 | uint32_t(p[2]) << 16 |
         uint32_t(p[3]) << 24;
}

FmtChunk parse_fmt(const uint8_t* p, uint32_t size, const std::string& id) {
  if (size < 16)
    throw Error(ErrorCode::kFormat, id + ": fmt chunk too small");
  FmtChunk fmt;
  fmt.format = read_u16le(p);
  fmt.channels = read_u16le(p + 2);
  fmt.sample_rate = read_u32le(p + 4);
  fmt.block_align = read_u16le(p + 12);
  fmt.bits = read_u16le(p + 14);
  if (fmt.format == kFormatExtensible) {
    // cbSize(2) + valid bits(2) + channel mask(4) + subformat GUID; the
    // first two GUID bytes carry the wrapped format tag.
    if (size < 26)
      throw Error(ErrorCode::kFormat, id + ": extensible fmt truncated");
    fmt.format = read_u16le(p + 24);
  }
  return fmt;
}

}  // namespace

AudioClip parse_wav(const std::vector<uint8_t>& bytes,
                    const std::string& source_id) {
  if (bytes.size() < 12 || std::memcmp(bytes.data(), "RIFF", 4) != 0 ||
      std::memcmp(bytes.data() + 8, "WAVE", 4) != 0)
    throw Error(ErrorCode::kFormat, source_id + ": not a RIFF/WAVE file");

  bool have_fmt = false, have_data = false;
  FmtChunk fmt;
  const uint8_t* data_ptr = nullptr;
  uint32_t data_size = 0;

  size_t pos = 12;
  while (pos + 8 <= bytes.size()) {
    char cid[5] = {0};
    std::memcpy(cid, bytes.data() + pos, 4);
    uint32_t csize = read_u32le(bytes.data() + pos + 4);
    pos += 8;
    if (pos + csize > bytes.size())
      throw Error(ErrorCode::kFormat,
                  source_id + ": chunk '" + cid + "' exceeds file size");
    if (std::strcmp(cid, "fmt ") == 0) {
      fmt = parse_fmt(bytes.data() + pos, csize, source_id);
      have_fmt = true;
    } else if (std::strcmp(cid, "data") == 0) {
      data_ptr = bytes.data() + pos;
      data_size = csize;
      have_data = true;
      // First data chunk wins; ignore anything after it.
      break;
    }
    pos += csize + (csize & 1);  // chunks are word-aligned
  }

  if (!have_fmt)
    throw Error(ErrorCode::kFormat, source_id + ": missing fmt chunk");
  if (!have_data)
    throw Error(ErrorCode::kFormat, source_id + ": missing data chunk");

  if (fmt.format != kFormatPcm && fmt.format != kFormatIeeeFloat)
    throw Error(ErrorCode::kUnsupportedEncoding,
                source_id + ": format tag " + std::to_string(fmt.format));
  if (fmt.format == kFormatPcm && fmt.bits != 16)
    throw Error(ErrorCode::kUnsupportedEncoding,
                source_id + ": PCM with " + std::to_string(fmt.bits) +
                    " bits (only 16 supported)");
  if (fmt.format == kFormatIeeeFloat && fmt.bits != 32)
    throw Error(ErrorCode::kUnsupportedEncoding,
                source_id + ": float with " + std::to_string(fmt.bits) +
                    " bits (only 32 supported)");
  if (fmt.channels < 1 || fmt.channels > 2)
    throw Error(ErrorCode::kUnsupportedEncoding,
                source_id + ": " + std::to_string(fmt.channels) + " channels");
  if (fmt.sample_rate == 0)
    throw Error(ErrorCode::kFormat, source_id + ": zero sample rate");

  uint32_t bytes_per_sample = fmt.bits / 8;
  uint32_t frame_size = bytes_per_sample * fmt.channels;
  if (fmt.block_align != 0 && fmt.block_align != frame_size)
    throw Error(ErrorCode::kFormat, source_id + ": inconsistent block align");
  if (data_size == 0)
    throw Error(ErrorCode::kEmptyAudio, source_id + ": empty data chunk");
  if (data_size % frame_size != 0)
    throw Error(ErrorCode::kFormat,
                source_id + ": data size not a multiple of the frame size");

  size_t n_frames = data_size / frame_size;
  AudioClip clip;
  clip.sample_rate_hz = static_cast<int>(fmt.sample_rate);
  clip.source_id = source_id;
  clip.samples.resize(n_frames);

  const double inv = 1.0 / 32768.0;
  for (size_t i = 0; i < n_frames; ++i) {
    double acc = 0.0;
    for (uint32_t ch = 0; ch < fmt.channels; ++ch) {
      const uint8_t* p = data_ptr + (i * fmt.channels + ch) * bytes_per_sample;
      if (fmt.format == kFormatPcm) {
        int16_t v = static_cast<int16_t>(read_u16le(p));
        acc += v * inv;
      } else {
        uint32_t bits = read_u32le(p);
        float v;
        std::memcpy(&v, &bits, 4);
        if (!std::isfinite(v))
          throw Error(ErrorCode::kFormat,
                      source_id + ": non-finite float sample");
        acc += std::clamp(static_cast<double>(v), -1.0, 1.0);
      }
    }
    clip.samples[i] = acc / fmt.channels;
  }
  return clip;
}

AudioClip load_wav(const std::string& path) {
  return parse_wav(read_binary_file(path), path);
}

std::vector<uint8_t> encode_wav_pcm16(const AudioClip& clip) {
  if (clip.sample_rate_hz <= 0)
    throw Error(ErrorCode::kInvalidArgument, "clip has no sample rate");
  const uint32_t n = static_cast<uint32_t>(clip.samples.size());
  const uint32_t data_size = n * 2;
  std::vector<uint8_t> out;
  out.reserve(44 + data_size);
  auto tag = [&out](const char* s) {
    out.insert(out.end(), s, s + 4);
  };
  tag("RIFF");
  append_u32le(&out, 36 + data_size);
  tag("WAVE");
  tag("fmt ");
  append_u32le(&out, 16);
  out.push_back(1); out.push_back(0);  // PCM
  out.push_back(1); out.push_back(0);  // mono
  append_u32le(&out, static_cast<uint32_t>(clip.sample_rate_hz));
  append_u32le(&out, static_cast<uint32_t>(clip.sample_rate_hz) * 2);
  out.push_back(2); out.push_back(0);  // block align
  out.push_back(16); out.push_back(0); // bits
  tag("data");
  append_u32le(&out, data_size);
  for (double x : clip.samples) {
    double scaled = std::clamp(x, -1.0, 1.0) * 32768.0;
    long v = std::lround(scaled);
    v = std::clamp(v, -32768L, 32767L);
    uint16_t u = static_cast<uint16_t>(static_cast<int16_t>(v));
    out.push_back(uint8_t(u & 0xFF));
    out.push_back(uint8_t(u >> 8));
  }
  return out;
}

void write_wav_pcm16(const std::string& path, const AudioClip& clip) {
  write_file_atomic(path, encode_wav_pcm16(clip));
}

}  // namespace vocalid::audio
