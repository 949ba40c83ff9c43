// tests/test_wav.cpp

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

#include <doctest.h>

#include <cstring>

#include "support/test_util.hpp"
#include "vocalid/audio/wav.hpp"
#include "vocalid/common/error.hpp"
#include "vocalid/common/io.hpp"

using namespace vocalid;
using namespace vocalid::audio;

namespace {

void push_tag(std::vector<uint8_t>* b, const char* s) {
  b->insert(b->end(), s, s + 4);
}

// Hand-assembled RIFF container for arbitrary fmt/data payloads.
std::vector<uint8_t> build_wav(uint16_t format, uint16_t channels,
                               uint32_t rate, uint16_t bits,
                               const std::vector<uint8_t>& payload) {
  std::vector<uint8_t> b;
  push_tag(&b, "RIFF");
  append_u32le(&b, uint32_t(36 + payload.size()));
  push_tag(&b, "WAVE");
  push_tag(&b, "fmt ");
  append_u32le(&b, 16);
  b.push_back(uint8_t(format)); b.push_back(uint8_t(format >> 8));
  b.push_back(uint8_t(channels)); b.push_back(uint8_t(channels >> 8));
  append_u32le(&b, rate);
  uint32_t block = channels * bits / 8;
  append_u32le(&b, rate * block);
  b.push_back(uint8_t(block)); b.push_back(uint8_t(block >> 8));
  b.push_back(uint8_t(bits)); b.push_back(uint8_t(bits >> 8));
  push_tag(&b, "data");
  append_u32le(&b, uint32_t(payload.size()));
  b.insert(b.end(), payload.begin(), payload.end());
  return b;
}

std::vector<uint8_t> pcm16_payload(const std::vector<int16_t>& v) {
  std::vector<uint8_t> p;
  for (int16_t s : v) {
    p.push_back(uint8_t(uint16_t(s) & 0xFF));
    p.push_back(uint8_t(uint16_t(s) >> 8));
  }
  return p;
}

}  // namespace

TEST_CASE("stereo PCM16 with opposite channels downmixes to zero") {
  // [+0.5, -0.5] everywhere.
  std::vector<int16_t> interleaved;
  for (int i = 0; i < 100; ++i) {
    interleaved.push_back(16384);
    interleaved.push_back(-16384);
  }
  auto bytes = build_wav(1, 2, 16000, 16, pcm16_payload(interleaved));
  AudioClip clip = parse_wav(bytes, "mem");
  REQUIRE(clip.samples.size() == 100);
  for (double x : clip.samples) CHECK(x == 0.0);
}

TEST_CASE("PCM16 full-scale sample maps to 32767/32768") {
  auto bytes = build_wav(1, 1, 16000, 16, pcm16_payload({32767, -32768}));
  AudioClip clip = parse_wav(bytes, "mem");
  CHECK(clip.samples[0] == doctest::Approx(32767.0 / 32768.0).epsilon(1e-12));
  CHECK(clip.samples[1] == -1.0);
}

TEST_CASE("original sample rate is preserved") {
  std::vector<int16_t> v(44100, 1000);
  auto bytes = build_wav(1, 1, 44100, 16, pcm16_payload(v));
  AudioClip clip = parse_wav(bytes, "mem");
  CHECK(clip.sample_rate_hz == 44100);
  CHECK(clip.samples.size() == 44100);
}

TEST_CASE("float32 samples are read and clamped") {
  std::vector<uint8_t> payload;
  for (float f : {0.25f, -0.5f, 1.5f}) append_f32le(&payload, f);
  auto bytes = build_wav(3, 1, 8000, 32, payload);
  AudioClip clip = parse_wav(bytes, "mem");
  CHECK(clip.samples[0] == doctest::Approx(0.25));
  CHECK(clip.samples[1] == doctest::Approx(-0.5));
  CHECK(clip.samples[2] == 1.0);  // clamped
}

TEST_CASE("extensible header wrapping PCM16 is accepted") {
  // 40-byte fmt chunk with the format tag in the subformat GUID.
  std::vector<uint8_t> b;
  push_tag(&b, "RIFF");
  append_u32le(&b, 0);  // patched below
  push_tag(&b, "WAVE");
  push_tag(&b, "fmt ");
  append_u32le(&b, 40);
  uint16_t ext = 0xFFFE;
  b.push_back(uint8_t(ext)); b.push_back(uint8_t(ext >> 8));
  b.push_back(1); b.push_back(0);        // mono
  append_u32le(&b, 16000);
  append_u32le(&b, 32000);
  b.push_back(2); b.push_back(0);
  b.push_back(16); b.push_back(0);
  b.push_back(22); b.push_back(0);       // cbSize
  b.push_back(16); b.push_back(0);       // valid bits
  append_u32le(&b, 0x4);                  // channel mask
  b.push_back(1); b.push_back(0);        // subformat: PCM
  for (int i = 0; i < 14; ++i) b.push_back(0);
  push_tag(&b, "data");
  append_u32le(&b, 4);
  auto payload = pcm16_payload({100, -100});
  b.insert(b.end(), payload.begin(), payload.end());
  b[4] = uint8_t(b.size() - 8);
  AudioClip clip = parse_wav(b, "mem");
  CHECK(clip.samples.size() == 2);
}

TEST_CASE("chunks before data are skipped with word alignment") {
  auto bytes = build_wav(1, 1, 16000, 16, pcm16_payload({7}));
  // Splice an odd-sized junk chunk between WAVE and fmt.
  std::vector<uint8_t> junk;
  push_tag(&junk, "LIST");
  append_u32le(&junk, 3);
  junk.push_back('a'); junk.push_back('b'); junk.push_back('c');
  junk.push_back(0);  // pad byte
  bytes.insert(bytes.begin() + 12, junk.begin(), junk.end());
  AudioClip clip = parse_wav(bytes, "mem");
  CHECK(clip.samples.size() == 1);
}

TEST_CASE("malformed and unsupported files raise typed errors") {
  auto ok = build_wav(1, 1, 16000, 16, pcm16_payload({1, 2, 3}));

  SUBCASE("not RIFF") {
    auto bad = ok;
    bad[0] = 'X';
    CHECK_THROWS_WITH_AS(parse_wav(bad, "mem"), doctest::Contains("RIFF"),
                         Error);
    try { parse_wav(bad, "mem"); } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::kFormat);
    }
  }
  SUBCASE("chunk overruns file") {
    auto bad = ok;
    bad.resize(bad.size() - 2);  // data chunk now short
    try { parse_wav(bad, "mem"); FAIL("no throw"); } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::kFormat);
    }
  }
  SUBCASE("ADPCM codec") {
    auto bad = build_wav(2, 1, 16000, 16, pcm16_payload({0}));
    try { parse_wav(bad, "mem"); FAIL("no throw"); } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::kUnsupportedEncoding);
    }
  }
  SUBCASE("PCM 8-bit") {
    auto bad = build_wav(1, 1, 16000, 8, {1, 2});
    try { parse_wav(bad, "mem"); FAIL("no throw"); } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::kUnsupportedEncoding);
    }
  }
  SUBCASE("three channels") {
    std::vector<uint8_t> p = pcm16_payload({0, 0, 0});
    auto bad = build_wav(1, 3, 16000, 16, p);
    try { parse_wav(bad, "mem"); FAIL("no throw"); } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::kUnsupportedEncoding);
    }
  }
  SUBCASE("empty data chunk") {
    auto bad = build_wav(1, 1, 16000, 16, {});
    try { parse_wav(bad, "mem"); FAIL("no throw"); } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::kEmptyAudio);
    }
  }
  SUBCASE("missing file") {
    try { load_wav("/nonexistent/x.wav"); FAIL("no throw"); }
    catch (const Error& e) { CHECK(e.code() == ErrorCode::kIo); }
  }
}

TEST_CASE("write/read round trip within one quantization step") {
  testing::TempDir tmp;
  auto clip = testing::make_noise(0.05, 16000, 0.8, 42);
  std::string path = tmp.file("rt.wav");
  write_wav_pcm16(path, clip);
  AudioClip back = load_wav(path);
  REQUIRE(back.samples.size() == clip.samples.size());
  CHECK(back.sample_rate_hz == 16000);
  for (size_t i = 0; i < clip.samples.size(); ++i)
    CHECK(std::abs(back.samples[i] - clip.samples[i]) <= 1.0 / 32768.0);
}
