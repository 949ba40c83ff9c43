// tests/test_resample.cpp

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

#include "support/test_util.hpp"
#include "vocalid/audio/resample.hpp"
#include "vocalid/common/error.hpp"

using namespace vocalid;
using namespace vocalid::audio;

TEST_CASE("same-rate resample is bit-identical") {
  auto clip = testing::make_noise(0.25, 16000, 0.7, 7);
  AudioClip out = resample(clip, 16000);
  REQUIRE(out.samples.size() == clip.samples.size());
  for (size_t i = 0; i < out.samples.size(); ++i)
    CHECK(out.samples[i] == clip.samples[i]);
}

TEST_CASE("1 kHz sine survives 48k -> 16k within one DFT bin") {
  auto clip = testing::make_tone(1000.0, 1.0, 48000, 0.5);
  AudioClip out = resample(clip, 16000);
  CHECK(std::abs(int64_t(out.samples.size()) - 16000) <= 1);
  // Interior slice; 4096-point oracle gives ~3.9 Hz bins.
  double peak = testing::peak_frequency_hz(out.samples, 16000, 4096, 4096);
  CHECK(std::abs(peak - 1000.0) <= 16000.0 / 4096.0);
}

TEST_CASE("DC level is preserved away from the edges") {
  AudioClip clip;
  clip.sample_rate_hz = 44100;
  clip.samples.assign(44100, 0.7);
  AudioClip out = resample(clip, 16000);
  REQUIRE(out.samples.size() > 1000);
  for (size_t i = 300; i + 300 < out.samples.size(); ++i)
    CHECK(std::abs(out.samples[i] - 0.7) < 1e-3);
}

TEST_CASE("output length matches round(len * target / source) within one") {
  for (auto [src, dst, len] :
       {std::tuple{44100, 16000, 10000}, {48000, 16000, 4801},
        {22050, 16000, 12345}, {8000, 16000, 999}, {16000, 22050, 16000}}) {
    auto clip = testing::make_noise(0.0, src, 0.1, 1);
    clip.samples.assign(size_t(len), 0.1);
    AudioClip out = resample(clip, dst);
    int64_t expect = std::llround(double(len) * dst / src);
    CHECK(std::abs(int64_t(out.samples.size()) - expect) <= 1);
    CHECK(out.sample_rate_hz == dst);
  }
}

TEST_CASE("resample argument errors") {
  auto clip = testing::make_tone(440, 0.1, 16000);
  try {
    resample(clip, 0);
    FAIL("no throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kInvalidArgument);
  }
  AudioClip empty;
  empty.sample_rate_hz = 16000;
  try {
    resample(empty, 8000);
    FAIL("no throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kEmptyAudio);
  }
}

TEST_CASE("upsampling preserves a mid-band tone") {
  auto clip = testing::make_tone(440.0, 0.5, 16000, 0.5);
  AudioClip out = resample(clip, 44100);
  double peak = testing::peak_frequency_hz(out.samples, 44100, 4096, 8192);
  CHECK(std::abs(peak - 440.0) <= 44100.0 / 4096.0);
}
