// tests/test_vad.cpp

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

#include <sstream>

#include "support/test_util.hpp"
#include "vocalid/common/error.hpp"
#include "vocalid/common/rng.hpp"
#include "vocalid/vad/vad.hpp"

using namespace vocalid;
using namespace vocalid::audio;
using namespace vocalid::vad;

namespace {

// tone / silence / tone, each segment dur_s seconds.
AudioClip tone_silence_tone(double dur_s, int rate) {
  AudioClip clip = testing::make_tone(440.0, dur_s, rate, 0.5);
  const size_t seg = clip.samples.size();
  clip.samples.resize(3 * seg, 0.0);
  AudioClip tail = testing::make_tone(440.0, dur_s, rate, 0.5);
  std::copy(tail.samples.begin(), tail.samples.end(),
            clip.samples.begin() + 2 * seg);
  return clip;
}

}  // namespace

TEST_CASE("digital silence is entirely inactive") {
  AudioClip clip;
  clip.sample_rate_hz = 16000;
  clip.samples.assign(32000, 0.0);
  ActivityMask mask = detect_activity(clip, VadConfig{});
  CHECK(mask.active_count() == 0);
}

TEST_CASE("a full-scale constant tone is entirely active") {
  auto clip = testing::make_tone(220.0, 2.0, 16000, 0.9);
  ActivityMask mask = detect_activity(clip, VadConfig{});
  CHECK(mask.active_count() == mask.active.size());
}

TEST_CASE("tone/silence/tone yields two-thirds activity") {
  auto clip = tone_silence_tone(2.0, 16000);
  VadConfig cfg;
  ActivityMask mask = detect_activity(clip, cfg);
  double frac = mask.active_fraction();
  // Allow the hangover spans plus frame-boundary effects.
  double slack =
      double(2 * cfg.hangover_frames + 6) / double(mask.active.size());
  CHECK(std::abs(frac - 2.0 / 3.0) <= slack);
}

TEST_CASE("trim on an all-active mask returns the identical clip") {
  auto clip = testing::make_tone(330.0, 1.5, 16000, 0.8);
  TrimResult r = trim_nonvocal(clip, VadConfig{});
  REQUIRE(r.clip.samples.size() == clip.samples.size());
  for (size_t i = 0; i < clip.samples.size(); ++i)
    CHECK(r.clip.samples[i] == clip.samples[i]);
  CHECK(r.removed_fraction == 0.0);
}

TEST_CASE("trimming tone/silence/tone keeps about four seconds") {
  auto clip = tone_silence_tone(2.0, 16000);
  TrimResult r = trim_nonvocal(clip, VadConfig{});
  CHECK(std::abs(r.clip.duration_s() - 4.0) <= 0.15);
  CHECK(r.removed_fraction == doctest::Approx(1.0 / 3.0).epsilon(0.12));
}

TEST_CASE("removal statistic tracks a corpus built ~40% silent") {
  // Twenty clips, each exactly 40% silence in varying patterns.
  Rng rng(404);
  double total_removed = 0.0;
  const int n_clips = 20;
  for (int c = 0; c < n_clips; ++c) {
    AudioClip clip;
    clip.sample_rate_hz = 16000;
    double remaining_active = 6.0 * 0.6, remaining_silence = 6.0 * 0.4;
    while (remaining_active > 0.01 || remaining_silence > 0.01) {
      double a = std::min(remaining_active, rng.uniform(0.5, 1.5));
      if (a > 0.01) {
        auto seg = testing::make_tone(rng.uniform(200, 600), a, 16000, 0.5);
        clip.samples.insert(clip.samples.end(), seg.samples.begin(),
                            seg.samples.end());
        remaining_active -= a;
      }
      double s = std::min(remaining_silence, rng.uniform(0.4, 1.0));
      if (s > 0.01) {
        clip.samples.insert(clip.samples.end(), size_t(s * 16000), 0.0);
        remaining_silence -= s;
      }
    }
    total_removed += trim_nonvocal(clip, VadConfig{}).removed_fraction;
  }
  double mean_removed = total_removed / n_clips;
  CHECK(mean_removed >= 0.30);
  CHECK(mean_removed <= 0.50);
}

TEST_CASE("re-running detect+trim removes almost nothing more") {
  Rng rng(11);
  for (int c = 0; c < 8; ++c) {
    auto clip = tone_silence_tone(rng.uniform(1.0, 2.5), 16000);
    TrimResult first = trim_nonvocal(clip, VadConfig{});
    TrimResult second = trim_nonvocal(first.clip, VadConfig{});
    CHECK(second.removed_fraction < 0.05);
  }
}

TEST_CASE("raising the threshold never increases the active count") {
  auto clip = tone_silence_tone(1.0, 16000);
  VadConfig cfg;
  cfg.hangover_frames = 0;
  cfg.min_segment_ms = 0;
  size_t prev = SIZE_MAX;
  for (double thr : {-60.0, -40.0, -20.0, -10.0, -3.0, 0.0, 3.0}) {
    cfg.energy_threshold_db = thr;
    size_t n = detect_activity(clip, cfg).active_count();
    CHECK(n <= prev);
    prev = n;
  }
}

TEST_CASE("trimmed output contains only input material") {
  // Outside crossfade joins, every output sample must appear in the input.
  auto clip = tone_silence_tone(1.0, 16000);
  for (size_t i = 0; i < clip.samples.size(); ++i)
    clip.samples[i] += 1e-4 * std::sin(0.1 * double(i));  // make values unique-ish
  TrimResult r = trim_nonvocal(clip, VadConfig{});
  std::vector<double> sorted(clip.samples);
  std::sort(sorted.begin(), sorted.end());
  size_t matched = 0;
  for (double y : r.clip.samples)
    if (std::binary_search(sorted.begin(), sorted.end(), y)) ++matched;
  // One 10 ms crossfade (160 samples) is the only blended region.
  CHECK(r.clip.samples.size() - matched <= 160);
}

TEST_CASE("vad error paths") {
  SUBCASE("clip shorter than one frame") {
    AudioClip clip;
    clip.sample_rate_hz = 16000;
    clip.samples.assign(100, 0.5);
    try { detect_activity(clip, VadConfig{}); FAIL("no throw"); }
    catch (const Error& e) { CHECK(e.code() == ErrorCode::kTooShort); }
  }
  SUBCASE("all-inactive mask cannot be trimmed") {
    AudioClip clip;
    clip.sample_rate_hz = 16000;
    clip.samples.assign(32000, 0.0);
    try { trim_nonvocal(clip, VadConfig{}); FAIL("no throw"); }
    catch (const Error& e) { CHECK(e.code() == ErrorCode::kEmptyResult); }
  }
  SUBCASE("mask from another clip is rejected") {
    auto a = testing::make_tone(440, 1.0, 16000, 0.5);
    auto b = testing::make_tone(440, 2.0, 16000, 0.5);
    ActivityMask mask = detect_activity(a, VadConfig{});
    try { trim_nonvocal(b, mask); FAIL("no throw"); }
    catch (const Error& e) { CHECK(e.code() == ErrorCode::kInvalidArgument); }
  }
}

TEST_CASE("segment export covers the clip with alternating runs") {
  auto clip = tone_silence_tone(1.0, 16000);
  ActivityMask mask = detect_activity(clip, VadConfig{});
  auto segs = mask.segments();
  REQUIRE(!segs.empty());
  CHECK(segs.front().start_s == 0.0);
  CHECK(segs.back().end_s == doctest::Approx(clip.duration_s()));
  for (size_t i = 1; i < segs.size(); ++i) {
    CHECK(segs[i].start_s == doctest::Approx(segs[i - 1].end_s));
    CHECK(segs[i].active != segs[i - 1].active);
  }
  // No active segment shorter than min_segment_ms survives.
  for (const auto& s : segs)
    if (s.active) CHECK(s.end_s - s.start_s >= 0.2 - 1e-9);

  std::string text = format_segments(mask);
  std::istringstream is(text);
  std::string line;
  size_t lines = 0;
  while (std::getline(is, line)) ++lines;
  CHECK(lines == segs.size());
}
