// tests/test_stft_mel.cpp

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

#include <numeric>

#include "support/test_util.hpp"
#include "vocalid/audio/mel.hpp"
#include "vocalid/audio/stft.hpp"
#include "vocalid/common/error.hpp"
#include "vocalid/common/rng.hpp"

using namespace vocalid;
using namespace vocalid::audio;

TEST_CASE("frame counts follow the truncated framing convention") {
  StftConfig cfg;
  CHECK(stft_frame_count(16000, cfg) == 98);
  CHECK(stft_frame_count(160000, cfg) == 998);
  CHECK(stft_frame_count(400, cfg) == 1);
  CHECK(stft_frame_count(399, cfg) == 0);

  // Property over random lengths: count equals the number of fully
  // covered windows.
  Rng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    size_t len = 400 + size_t(rng.uniform_int(20000));
    int expected = 0;
    for (size_t start = 0; start + 400 <= len; start += 160) ++expected;
    CHECK(stft_frame_count(len, cfg) == expected);
  }
}

TEST_CASE("stft of a constant signal matches the window spectrum") {
  const double amp = 0.35;
  AudioClip clip;
  clip.sample_rate_hz = 16000;
  clip.samples.assign(800, amp);
  StftConfig cfg;
  ComplexSpectrogram spec = stft(clip, cfg);

  auto window = hamming_window(cfg.win_length);
  double wsum = std::accumulate(window.begin(), window.end(), 0.0);
  CHECK(std::abs(spec.at(0, 0)) ==
        doctest::Approx(amp * wsum).epsilon(1e-12));

  // Every bin equals amp * DFT(window), i.e. pure window leakage.
  std::vector<double> wvec(window.begin(), window.end());
  auto wdft = testing::naive_dft(wvec, cfg.n_fft);
  for (int k = 0; k < spec.n_bins; ++k)
    CHECK(std::abs(spec.at(0, k) - amp * wdft[k]) < 1e-9 * (1.0 + wsum));
}

TEST_CASE("fft-based frames match the naive DFT oracle") {
  auto clip = testing::make_noise(1.0, 16000, 0.9, 1234);
  StftConfig cfg;
  ComplexSpectrogram spec = stft(clip, cfg);
  auto window = hamming_window(cfg.win_length);

  double num = 0.0, den = 0.0;
  for (int t = 0; t < spec.n_frames; t += 13) {  // sample of frames
    std::vector<double> frame(cfg.win_length);
    for (int i = 0; i < cfg.win_length; ++i)
      frame[i] = clip.samples[size_t(t) * cfg.hop_length + i] * window[i];
    auto oracle = testing::naive_dft(frame, cfg.n_fft);
    for (int k = 0; k < spec.n_bins; ++k) {
      num += std::norm(spec.at(t, k) - oracle[k]);
      den += std::norm(oracle[k]);
    }
  }
  CHECK(std::sqrt(num / den) < 1e-6);
}

TEST_CASE("per-frame Parseval identity holds") {
  auto clip = testing::make_noise(0.2, 16000, 0.8, 99);
  StftConfig cfg;
  ComplexSpectrogram spec = stft(clip, cfg);
  auto window = hamming_window(cfg.win_length);
  for (int t = 0; t < spec.n_frames; ++t) {
    double time_energy = 0.0;
    for (int i = 0; i < cfg.win_length; ++i) {
      double v = clip.samples[size_t(t) * cfg.hop_length + i] * window[i];
      time_energy += v * v;
    }
    // Full mirrored spectrum from the one-sided bins.
    double spec_energy = std::norm(spec.at(t, 0)) +
                         std::norm(spec.at(t, cfg.n_fft / 2));
    for (int k = 1; k < cfg.n_fft / 2; ++k)
      spec_energy += 2.0 * std::norm(spec.at(t, k));
    CHECK(spec_energy ==
          doctest::Approx(cfg.n_fft * time_energy).epsilon(1e-6));
  }
}

TEST_CASE("stft rejects clips shorter than one window") {
  AudioClip clip;
  clip.sample_rate_hz = 16000;
  clip.samples.assign(399, 0.1);
  try {
    stft(clip, StftConfig{});
    FAIL("no throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kTooShort);
  }
}

TEST_CASE("mel scale formula and filterbank geometry") {
  CHECK(hz_to_mel(700.0) ==
        doctest::Approx(2595.0 * std::log10(2.0)).epsilon(1e-12));
  CHECK(hz_to_mel(700.0) == doctest::Approx(781.17).epsilon(1e-4));

  StftConfig stft_cfg;
  MelConfig mel_cfg;
  MelFilterbank fb = mel_filterbank(mel_cfg, stft_cfg, 16000);
  REQUIRE(fb.n_mels == 80);
  REQUIRE(fb.n_bins == 257);

  // Centers strictly increasing in Hz.
  for (int m = 1; m < fb.n_mels; ++m)
    CHECK(fb.center_hz[m] > fb.center_hz[m - 1]);

  // Total weight positive for every bin between the first and last centers.
  double bin_hz = 16000.0 / stft_cfg.n_fft;
  for (int k = 0; k < fb.n_bins; ++k) {
    double f = k * bin_hz;
    if (f <= fb.center_hz.front() || f >= fb.center_hz.back()) continue;
    double total = 0.0;
    for (int m = 0; m < fb.n_mels; ++m) total += fb.at(m, k);
    CHECK(total > 0.0);
  }

  // Rows nonnegative and unimodal (single rise then fall).
  for (int m = 0; m < fb.n_mels; ++m) {
    bool falling = false;
    for (int k = 1; k < fb.n_bins; ++k) {
      CHECK(fb.at(m, k) >= 0.0);
      double prev = fb.at(m, k - 1), cur = fb.at(m, k);
      if (cur < prev) falling = true;
      if (falling && cur > prev && prev > 0.0) FAIL("second peak in filter");
    }
  }
}

TEST_CASE("over-resolved filterbank is rejected") {
  StftConfig stft_cfg;
  MelConfig mel_cfg;
  mel_cfg.n_mels = 400;  // narrower than one FFT bin at the low end
  try {
    mel_filterbank(mel_cfg, stft_cfg, 16000);
    FAIL("no throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kDegenerateFilterbank);
  }
}

TEST_CASE("log-mel of silence sits exactly on the floor") {
  AudioClip clip;
  clip.sample_rate_hz = 16000;
  clip.samples.assign(16000, 0.0);
  LogMelSpectrogram lm = log_mel(clip, StftConfig{}, MelConfig{});
  for (double v : lm.v) CHECK(v == std::log(1e-10));
}

TEST_CASE("10 s at 16 kHz yields 998 x 80 at 100 frames/s") {
  auto clip = testing::make_tone(220.0, 10.0, 16000, 0.4);
  LogMelSpectrogram lm = log_mel(clip, StftConfig{}, MelConfig{});
  CHECK(lm.n_frames == 998);
  CHECK(lm.n_mels == 80);
  CHECK(lm.frame_rate_hz == doctest::Approx(100.0));
}

TEST_CASE("doubling the amplitude shifts log-mels by exactly log 4") {
  auto clip = testing::make_noise(0.3, 16000, 0.4, 5);
  AudioClip doubled = clip;
  for (double& x : doubled.samples) x *= 2.0;

  LogMelSpectrogram a = log_mel(clip, StftConfig{}, MelConfig{});
  LogMelSpectrogram b = log_mel(doubled, StftConfig{}, MelConfig{});
  const double floor_log = std::log(1e-10);
  int checked = 0;
  for (size_t i = 0; i < a.v.size(); ++i) {
    if (a.v[i] == floor_log || b.v[i] == floor_log) continue;
    CHECK(std::abs((b.v[i] - a.v[i]) - std::log(4.0)) < 1e-9);
    ++checked;
  }
  CHECK(checked > 0);
}

TEST_CASE("log-mel power homogeneity under amplitude scaling") {
  auto clip = testing::make_noise(0.2, 16000, 0.3, 21);
  Rng rng(77);
  const double floor_log = std::log(1e-10);

  // Power-of-two scales commute exactly with the arithmetic.
  for (double c : {0.25, 0.5, 2.0, 8.0}) {
    AudioClip scaled = clip;
    for (double& x : scaled.samples) x *= c;
    LogMelSpectrogram a = log_mel(clip, StftConfig{}, MelConfig{});
    LogMelSpectrogram b = log_mel(scaled, StftConfig{}, MelConfig{});
    for (size_t i = 0; i < a.v.size(); ++i) {
      if (a.v[i] == floor_log || b.v[i] == floor_log) continue;
      CHECK(std::abs((b.v[i] - a.v[i]) - 2.0 * std::log(c)) < 1e-9);
    }
  }

  // Generic scales: same identity, rounding-limited tolerance, checked on
  // entries comfortably above the floor.
  for (int trial = 0; trial < 3; ++trial) {
    double c = rng.uniform(0.3, 3.0);
    AudioClip scaled = clip;
    for (double& x : scaled.samples) x *= c;
    LogMelSpectrogram a = log_mel(clip, StftConfig{}, MelConfig{});
    LogMelSpectrogram b = log_mel(scaled, StftConfig{}, MelConfig{});
    for (size_t i = 0; i < a.v.size(); ++i) {
      if (a.v[i] < floor_log + 14.0) continue;  // ~1e-6x the floor margin
      CHECK(std::abs((b.v[i] - a.v[i]) - 2.0 * std::log(c)) < 1e-6);
    }
  }
}

TEST_CASE("optional pre-emphasis and MVN flags default off") {
  MelConfig cfg;
  CHECK_FALSE(cfg.pre_emphasis);
  CHECK_FALSE(cfg.mean_var_normalize);

  auto clip = testing::make_tone(440.0, 0.5, 16000, 0.4);
  MelConfig mvn = cfg;
  mvn.mean_var_normalize = true;
  LogMelSpectrogram lm = log_mel(clip, StftConfig{}, mvn);
  for (int m = 0; m < lm.n_mels; ++m) {
    double mean = 0.0;
    for (int t = 0; t < lm.n_frames; ++t) mean += lm.at(t, m);
    CHECK(std::abs(mean / lm.n_frames) < 1e-9);
  }
}
