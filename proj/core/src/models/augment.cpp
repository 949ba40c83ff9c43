// core/src/models/augment.cpp

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

#include "vocalid/models/augment.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>

#include "vocalid/audio/resample.hpp"
#include "vocalid/audio/wav.hpp"
#include "vocalid/common/error.hpp"

namespace vocalid::models {

AugmentAssets load_augment_assets(const std::string& dir) {
  AugmentAssets assets;
  std::error_code ec;
  if (dir.empty() || !std::filesystem::is_directory(dir, ec)) return assets;
  std::vector<std::string> paths;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.path().extension() == ".wav")
      paths.push_back(entry.path().string());
  }
  std::sort(paths.begin(), paths.end());
  for (const auto& p : paths)
    assets.beds.push_back(audio::load_and_resample(p));
  return assets;
}

AugmentDraw draw_augment(Rng& rng, const AugmentConfig& cfg,
                         bool assets_available) {
  AugmentDraw draw;
  if (!rng.bernoulli(cfg.prob)) return draw;
  int pick = static_cast<int>(rng.uniform_int(3));
  // Burn the per-kind draws unconditionally so the stream layout does not
  // depend on asset availability.
  double snr = rng.uniform(cfg.snr_db_min, cfg.snr_db_max);
  bool impulsive = rng.bernoulli(0.5);
  double semis = rng.uniform(-cfg.pitch_semitones, cfg.pitch_semitones);
  int bed = static_cast<int>(rng.uniform_int(1 << 20));
  double bed_off = rng.uniform(0.0, 1.0);
  uint64_t noise_seed = rng.next_u64();

  if (pick == 0 && !assets_available) {
    draw.fell_back_to_noise = true;
    pick = 1;
  }
  switch (pick) {
    case 0:
      draw.kind = AugmentKind::kBackground;
      draw.snr_db = snr;
      draw.bed_index = bed;
      draw.bed_offset_s = bed_off;
      break;
    case 1:
      draw.kind = AugmentKind::kNoise;
      draw.snr_db = snr;
      draw.impulsive = impulsive;
      draw.noise_seed = noise_seed;
      break;
    default:
      draw.kind = AugmentKind::kPitch;
      draw.semitones = semis;
      break;
  }
  return draw;
}

audio::AudioClip mix_background(const audio::AudioClip& clip,
                                const audio::AudioClip& bed,
                                double bed_offset_s, double snr_db) {
  if (bed.empty() || clip.empty()) return clip;
  audio::AudioClip out = clip;
  const size_t n = clip.samples.size();
  const size_t bed_n = bed.samples.size();
  size_t off = static_cast<size_t>(
                   std::llround(bed_offset_s * bed.sample_rate_hz)) %
               bed_n;

  // Bed segment, looped to cover the clip.
  std::vector<double> seg(n);
  for (size_t i = 0; i < n; ++i) seg[i] = bed.samples[(off + i) % bed_n];

  const double clip_rms = audio::rms(clip.samples);
  const double seg_rms = audio::rms(seg);
  if (clip_rms <= 0.0 || seg_rms <= 0.0) return out;
  const double gain = clip_rms / (seg_rms * std::pow(10.0, snr_db / 20.0));
  for (size_t i = 0; i < n; ++i) out.samples[i] += gain * seg[i];
  return out;
}

audio::AudioClip add_noise(const audio::AudioClip& clip, bool impulsive,
                           double snr_db, uint64_t seed) {
  audio::AudioClip out = clip;
  Rng rng(seed);
  const size_t n = clip.samples.size();
  if (n == 0) return out;
  if (impulsive) {
    // Sparse clicks, ~8 per second, amplitude relative to the clip's peak.
    double peak = 1e-4;
    for (double x : clip.samples) peak = std::max(peak, std::abs(x));
    const int n_clicks =
        std::max<int>(1, int(std::llround(clip.duration_s() * 8.0)));
    for (int c = 0; c < n_clicks; ++c) {
      size_t pos = static_cast<size_t>(rng.uniform_int(int64_t(n)));
      double amp = rng.uniform(0.25, 0.8) * peak *
                   (rng.bernoulli(0.5) ? 1.0 : -1.0);
      for (size_t w = 0; w < 3 && pos + w < n; ++w)
        out.samples[pos + w] += amp * std::pow(0.5, double(w));
    }
  } else {
    const double clip_rms = audio::rms(clip.samples);
    if (clip_rms <= 0.0) return out;
    const double sigma = clip_rms / std::pow(10.0, snr_db / 20.0);
    for (size_t i = 0; i < n; ++i) out.samples[i] += sigma * rng.normal();
  }
  return out;
}

audio::AudioClip pitch_shift(const audio::AudioClip& clip, double semitones) {
  const double factor = std::pow(2.0, semitones / 12.0);
  const int inter_rate =
      std::max(1000, int(std::llround(clip.sample_rate_hz / factor)));
  if (inter_rate == clip.sample_rate_hz) return clip;
  audio::AudioClip shifted = audio::resample(clip, inter_rate);
  shifted.sample_rate_hz = clip.sample_rate_hz;  // relabel: frequencies scale
  return shifted;
}

audio::AudioClip fit_length(const audio::AudioClip& clip, size_t n) {
  audio::AudioClip out;
  out.sample_rate_hz = clip.sample_rate_hz;
  out.source_id = clip.source_id;
  if (clip.samples.empty()) {
    out.samples.assign(n, 0.0);
    return out;
  }
  out.samples.resize(n);
  for (size_t i = 0; i < n; ++i)
    out.samples[i] = clip.samples[i % clip.samples.size()];
  return out;
}

audio::AudioClip apply_augment(const audio::AudioClip& clip,
                               const AugmentDraw& draw,
                               const AugmentAssets& assets,
                               size_t target_len) {
  switch (draw.kind) {
    case AugmentKind::kNone:
      return fit_length(clip, target_len);
    case AugmentKind::kBackground: {
      audio::AudioClip window = fit_length(clip, target_len);
      const audio::AudioClip& bed =
          assets.beds[size_t(draw.bed_index) % assets.beds.size()];
      return mix_background(window, bed, draw.bed_offset_s * bed.duration_s(),
                            draw.snr_db);
    }
    case AugmentKind::kNoise:
      return fit_length(
          add_noise(fit_length(clip, target_len), draw.impulsive, draw.snr_db,
                    draw.noise_seed),
          target_len);
    case AugmentKind::kPitch:
      return fit_length(pitch_shift(clip, draw.semitones), target_len);
  }
  return fit_length(clip, target_len);
}

}  // namespace vocalid::models
