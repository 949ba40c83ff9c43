// core/include/vocalid/models/augment.hpp

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

#ifndef VOCALID_MODELS_AUGMENT_HPP_
#define VOCALID_MODELS_AUGMENT_HPP_

#include <string>
#include <vector>

#include "vocalid/audio/clip.hpp"
#include "vocalid/common/rng.hpp"

namespace vocalid::models {

/// Waveform-domain augmentation applied before feature extraction.  With
/// probability `prob`, exactly one of background mixing, additive noise
/// (stationary or impulsive) or pitch shifting is applied.
struct AugmentConfig {
  double prob = 0.35;
  double pitch_semitones = 2.0;  // uniform in [-2, +2]
  double snr_db_min = 5.0;
  double snr_db_max = 20.0;
};

struct AugmentAssets {
  std::vector<audio::AudioClip> beds;  // background music stems at 16 kHz
};

/// Loads every .wav under dir (sorted by name) and resamples to 16 kHz.
/// A missing directory yields empty assets.
AugmentAssets load_augment_assets(const std::string& dir);

enum class AugmentKind { kNone, kBackground, kNoise, kPitch };

/// Everything random about one augmentation, drawn up front so the actual
/// signal processing stays deterministic and thread-portable.
struct AugmentDraw {
  AugmentKind kind = AugmentKind::kNone;
  bool fell_back_to_noise = false;  // background drawn but no beds available
  double snr_db = 0.0;
  bool impulsive = false;
  double semitones = 0.0;
  int bed_index = 0;
  double bed_offset_s = 0.0;
  uint64_t noise_seed = 0;
};

AugmentDraw draw_augment(Rng& rng, const AugmentConfig& cfg,
                         bool assets_available);

/// Mixes a bed (looped if short) under the clip at the given
/// signal-to-noise ratio, measured clip RMS versus scaled-bed RMS.
audio::AudioClip mix_background(const audio::AudioClip& clip,
                                const audio::AudioClip& bed,
                                double bed_offset_s, double snr_db);

/// Stationary Gaussian noise at the given SNR, or sparse impulsive clicks.
audio::AudioClip add_noise(const audio::AudioClip& clip, bool impulsive,
                           double snr_db, uint64_t seed);

/// Resample-and-relabel pitch shift: every frequency scales by
/// 2^(semitones/12); duration changes accordingly and is not corrected.
audio::AudioClip pitch_shift(const audio::AudioClip& clip, double semitones);

/// Truncates or tiles the clip to exactly n samples.
audio::AudioClip fit_length(const audio::AudioClip& clip, size_t n);

/// Applies the drawn augmentation and returns exactly target_len samples.
/// For pitch shifts, pass a clip with enough margin (target_len * 2^(s/12)).
audio::AudioClip apply_augment(const audio::AudioClip& clip,
                               const AugmentDraw& draw,
                               const AugmentAssets& assets, size_t target_len);

}  // namespace vocalid::models

#endif  // VOCALID_MODELS_AUGMENT_HPP_
