// core/include/vocalid/audio/mel.hpp

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

#ifndef VOCALID_AUDIO_MEL_HPP_
#define VOCALID_AUDIO_MEL_HPP_

#include "vocalid/audio/stft.hpp"

namespace vocalid::audio {

struct MelConfig {
  int n_mels = 80;
  double f_min_hz = 0.0;
  double f_max_hz = 0.0;     // 0 means sample_rate/2
  double log_floor = 1e-10;  // applied to mel-band power before the log
  // Optional preprocessing; both default off.
  bool pre_emphasis = false;        // x[n] - 0.97*x[n-1] on the waveform
  bool mean_var_normalize = false;  // per-coefficient over time, after the log
};

/// HTK mel scale.
double hz_to_mel(double f_hz);
double mel_to_hz(double mel);

/// Triangular filters with centers equally spaced on the mel scale, no area
/// normalization.  Each row is nonnegative and unimodal.
/// Errors: kDegenerateFilterbank when some filter covers no FFT bin.
struct MelFilterbank {
  int n_mels = 0;
  int n_bins = 0;
  std::vector<double> weights;  // row-major [mel][bin]
  std::vector<double> center_hz;

  double at(int m, int k) const { return weights[size_t(m) * n_bins + k]; }
};

MelFilterbank mel_filterbank(const MelConfig& cfg, const StftConfig& stft_cfg,
                             int sample_rate_hz);

/// Time x mel matrix of log power: log(max(filterbank * |STFT|^2, floor)).
struct LogMelSpectrogram {
  int n_frames = 0;
  int n_mels = 0;
  double frame_rate_hz = 0.0;
  StftConfig stft_cfg;
  MelConfig mel_cfg;
  std::vector<double> v;  // row-major [frame][mel]

  double& at(int t, int m) { return v[size_t(t) * n_mels + m]; }
  double at(int t, int m) const { return v[size_t(t) * n_mels + m]; }
};

LogMelSpectrogram log_mel(const AudioClip& clip, const StftConfig& stft_cfg,
                          const MelConfig& mel_cfg);

}  // namespace vocalid::audio

#endif  // VOCALID_AUDIO_MEL_HPP_
