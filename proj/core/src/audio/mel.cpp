// core/src/audio/mel.cpp

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

#include "vocalid/audio/mel.hpp"

#include <cmath>

#include "vocalid/common/error.hpp"

namespace vocalid::audio {

double hz_to_mel(double f_hz) {
  return 2595.0 * std::log10(1.0 + f_hz / 700.0);
}

double mel_to_hz(double mel) {
  return 700.0 * (std::pow(10.0, mel / 2595.0) - 1.0);
}

MelFilterbank mel_filterbank(const MelConfig& cfg, const StftConfig& stft_cfg,
                             int sample_rate_hz) {
  validate(stft_cfg);
  if (cfg.n_mels < 1)
    throw Error(ErrorCode::kInvalidArgument, "n_mels must be >= 1");
  if (sample_rate_hz <= 0)
    throw Error(ErrorCode::kInvalidArgument, "sample rate must be positive");
  double f_max = cfg.f_max_hz > 0.0 ? cfg.f_max_hz : sample_rate_hz / 2.0;
  if (!(cfg.f_min_hz < f_max))
    throw Error(ErrorCode::kInvalidArgument, "need f_min < f_max");

  const int n_bins = stft_cfg.n_fft / 2 + 1;
  const double bin_hz = double(sample_rate_hz) / stft_cfg.n_fft;

  // n_mels + 2 edge points equally spaced in mel; filter m spans
  // [edge[m], edge[m+2]] with its peak at edge[m+1].
  const double mel_lo = hz_to_mel(cfg.f_min_hz);
  const double mel_hi = hz_to_mel(f_max);
  std::vector<double> edge_hz(cfg.n_mels + 2);
  for (int i = 0; i < cfg.n_mels + 2; ++i)
    edge_hz[i] =
        mel_to_hz(mel_lo + (mel_hi - mel_lo) * i / (cfg.n_mels + 1));

  MelFilterbank fb;
  fb.n_mels = cfg.n_mels;
  fb.n_bins = n_bins;
  fb.weights.assign(size_t(cfg.n_mels) * n_bins, 0.0);
  fb.center_hz.resize(cfg.n_mels);

  for (int m = 0; m < cfg.n_mels; ++m) {
    const double lo = edge_hz[m], mid = edge_hz[m + 1], hi = edge_hz[m + 2];
    fb.center_hz[m] = mid;
    bool has_support = false;
    for (int k = 0; k < n_bins; ++k) {
      double f = k * bin_hz;
      double w = 0.0;
      if (f > lo && f < mid)
        w = (f - lo) / (mid - lo);
      else if (f >= mid && f < hi)
        w = (hi - f) / (hi - mid);
      if (w > 0.0) {
        fb.weights[size_t(m) * n_bins + k] = w;
        has_support = true;
      }
    }
    if (!has_support)
      throw Error(ErrorCode::kDegenerateFilterbank,
                  "mel filter " + std::to_string(m) +
                      " covers no FFT bin (n_mels too large for n_fft=" +
                      std::to_string(stft_cfg.n_fft) + ")");
  }
  return fb;
}

LogMelSpectrogram log_mel(const AudioClip& clip, const StftConfig& stft_cfg,
                          const MelConfig& mel_cfg) {
  const AudioClip* input = &clip;
  AudioClip pre;
  if (mel_cfg.pre_emphasis) {
    pre = clip;
    for (size_t i = pre.samples.size(); i-- > 1;)
      pre.samples[i] -= 0.97 * pre.samples[i - 1];
    input = &pre;
  }

  ComplexSpectrogram spec = stft(*input, stft_cfg);
  MelFilterbank fb = mel_filterbank(mel_cfg, stft_cfg, clip.sample_rate_hz);

  LogMelSpectrogram out;
  out.n_frames = spec.n_frames;
  out.n_mels = fb.n_mels;
  out.frame_rate_hz = double(clip.sample_rate_hz) / stft_cfg.hop_length;
  out.stft_cfg = stft_cfg;
  out.mel_cfg = mel_cfg;
  out.v.resize(size_t(spec.n_frames) * fb.n_mels);

  std::vector<double> power(spec.n_bins);
  for (int t = 0; t < spec.n_frames; ++t) {
    for (int k = 0; k < spec.n_bins; ++k) {
      const std::complex<double>& z = spec.at(t, k);
      power[k] = z.real() * z.real() + z.imag() * z.imag();
    }
    for (int m = 0; m < fb.n_mels; ++m) {
      const double* w = &fb.weights[size_t(m) * fb.n_bins];
      double acc = 0.0;
      for (int k = 0; k < fb.n_bins; ++k) acc += w[k] * power[k];
      out.at(t, m) = std::log(std::max(acc, mel_cfg.log_floor));
    }
  }

  if (mel_cfg.mean_var_normalize) {
    for (int m = 0; m < out.n_mels; ++m) {
      double mean = 0.0;
      for (int t = 0; t < out.n_frames; ++t) mean += out.at(t, m);
      mean /= out.n_frames;
      double var = 0.0;
      for (int t = 0; t < out.n_frames; ++t) {
        double d = out.at(t, m) - mean;
        var += d * d;
      }
      var /= out.n_frames;
      double inv = 1.0 / std::sqrt(var + 1e-12);
      for (int t = 0; t < out.n_frames; ++t)
        out.at(t, m) = (out.at(t, m) - mean) * inv;
    }
  }
  return out;
}

}  // namespace vocalid::audio
