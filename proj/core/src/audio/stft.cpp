// core/src/audio/stft.cpp

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

#include "vocalid/audio/stft.hpp"

#include <cmath>

#include "vocalid/common/error.hpp"

namespace vocalid::audio {

void validate(const StftConfig& cfg) {
  if (cfg.n_fft <= 0 || (cfg.n_fft & (cfg.n_fft - 1)) != 0)
    throw Error(ErrorCode::kInvalidArgument, "n_fft must be a power of two");
  if (cfg.win_length <= 0 || cfg.win_length > cfg.n_fft)
    throw Error(ErrorCode::kInvalidArgument, "win_length must be in (0, n_fft]");
  if (cfg.hop_length <= 0 || cfg.hop_length > cfg.win_length)
    throw Error(ErrorCode::kInvalidArgument,
                "hop_length must be in (0, win_length]");
}

std::vector<double> hamming_window(int n) {
  std::vector<double> w(n);
  if (n == 1) {
    w[0] = 1.0;
    return w;
  }
  for (int i = 0; i < n; ++i)
    w[i] = 0.54 - 0.46 * std::cos(2.0 * M_PI * i / (n - 1));
  return w;
}

Fft::Fft(int n) : n_(n) {
  if (n <= 0 || (n & (n - 1)) != 0)
    throw Error(ErrorCode::kInvalidArgument, "FFT size must be a power of two");
  bit_reverse_.resize(n);
  int log2n = 0;
  while ((1 << log2n) < n) ++log2n;
  for (int i = 0; i < n; ++i) {
    int r = 0;
    for (int b = 0; b < log2n; ++b)
      if (i & (1 << b)) r |= 1 << (log2n - 1 - b);
    bit_reverse_[i] = r;
  }
  twiddles_.resize(n / 2);
  for (int k = 0; k < n / 2; ++k) {
    double a = -2.0 * M_PI * k / n;
    twiddles_[k] = {std::cos(a), std::sin(a)};
  }
}

void Fft::forward(std::complex<double>* x) const {
  for (int i = 0; i < n_; ++i) {
    int j = bit_reverse_[i];
    if (i < j) std::swap(x[i], x[j]);
  }
  for (int len = 2; len <= n_; len <<= 1) {
    int half = len >> 1;
    int stride = n_ / len;
    for (int start = 0; start < n_; start += len) {
      for (int k = 0; k < half; ++k) {
        std::complex<double> w = twiddles_[size_t(k) * stride];
        std::complex<double> a = x[start + k];
        std::complex<double> b = x[start + k + half] * w;
        x[start + k] = a + b;
        x[start + k + half] = a - b;
      }
    }
  }
}

int stft_frame_count(size_t n_samples, const StftConfig& cfg) {
  if (n_samples < static_cast<size_t>(cfg.win_length)) return 0;
  return static_cast<int>((n_samples - cfg.win_length) / cfg.hop_length) + 1;
}

ComplexSpectrogram stft(const AudioClip& clip, const StftConfig& cfg) {
  validate(cfg);
  if (clip.samples.size() < static_cast<size_t>(cfg.win_length))
    throw Error(ErrorCode::kTooShort,
                clip.source_id + ": " + std::to_string(clip.samples.size()) +
                    " samples < one window (" + std::to_string(cfg.win_length) +
                    ")");

  const int n_frames = stft_frame_count(clip.samples.size(), cfg);
  const int n_bins = cfg.n_fft / 2 + 1;
  const std::vector<double> window = hamming_window(cfg.win_length);
  const Fft fft(cfg.n_fft);

  ComplexSpectrogram spec;
  spec.n_frames = n_frames;
  spec.n_bins = n_bins;
  spec.v.resize(size_t(n_frames) * n_bins);

  std::vector<std::complex<double>> buf(cfg.n_fft);
  for (int t = 0; t < n_frames; ++t) {
    const double* x = clip.samples.data() + size_t(t) * cfg.hop_length;
    for (int i = 0; i < cfg.win_length; ++i) buf[i] = x[i] * window[i];
    for (int i = cfg.win_length; i < cfg.n_fft; ++i) buf[i] = 0.0;
    fft.forward(buf.data());
    for (int k = 0; k < n_bins; ++k) spec.at(t, k) = buf[k];
  }
  return spec;
}

}  // namespace vocalid::audio
