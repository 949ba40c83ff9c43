// core/include/vocalid/audio/stft.hpp

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

#ifndef VOCALID_AUDIO_STFT_HPP_
#define VOCALID_AUDIO_STFT_HPP_

#include <complex>
#include <vector>

#include "vocalid/audio/clip.hpp"

namespace vocalid::audio {

/// Analysis parameters: 512-point FFT over 400-sample Hamming windows with a
/// 160-sample hop (25 ms / 10 ms at 16 kHz).
struct StftConfig {
  int n_fft = 512;
  int win_length = 400;
  int hop_length = 160;
};

void validate(const StftConfig& cfg);

/// Symmetric Hamming window: 0.54 - 0.46*cos(2*pi*n/(N-1)).
std::vector<double> hamming_window(int n);

/// Radix-2 complex FFT with precomputed twiddles; n must be a power of two.
class Fft {
 public:
  explicit Fft(int n);
  int size() const { return n_; }
  void forward(std::complex<double>* x) const;  // in-place, DIT

 private:
  int n_;
  std::vector<int> bit_reverse_;
  std::vector<std::complex<double>> twiddles_;
};

/// One-sided complex STFT, frames in rows.
struct ComplexSpectrogram {
  int n_frames = 0;
  int n_bins = 0;  // n_fft/2 + 1
  std::vector<std::complex<double>> v;  // row-major [frame][bin]

  std::complex<double>& at(int t, int k) { return v[size_t(t) * n_bins + k]; }
  const std::complex<double>& at(int t, int k) const {
    return v[size_t(t) * n_bins + k];
  }
};

/// Number of fully covered frames: floor((len - win)/hop) + 1 for
/// len >= win (no end padding).
int stft_frame_count(size_t n_samples, const StftConfig& cfg);

/// Frame t covers samples [t*hop, t*hop + win), Hamming-windowed and
/// zero-padded to n_fft; bins 0..n_fft/2 are returned.
/// Errors: kTooShort when the clip cannot fill one window.
ComplexSpectrogram stft(const AudioClip& clip, const StftConfig& cfg);

}  // namespace vocalid::audio

#endif  // VOCALID_AUDIO_STFT_HPP_
