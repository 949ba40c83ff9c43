// core/src/audio/resample.cpp

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

#include "vocalid/audio/resample.hpp"

#include <cmath>
#include <numeric>
#include <vector>

#include "vocalid/audio/wav.hpp"
#include "vocalid/common/error.hpp"

namespace vocalid::audio {

namespace {

constexpr double kKaiserBeta = 12.0;
constexpr int kZeroCrossings = 32;
constexpr double kCutoffFraction = 0.95;  // of the narrower Nyquist
constexpr int64_t kMaxCachedPhases = 8192;

// Modified Bessel function of the first kind, order zero (power series).
double bessel_i0(double x) {
  double sum = 1.0, term = 1.0;
  double half_x = 0.5 * x;
  for (int k = 1; k < 64; ++k) {
    term *= (half_x / k) * (half_x / k);
    sum += term;
    if (term < sum * 1e-17) break;
  }
  return sum;
}

double sinc(double x) {
  if (std::abs(x) < 1e-12) return 1.0;
  double px = M_PI * x;
  return std::sin(px) / px;
}

// Interpolation kernel at offset u (input samples): low-pass sinc with
// normalized cutoff rho (cycles/sample), Kaiser-windowed over |u| <= half.
double kernel(double u, double rho, double half, double inv_i0_beta) {
  if (std::abs(u) > half) return 0.0;
  double t = u / half;
  double window = bessel_i0(kKaiserBeta * std::sqrt(std::max(0.0, 1.0 - t * t))) *
                  inv_i0_beta;
  return 2.0 * rho * sinc(2.0 * rho * u) * window;
}

}  // namespace

AudioClip resample(const AudioClip& clip, int target_hz) {
  if (target_hz <= 0)
    throw Error(ErrorCode::kInvalidArgument, "target rate must be positive");
  if (clip.empty())
    throw Error(ErrorCode::kEmptyAudio, clip.source_id + ": empty clip");
  if (clip.sample_rate_hz <= 0)
    throw Error(ErrorCode::kInvalidArgument,
                clip.source_id + ": invalid source rate");
  if (target_hz == clip.sample_rate_hz) return clip;

  const int64_t in_rate = clip.sample_rate_hz;
  const int64_t out_rate = target_hz;
  const int64_t g = std::gcd(in_rate, out_rate);
  const int64_t q = in_rate / g;   // input step per output step, numerator
  const int64_t p = out_rate / g;  // denominator; fractional phases repeat mod p

  const double ratio = double(out_rate) / double(in_rate);
  // Cutoff in cycles per *input* sample.
  const double rho = 0.5 * kCutoffFraction * std::min(1.0, ratio);
  const double half = kZeroCrossings / (2.0 * rho);
  const int half_taps = static_cast<int>(std::ceil(half));
  const double inv_i0_beta = 1.0 / bessel_i0(kKaiserBeta);

  const int64_t in_len = static_cast<int64_t>(clip.samples.size());
  const int64_t out_len = std::llround(double(in_len) * ratio);

  AudioClip out;
  out.sample_rate_hz = target_hz;
  out.source_id = clip.source_id;
  out.samples.resize(static_cast<size_t>(std::max<int64_t>(out_len, 0)));

  // Output sample m sits at input position m*q/p = base + phase/p.
  const int n_taps = 2 * half_taps + 1;
  std::vector<double> phase_filters;
  const bool cache_phases = p <= kMaxCachedPhases;
  if (cache_phases) {
    phase_filters.resize(static_cast<size_t>(p) * n_taps);
    for (int64_t ph = 0; ph < p; ++ph) {
      double frac = double(ph) / double(p);
      for (int j = 0; j < n_taps; ++j) {
        double u = double(j - half_taps) - frac;
        phase_filters[size_t(ph) * n_taps + j] =
            kernel(u, rho, half, inv_i0_beta);
      }
    }
  }

  const double* x = clip.samples.data();
  for (int64_t m = 0; m < out_len; ++m) {
    int64_t num = m * q;            // position = num / p input samples
    int64_t base = num / p;
    int64_t phase = num % p;
    double acc = 0.0;
    if (cache_phases) {
      const double* h = &phase_filters[size_t(phase) * n_taps];
      int64_t n0 = base - half_taps;
      int j_lo = static_cast<int>(std::max<int64_t>(0, -n0));
      int j_hi = static_cast<int>(
          std::min<int64_t>(n_taps, in_len - n0));
      for (int j = j_lo; j < j_hi; ++j) acc += x[n0 + j] * h[j];
    } else {
      double pos = double(base) + double(phase) / double(p);
      int64_t n_lo = std::max<int64_t>(0, base - half_taps);
      int64_t n_hi = std::min<int64_t>(in_len - 1, base + half_taps + 1);
      for (int64_t n = n_lo; n <= n_hi; ++n)
        acc += x[n] * kernel(double(n) - pos, rho, half, inv_i0_beta);
    }
    out.samples[static_cast<size_t>(m)] = acc;
  }
  return out;
}

AudioClip load_and_resample(const std::string& path, int target_hz) {
  return resample(load_wav(path), target_hz);
}

}  // namespace vocalid::audio
