// tests/support/test_util.hpp

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

#ifndef VOCALID_TESTS_SUPPORT_TEST_UTIL_HPP_
#define VOCALID_TESTS_SUPPORT_TEST_UTIL_HPP_

#include <unistd.h>

#include <atomic>
#include <cmath>
#include <complex>
#include <cstdint>
#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "vocalid/audio/clip.hpp"

namespace vocalid::testing {

/// Unique scratch directory, removed on destruction.
class TempDir {
 public:
  explicit TempDir(const std::string& tag = "vocalid_test") {
    static std::atomic<uint64_t> counter{0};
    auto base = std::filesystem::temp_directory_path();
    path_ = base / (tag + "_" + std::to_string(::getpid()) + "_" +
                    std::to_string(counter.fetch_add(1)));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  const std::filesystem::path& path() const { return path_; }
  std::string file(const std::string& name) const {
    return (path_ / name).string();
  }

 private:
  std::filesystem::path path_;
};

inline audio::AudioClip make_tone(double freq_hz, double dur_s, int rate,
                                  double amp = 0.5) {
  audio::AudioClip clip;
  clip.sample_rate_hz = rate;
  clip.source_id = "tone";
  size_t n = size_t(std::llround(dur_s * rate));
  clip.samples.resize(n);
  for (size_t i = 0; i < n; ++i)
    clip.samples[i] = amp * std::sin(2.0 * M_PI * freq_hz * double(i) / rate);
  return clip;
}

inline audio::AudioClip make_noise(double dur_s, int rate, double amp,
                                   uint64_t seed) {
  std::mt19937_64 gen(seed);
  audio::AudioClip clip;
  clip.sample_rate_hz = rate;
  clip.source_id = "noise";
  size_t n = size_t(std::llround(dur_s * rate));
  clip.samples.resize(n);
  for (size_t i = 0; i < n; ++i)
    clip.samples[i] = amp * (2.0 * double(gen() >> 11) * 0x1.0p-53 - 1.0);
  return clip;
}

/// Naive O(N^2) DFT of a real signal zero-padded/truncated to n points.
/// Deliberately slow and simple: the independent oracle for FFT-based code.
inline std::vector<std::complex<double>> naive_dft(
    const std::vector<double>& x, int n) {
  std::vector<std::complex<double>> out(n);
  for (int k = 0; k < n; ++k) {
    std::complex<double> acc = 0.0;
    for (int i = 0; i < n && i < int(x.size()); ++i) {
      double a = -2.0 * M_PI * double(k) * double(i) / double(n);
      acc += x[i] * std::complex<double>(std::cos(a), std::sin(a));
    }
    out[k] = acc;
  }
  return out;
}

/// Locates the dominant frequency by naive DFT over a Hann-windowed
/// interior slice; returns the peak bin center in Hz.
inline double peak_frequency_hz(const std::vector<double>& samples, int rate,
                                int n_dft = 4096, size_t offset = 0) {
  std::vector<double> x(n_dft, 0.0);
  for (int i = 0; i < n_dft && offset + i < samples.size(); ++i) {
    double w = 0.5 - 0.5 * std::cos(2.0 * M_PI * i / (n_dft - 1));
    x[i] = samples[offset + i] * w;
  }
  double best_mag = -1.0;
  int best_k = 0;
  // Goertzel-style direct evaluation per bin, up to Nyquist.
  for (int k = 1; k < n_dft / 2; ++k) {
    std::complex<double> acc = 0.0;
    double step = -2.0 * M_PI * double(k) / double(n_dft);
    std::complex<double> rot(std::cos(step), std::sin(step));
    std::complex<double> phase(1.0, 0.0);
    for (int i = 0; i < n_dft; ++i) {
      acc += x[i] * phase;
      phase *= rot;
    }
    double mag = std::abs(acc);
    if (mag > best_mag) {
      best_mag = mag;
      best_k = k;
    }
  }
  return double(best_k) * rate / n_dft;
}

}  // namespace vocalid::testing

#endif  // VOCALID_TESTS_SUPPORT_TEST_UTIL_HPP_
