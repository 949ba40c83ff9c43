// core/include/vocalid/models/architectures.hpp

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

#ifndef VOCALID_MODELS_ARCHITECTURES_HPP_
#define VOCALID_MODELS_ARCHITECTURES_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "vocalid/audio/mel.hpp"
#include "vocalid/nn/archive.hpp"
#include "vocalid/nn/network.hpp"

namespace vocalid::models {

/// Both networks consume 10-second log-mel windows: 998 frames x 80 mels.
inline constexpr int kWindowFrames = 998;
inline constexpr double kWindowSeconds = 10.0;
inline constexpr int kWindowSamples = 160000;  // 10 s at 16 kHz

/// Cuts frames [begin, begin+n) out of a full-track spectrogram (tiling
/// cyclically when the track is shorter), normalizes the window to zero
/// mean / unit variance, and lays it out [1, n, n_mels] for the 2-d stack
/// or [n_mels, n] for the 1-d stack.  Window-level normalization is an
/// architecture constant of both models: it makes them insensitive to
/// absolute level, which plain log-mels are not.
nn::Tensor feature_window_2d(const audio::LogMelSpectrogram& feats,
                             int frame_begin, int n_frames = kWindowFrames);
nn::Tensor feature_window_1d(const audio::LogMelSpectrogram& feats,
                             int frame_begin, int n_frames = kWindowFrames);

/// Deepfake discriminator: a light conv net of conv2d+MFM blocks with
/// max-pooling, global average pooling and an MFM dense head ending in a
/// sigmoid P(deepfake).
struct DiscriminatorModel {
  nn::Network net;

  static DiscriminatorModel create(uint64_t seed);
  static DiscriminatorModel from_archive(const std::string& path);
  static DiscriminatorModel from_archive_bytes(
      const std::vector<uint8_t>& bytes);

  DiscriminatorModel clone() const;

  /// P(deepfake) for one feature window.  Not thread-safe per instance;
  /// clone per worker.
  double predict_window(const audio::LogMelSpectrogram& feats,
                        int frame_begin, int n_frames = kWindowFrames);
};

/// Singer embedder: frame conv + three dilated TDNN blocks (dilations
/// 1,2,3) with SE gates, attentive statistics pooling, a linear embedding
/// layer, and a softmax classifier head used only in training.  The
/// embedding is the linear output of the embedding layer (pre-classifier).
struct EmbedderModel {
  nn::Network net;
  size_t embed_prefix = 0;  // forward through this many layers -> embedding
  int emb_dim = 0;
  int n_classes = 0;
  int channels = 0;
  uint32_t fingerprint = 0;  // CRC32 of the serialized weights

  static EmbedderModel create(uint64_t seed, int n_classes, int channels = 24,
                              int emb_dim = 64);
  static EmbedderModel from_archive(const std::string& path);
  static EmbedderModel from_archive_bytes(const std::vector<uint8_t>& bytes);

  EmbedderModel clone() const;
  void refresh_fingerprint();

  /// Linear embedding for one feature window.  Clone per worker.
  std::vector<double> embed_window(const audio::LogMelSpectrogram& feats,
                                   int frame_begin,
                                   int n_frames = kWindowFrames);
  /// Class probabilities (training diagnostics only).
  std::vector<double> classify_window(const audio::LogMelSpectrogram& feats,
                                      int frame_begin,
                                      int n_frames = kWindowFrames);
};

}  // namespace vocalid::models

#endif  // VOCALID_MODELS_ARCHITECTURES_HPP_
