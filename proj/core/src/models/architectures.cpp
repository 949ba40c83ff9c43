// core/src/models/architectures.cpp

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

#include "vocalid/models/architectures.hpp"

#include <cmath>

#include "vocalid/common/error.hpp"
#include "vocalid/common/io.hpp"

namespace vocalid::models {

namespace {

void normalize_window(std::vector<double>& v) {
  if (v.empty()) return;
  double mean = 0.0;
  for (double x : v) mean += x;
  mean /= static_cast<double>(v.size());
  double var = 0.0;
  for (double x : v) {
    double d = x - mean;
    var += d * d;
  }
  var /= static_cast<double>(v.size());
  double inv = 1.0 / std::sqrt(var + 1e-6);
  for (double& x : v) x = (x - mean) * inv;
}

int wrap_frame(int t, int n) { return t % n; }

const nn::NamedTensor& find_tensor(const std::vector<nn::NamedTensor>& arc,
                                   const std::string& name) {
  for (const auto& t : arc)
    if (t.name == name) return t;
  throw Error(ErrorCode::kIncompatibleWeights,
              "archive has no tensor named '" + name + "'");
}

}  // namespace

nn::Tensor feature_window_2d(const audio::LogMelSpectrogram& feats,
                             int frame_begin, int n_frames) {
  if (feats.n_frames <= 0)
    throw Error(ErrorCode::kTooShort, "empty spectrogram");
  std::vector<double> v(static_cast<size_t>(n_frames) * feats.n_mels);
  for (int t = 0; t < n_frames; ++t) {
    int src = wrap_frame(frame_begin + t, feats.n_frames);
    for (int m = 0; m < feats.n_mels; ++m)
      v[static_cast<size_t>(t) * feats.n_mels + m] = feats.at(src, m);
  }
  normalize_window(v);
  return nn::Tensor({1, n_frames, feats.n_mels}, std::move(v));
}

nn::Tensor feature_window_1d(const audio::LogMelSpectrogram& feats,
                             int frame_begin, int n_frames) {
  if (feats.n_frames <= 0)
    throw Error(ErrorCode::kTooShort, "empty spectrogram");
  std::vector<double> v(static_cast<size_t>(n_frames) * feats.n_mels);
  // [mel, time] layout for the 1-d stack.
  for (int t = 0; t < n_frames; ++t) {
    int src = wrap_frame(frame_begin + t, feats.n_frames);
    for (int m = 0; m < feats.n_mels; ++m)
      v[static_cast<size_t>(m) * n_frames + t] = feats.at(src, m);
  }
  normalize_window(v);
  return nn::Tensor({feats.n_mels, n_frames}, std::move(v));
}

// ---------------------------------------------------------------------------
// Discriminator
// ---------------------------------------------------------------------------

namespace {

nn::Network build_discriminator(Rng* rng) {
  using nn::LayerSpec;
  nn::Network net;
  net.add(LayerSpec::conv2d(1, 12, 5, true), "conv1", rng);
  net.add(LayerSpec::mfm(12), "mfm1");
  net.add(LayerSpec::max_pool2d(2), "pool1");
  net.add(LayerSpec::conv2d(6, 16, 3, true), "conv2", rng);
  net.add(LayerSpec::mfm(16), "mfm2");
  net.add(LayerSpec::max_pool2d(2), "pool2");
  net.add(LayerSpec::conv2d(8, 24, 3, true), "conv3", rng);
  net.add(LayerSpec::mfm(24), "mfm3");
  net.add(LayerSpec::max_pool2d(2), "pool3");
  net.add(LayerSpec::conv2d(12, 24, 3, true), "conv4", rng);
  net.add(LayerSpec::mfm(24), "mfm4");
  net.add(LayerSpec::max_pool2d(2), "pool4");
  net.add(LayerSpec::mean_pool(), "gap");
  net.add(LayerSpec::dense(12, 16), "fc1", rng);
  net.add(LayerSpec::mfm(16), "mfm5");
  net.add(LayerSpec::dense(8, 1), "fc2", rng);
  net.add(LayerSpec::sigmoid(), "out");
  return net;
}

}  // namespace

DiscriminatorModel DiscriminatorModel::create(uint64_t seed) {
  Rng rng(seed);
  DiscriminatorModel model;
  model.net = build_discriminator(&rng);
  return model;
}

DiscriminatorModel DiscriminatorModel::from_archive_bytes(
    const std::vector<uint8_t>& bytes) {
  DiscriminatorModel model;
  model.net = build_discriminator(nullptr);
  nn::load_weights(model.net, nn::parse_archive(bytes));
  return model;
}

DiscriminatorModel DiscriminatorModel::from_archive(const std::string& path) {
  return from_archive_bytes(read_binary_file(path));
}

DiscriminatorModel DiscriminatorModel::clone() const {
  DiscriminatorModel copy;
  copy.net = net.clone();
  return copy;
}

double DiscriminatorModel::predict_window(
    const audio::LogMelSpectrogram& feats, int frame_begin, int n_frames) {
  nn::Tensor x = feature_window_2d(feats, frame_begin, n_frames);
  nn::Tensor y = net.forward(x, /*training=*/false);
  return y[0];
}

// ---------------------------------------------------------------------------
// Embedder
// ---------------------------------------------------------------------------

namespace {

nn::Network build_embedder(Rng* rng, int n_classes, int channels,
                           int emb_dim, size_t* embed_prefix) {
  using nn::LayerSpec;
  nn::Network net;
  net.add(LayerSpec::conv1d(80, channels, 5, 1, true), "frame_conv", rng);
  net.add(LayerSpec::relu(), "frame_relu");
  const int se_hidden = std::max(2, channels / 4);
  for (int d = 1; d <= 3; ++d) {
    net.add(LayerSpec::dilated_tdnn_block(channels, 3, d),
            "block" + std::to_string(d), rng);
    net.add(LayerSpec::se_block(channels, se_hidden),
            "se" + std::to_string(d), rng);
  }
  net.add(LayerSpec::attentive_stats_pool(channels, 16), "stats_pool", rng);
  net.add(LayerSpec::dense(2 * channels, emb_dim), "embedding", rng);
  *embed_prefix = net.num_layers();  // embedding = linear tap here
  net.add(LayerSpec::relu(), "head_relu");
  net.add(LayerSpec::dense(emb_dim, n_classes), "classifier", rng);
  net.add(LayerSpec::softmax(), "softmax");
  return net;
}

}  // namespace

EmbedderModel EmbedderModel::create(uint64_t seed, int n_classes,
                                    int channels, int emb_dim) {
  if (n_classes < 2)
    throw Error(ErrorCode::kInvalidTask,
                "embedder needs at least 2 classes, got " +
                    std::to_string(n_classes));
  Rng rng(seed);
  EmbedderModel model;
  model.net = build_embedder(&rng, n_classes, channels, emb_dim,
                             &model.embed_prefix);
  model.emb_dim = emb_dim;
  model.n_classes = n_classes;
  model.channels = channels;
  model.refresh_fingerprint();
  return model;
}

EmbedderModel EmbedderModel::from_archive_bytes(
    const std::vector<uint8_t>& bytes) {
  auto archive = nn::parse_archive(bytes);
  // Architecture hyperparameters are implied by the stored shapes.
  const auto& frame_conv = find_tensor(archive, "frame_conv/weight");
  const auto& embedding = find_tensor(archive, "embedding/weight");
  const auto& classifier = find_tensor(archive, "classifier/weight");
  if (frame_conv.shape.size() != 2 || embedding.shape.size() != 2 ||
      classifier.shape.size() != 2)
    throw Error(ErrorCode::kIncompatibleWeights,
                "unexpected tensor ranks in embedder archive");

  EmbedderModel model;
  model.channels = frame_conv.shape[0];
  model.emb_dim = embedding.shape[0];
  model.n_classes = classifier.shape[0];
  model.net = build_embedder(nullptr, model.n_classes, model.channels,
                             model.emb_dim, &model.embed_prefix);
  nn::load_weights(model.net, archive);
  model.refresh_fingerprint();
  return model;
}

EmbedderModel EmbedderModel::from_archive(const std::string& path) {
  return from_archive_bytes(read_binary_file(path));
}

EmbedderModel EmbedderModel::clone() const {
  EmbedderModel copy;
  copy.net = net.clone();
  copy.embed_prefix = embed_prefix;
  copy.emb_dim = emb_dim;
  copy.n_classes = n_classes;
  copy.channels = channels;
  copy.fingerprint = fingerprint;
  return copy;
}

void EmbedderModel::refresh_fingerprint() {
  fingerprint = nn::weights_fingerprint(net);
}

std::vector<double> EmbedderModel::embed_window(
    const audio::LogMelSpectrogram& feats, int frame_begin, int n_frames) {
  nn::Tensor x = feature_window_1d(feats, frame_begin, n_frames);
  nn::Tensor e = net.forward_prefix(x, embed_prefix, /*training=*/false);
  return e.vec();
}

std::vector<double> EmbedderModel::classify_window(
    const audio::LogMelSpectrogram& feats, int frame_begin, int n_frames) {
  nn::Tensor x = feature_window_1d(feats, frame_begin, n_frames);
  nn::Tensor y = net.forward(x, /*training=*/false);
  return y.vec();
}

}  // namespace vocalid::models
