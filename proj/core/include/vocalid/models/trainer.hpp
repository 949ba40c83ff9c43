// core/include/vocalid/models/trainer.hpp

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

#ifndef VOCALID_MODELS_TRAINER_HPP_
#define VOCALID_MODELS_TRAINER_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "vocalid/models/augment.hpp"
#include "vocalid/pipeline/manifest.hpp"

namespace vocalid::models {

enum class ModelKind { kDiscriminator, kEmbedder };

struct TrainConfig {
  int batch_size = 64;
  double lr_start = 1e-4;
  double lr_end = 1e-7;
  double weight_decay = 1e-4;  // 1e-4 for D, 1e-5 for S (see defaults)
  int early_stop_patience = 10;
  int max_epochs = 30;
  AugmentConfig augment;       // prob 0.35; disabled for D by default
  int windows_per_track = 4;   // examples drawn per track per epoch
  uint64_t seed = 1;
  int threads = 0;             // 0 = hardware
  std::string variant = "fullmix";
  bool vad_trim = false;       // trim non-vocal material before windows
  double adam_beta1 = 0.9;
  double adam_beta2 = 0.999;
  double adam_eps = 1e-8;
  int embedder_channels = 24;
  int emb_dim = 64;
};

/// Paper-regime defaults per model: the discriminator trains on full mixes
/// without augmentation at 1e-4 decay; the embedder trains on trimmed
/// vocals with augmentation at 1e-5 decay.
TrainConfig default_train_config(ModelKind kind);

struct EpochRecord {
  int epoch = 0;          // 1-based
  int64_t step = 0;       // cumulative optimizer steps
  double lr = 0.0;        // last step's learning rate
  double train_loss = 0.0;
  double val_metric = 0.0;
  bool improved = false;
  int aug_fallbacks = 0;  // background drawn with no beds available
};

struct TrainResult {
  std::vector<uint8_t> archive;  // best-validation weights, serialized
  std::vector<EpochRecord> log;
  int best_epoch = 0;
  double best_val_metric = 0.0;
  int n_classes = 0;                     // embedder only
  std::vector<std::string> class_names;  // singer ids, classifier order
  std::string log_text;                  // formatted training log
};

/// Trains D (BCE over authentic/deepfake with balanced oversampling) or S
/// (cross-entropy over singers, authentic tracks only) on the manifest's
/// train split, validating per epoch on the val split.  Deterministic for a
/// fixed (manifest, config, seed) regardless of thread count.
///
/// Errors: kConfig (no train/val rows), kInvalidTask (fewer than two
/// singers for S), kCannotBalance (a class missing for D).
TrainResult train(ModelKind kind, const pipeline::Manifest& manifest,
                  const TrainConfig& cfg, const AugmentAssets& assets);

/// Line-oriented schema: "# key=value" header lines, then one record per
/// epoch: "epoch=<n> step=<s> lr=<g> train_loss=<g> val_metric=<g>
/// best=<0|1> aug_fallbacks=<n>".
std::string format_training_log(ModelKind kind, const TrainConfig& cfg,
                                const std::vector<EpochRecord>& records,
                                int best_epoch, double best_val);

}  // namespace vocalid::models

#endif  // VOCALID_MODELS_TRAINER_HPP_
