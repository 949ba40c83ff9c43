// core/src/models/trainer.cpp

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

#include "vocalid/models/trainer.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include "vocalid/audio/resample.hpp"
#include "vocalid/common/error.hpp"
#include "vocalid/common/parallel.hpp"
#include "vocalid/identity/windows.hpp"
#include "vocalid/models/architectures.hpp"
#include "vocalid/models/optimizer.hpp"
#include "vocalid/models/sampler.hpp"
#include "vocalid/models/schedule.hpp"
#include "vocalid/vad/vad.hpp"

namespace vocalid::models {

namespace {

using audio::AudioClip;
using audio::LogMelSpectrogram;

struct DataRow {
  const pipeline::ManifestRow* row = nullptr;
  std::string path;  // resolved
  int label = 0;     // class index (S) or deepfake flag (D)
  LogMelSpectrogram feats;  // full-track features (after optional trimming)
};

struct ExamplePlan {
  int row_index = 0;
  int frame_begin = 0;
  AugmentDraw aug;
};

AudioClip load_prepared(const std::string& path, bool vad_trim) {
  AudioClip clip = audio::load_and_resample(path);
  if (vad_trim) {
    // Fall back to the untrimmed clip when nothing is active.
    try {
      return vad::trim_nonvocal(clip, vad::VadConfig{}).clip;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kEmptyResult) throw;
    }
  }
  return clip;
}

/// Gathers the flat parameter vector; scatter writes it back.
std::vector<double> gather_params(
    const std::vector<std::pair<std::string, nn::Tensor*>>& params) {
  std::vector<double> flat;
  for (const auto& [name, t] : params)
    flat.insert(flat.end(), t->vec().begin(), t->vec().end());
  return flat;
}

void scatter_params(const std::vector<double>& flat,
                    std::vector<std::pair<std::string, nn::Tensor*>>& params) {
  size_t pos = 0;
  for (auto& [name, t] : params) {
    std::copy(flat.begin() + pos, flat.begin() + pos + t->vec().size(),
              t->vec().begin());
    pos += t->vec().size();
  }
}

void gather_grads(std::vector<std::pair<std::string, nn::Tensor*>>& params,
                  std::vector<double>* out) {
  out->clear();
  for (auto& [name, t] : params) {
    const auto& g = t->grad();
    out->insert(out->end(), g.begin(), g.end());
  }
}

/// Evenly spaced window starts in frame units; a short track yields
/// all-zero offsets (the window extractor tiles).
std::vector<int> val_window_offsets(int n_frames, int n) {
  if (n_frames <= kWindowFrames) return std::vector<int>(size_t(n), 0);
  auto offs = identity::window_offsets(size_t(n_frames), kWindowFrames, n);
  return std::vector<int>(offs.begin(), offs.end());
}

struct LossGrad {
  double loss = 0.0;
  nn::Tensor grad;
};

LossGrad bce_loss(const nn::Tensor& prob, int label) {
  double p = std::clamp(prob[0], 1e-7, 1.0 - 1e-7);
  LossGrad out;
  out.loss = label == 1 ? -std::log(p) : -std::log(1.0 - p);
  out.grad = nn::Tensor({1});
  out.grad[0] = label == 1 ? -1.0 / p : 1.0 / (1.0 - p);
  return out;
}

LossGrad cross_entropy_loss(const nn::Tensor& probs, int label) {
  double p = std::max(probs[label], 1e-12);
  LossGrad out;
  out.loss = -std::log(p);
  out.grad = nn::Tensor(probs.shape());
  out.grad[label] = -1.0 / p;
  return out;
}

}  // namespace

TrainConfig default_train_config(ModelKind kind) {
  TrainConfig cfg;
  if (kind == ModelKind::kDiscriminator) {
    cfg.weight_decay = 1e-4;
    cfg.variant = "fullmix";
    cfg.vad_trim = false;
    cfg.augment.prob = 0.0;  // D keeps its training regime simple
    cfg.max_epochs = 20;
    cfg.windows_per_track = 2;
  } else {
    cfg.weight_decay = 1e-5;
    cfg.variant = "vocals";
    cfg.vad_trim = true;
    cfg.augment.prob = 0.35;
    cfg.max_epochs = 30;
    cfg.windows_per_track = 4;
  }
  return cfg;
}

TrainResult train(ModelKind kind, const pipeline::Manifest& manifest,
                  const TrainConfig& cfg, const AugmentAssets& assets) {
  const bool is_d = kind == ModelKind::kDiscriminator;
  const int threads = resolve_threads(cfg.threads);

  // ----- dataset ----------------------------------------------------------
  auto collect = [&](const std::string& split) {
    std::vector<DataRow> rows;
    for (const auto* r : manifest.select(split, cfg.variant)) {
      if (!is_d && r->deepfake) continue;  // S trains on authentic only
      DataRow d;
      d.row = r;
      d.path = manifest.resolve_path(*r);
      rows.push_back(std::move(d));
    }
    return rows;
  };
  std::vector<DataRow> train_rows = collect("train");
  std::vector<DataRow> val_rows = collect("val");
  if (train_rows.empty())
    throw Error(ErrorCode::kConfig, "manifest has no usable train rows");
  if (val_rows.empty())
    throw Error(ErrorCode::kConfig, "manifest has no validation split");

  std::vector<std::string> class_names;
  if (is_d) {
    for (auto& d : train_rows) d.label = d.row->deepfake ? 1 : 0;
    for (auto& d : val_rows) d.label = d.row->deepfake ? 1 : 0;
    bool has[2] = {false, false};
    for (auto& d : val_rows) has[d.label] = true;
    if (!has[0] || !has[1])
      throw Error(ErrorCode::kConfig,
                  "validation split needs both authentic and deepfake rows");
  } else {
    std::map<std::string, int> index;
    for (const auto& d : train_rows)
      index.emplace(d.row->singer_id, 0);
    if (index.size() < 2)
      throw Error(ErrorCode::kInvalidTask,
                  "singer classification needs at least 2 singers, got " +
                      std::to_string(index.size()));
    int next = 0;
    for (auto& [id, idx] : index) {
      idx = next++;
      class_names.push_back(id);
    }
    for (auto& d : train_rows) d.label = index.at(d.row->singer_id);
    for (auto& d : val_rows) {
      auto it = index.find(d.row->singer_id);
      if (it == index.end())
        throw Error(ErrorCode::kConfig,
                    "validation singer " + d.row->singer_id +
                        " absent from the train split");
      d.label = it->second;
    }
  }

  // Full-track features, computed once up front.
  {
    std::vector<DataRow*> all;
    for (auto& d : train_rows) all.push_back(&d);
    for (auto& d : val_rows) all.push_back(&d);
    parallel_for(all.size(), threads, [&](size_t i) {
      AudioClip clip = load_prepared(all[i]->path, cfg.vad_trim);
      all[i]->feats =
          audio::log_mel(clip, audio::StftConfig{}, audio::MelConfig{});
    });
  }

  // ----- model ------------------------------------------------------------
  nn::Network master;
  if (is_d) {
    master = DiscriminatorModel::create(mix_seed(cfg.seed, 0xD15C)).net;
  } else {
    master = EmbedderModel::create(mix_seed(cfg.seed, 0x53ED),
                                   static_cast<int>(class_names.size()),
                                   cfg.embedder_channels, cfg.emb_dim)
                 .net;
  }
  auto master_params = master.parameters();
  std::vector<double> flat = gather_params(master_params);
  const size_t n_params = flat.size();

  AdamW::Config adam_cfg;
  adam_cfg.beta1 = cfg.adam_beta1;
  adam_cfg.beta2 = cfg.adam_beta2;
  adam_cfg.eps = cfg.adam_eps;
  adam_cfg.weight_decay = cfg.weight_decay;
  AdamW adam(n_params, adam_cfg);

  std::vector<nn::Network> clones;
  std::vector<std::vector<std::pair<std::string, nn::Tensor*>>> clone_params;
  for (int w = 0; w < threads; ++w) clones.push_back(master.clone());
  for (auto& c : clones) clone_params.push_back(c.parameters());

  // ----- schedule ---------------------------------------------------------
  const int half = cfg.batch_size / 2;
  int64_t steps_per_epoch;
  if (is_d) {
    int64_t n0 = 0, n1 = 0;
    for (const auto& d : train_rows) (d.label == 0 ? n0 : n1) += 1;
    if (n0 == 0 || n1 == 0)
      throw Error(ErrorCode::kCannotBalance,
                  "training split lacks one authenticity class");
    int64_t major = std::max(n0, n1) * cfg.windows_per_track;
    steps_per_epoch = (major + half - 1) / half;
  } else {
    int64_t n = int64_t(train_rows.size()) * cfg.windows_per_track;
    steps_per_epoch = (n + cfg.batch_size - 1) / cfg.batch_size;
  }
  const int64_t total_steps = steps_per_epoch * cfg.max_epochs;

  // ----- training ---------------------------------------------------------
  const bool assets_available = !assets.beds.empty();
  const size_t margin_samples = static_cast<size_t>(
      std::ceil(kWindowSamples *
                std::pow(2.0, cfg.augment.pitch_semitones / 12.0))) + 512;

  EarlyStopper stopper(cfg.early_stop_patience);
  std::vector<double> best_flat = flat;
  std::vector<EpochRecord> records;
  int64_t global_step = 0;
  double last_lr = cfg.lr_start;

  for (int epoch = 1; epoch <= cfg.max_epochs; ++epoch) {
    Rng epoch_rng(mix_seed(cfg.seed, 0xE70C000ULL + uint64_t(epoch)));

    // Example plans for the whole epoch, drawn serially for determinism.
    std::vector<std::vector<ExamplePlan>> batches;
    int aug_fallbacks = 0;
    {
      std::vector<int> pool;  // indices into train_rows, one per example
      for (int k = 0; k < cfg.windows_per_track; ++k)
        for (size_t i = 0; i < train_rows.size(); ++i)
          pool.push_back(static_cast<int>(i));

      std::vector<std::vector<int>> index_batches;
      if (is_d) {
        std::vector<int> labels(pool.size());
        for (size_t i = 0; i < pool.size(); ++i)
          labels[i] = train_rows[size_t(pool[i])].label;
        index_batches =
            oversample_balanced(labels, cfg.batch_size, epoch_rng);
      } else {
        shuffle(pool, epoch_rng);
        std::vector<int> ids(pool.size());
        for (size_t i = 0; i < pool.size(); ++i) ids[i] = int(i);
        for (size_t b = 0; b < pool.size(); b += size_t(cfg.batch_size)) {
          size_t e = std::min(pool.size(), b + size_t(cfg.batch_size));
          index_batches.emplace_back(ids.begin() + b, ids.begin() + e);
        }
      }
      for (const auto& ib : index_batches) {
        std::vector<ExamplePlan> plans;
        plans.reserve(ib.size());
        for (int pi : ib) {
          ExamplePlan plan;
          plan.row_index = pool[size_t(pi)];
          const auto& feats = train_rows[size_t(plan.row_index)].feats;
          int span = std::max(0, feats.n_frames - kWindowFrames);
          plan.frame_begin = int(epoch_rng.uniform_int(int64_t(span) + 1));
          plan.aug = draw_augment(epoch_rng, cfg.augment, assets_available);
          if (plan.aug.fell_back_to_noise) ++aug_fallbacks;
          plans.push_back(plan);
        }
        batches.push_back(std::move(plans));
      }
    }

    double epoch_loss = 0.0;
    int64_t epoch_examples = 0;
    for (const auto& batch : batches) {
      const size_t bn = batch.size();
      for (int w = 0; w < threads; ++w)
        scatter_params(flat, clone_params[size_t(w)]);

      std::vector<std::vector<double>> grads(bn);
      std::vector<double> losses(bn, 0.0);
      parallel_for(size_t(threads), threads, [&](size_t w) {
        std::vector<double> scratch;
        for (size_t i = w; i < bn; i += size_t(threads)) {
          const ExamplePlan& plan = batch[i];
          const DataRow& row = train_rows[size_t(plan.row_index)];
          nn::Network& net = clones[w];

          nn::Tensor x;
          if (plan.aug.kind == AugmentKind::kNone) {
            x = is_d ? feature_window_2d(row.feats, plan.frame_begin)
                     : feature_window_1d(row.feats, plan.frame_begin);
          } else {
            AudioClip track = load_prepared(row.path, cfg.vad_trim);
            AudioClip margin = audio::crop(
                track, size_t(plan.frame_begin) * 160, margin_samples);
            AudioClip window =
                apply_augment(margin, plan.aug, assets, kWindowSamples);
            LogMelSpectrogram feats = audio::log_mel(
                window, audio::StftConfig{}, audio::MelConfig{});
            x = is_d ? feature_window_2d(feats, 0)
                     : feature_window_1d(feats, 0);
          }

          net.zero_grad();
          nn::Tensor y = net.forward(x, /*training=*/true);
          LossGrad lg = is_d ? bce_loss(y, row.label)
                             : cross_entropy_loss(y, row.label);
          net.backward(lg.grad);
          gather_grads(clone_params[w], &grads[i]);
          losses[i] = lg.loss;
        }
      });

      // Ordered reduction keeps results independent of the thread count.
      std::vector<double> grad(n_params, 0.0);
      for (size_t i = 0; i < bn; ++i) {
        const auto& g = grads[i];
        for (size_t p = 0; p < n_params; ++p) grad[p] += g[p];
        epoch_loss += losses[i];
      }
      const double inv_bn = 1.0 / double(bn);
      for (double& g : grad) g *= inv_bn;
      epoch_examples += int64_t(bn);

      last_lr = cosine_lr(global_step, total_steps, cfg.lr_start, cfg.lr_end);
      adam.step(last_lr, flat, grad);
      ++global_step;
    }
    scatter_params(flat, master_params);

    // ----- validation (per-row clones; rows are dynamically scheduled) ----
    double val_metric = 0.0;
    if (is_d) {
      std::vector<double> track_prob(val_rows.size(), 0.0);
      parallel_for(val_rows.size(), threads, [&](size_t i) {
        nn::Network net = master.clone();
        const DataRow& row = val_rows[i];
        auto offsets = val_window_offsets(row.feats.n_frames, 5);
        double acc = 0.0;
        for (int off : offsets) {
          nn::Tensor x = feature_window_2d(row.feats, off);
          acc += net.forward(x, false)[0];
        }
        track_prob[i] = acc / double(offsets.size());
      });
      int64_t tp = 0, tn = 0, fp = 0, fn = 0;
      for (size_t i = 0; i < val_rows.size(); ++i) {
        bool pred_fake = track_prob[i] >= 0.5;
        if (val_rows[i].label == 1)
          (pred_fake ? tp : fn) += 1;
        else
          (pred_fake ? fp : tn) += 1;
      }
      double tpr = tp + fn > 0 ? double(tp) / double(tp + fn) : 0.0;
      double tnr = tn + fp > 0 ? double(tn) / double(tn + fp) : 0.0;
      val_metric = 0.5 * (tpr + tnr);  // balanced accuracy
    } else {
      std::vector<int> correct(val_rows.size(), 0), total(val_rows.size(), 0);
      parallel_for(val_rows.size(), threads, [&](size_t i) {
        nn::Network net = master.clone();
        const DataRow& row = val_rows[i];
        auto offsets = val_window_offsets(row.feats.n_frames, 5);
        for (int off : offsets) {
          nn::Tensor x = feature_window_1d(row.feats, off);
          nn::Tensor probs = net.forward(x, false);
          int arg = 0;
          for (int64_t k = 1; k < probs.size(); ++k)
            if (probs[k] > probs[arg]) arg = int(k);
          total[i] += 1;
          if (arg == row.label) correct[i] += 1;
        }
      });
      int64_t c = 0, t = 0;
      for (size_t i = 0; i < val_rows.size(); ++i) {
        c += correct[i];
        t += total[i];
      }
      val_metric = t > 0 ? double(c) / double(t) : 0.0;  // top-1 window acc
    }

    EpochRecord rec;
    rec.epoch = epoch;
    rec.step = global_step;
    rec.lr = last_lr;
    rec.train_loss = epoch_examples > 0
                         ? epoch_loss / double(epoch_examples)
                         : 0.0;
    rec.val_metric = val_metric;
    rec.aug_fallbacks = aug_fallbacks;
    rec.improved = stopper.observe(epoch, val_metric);
    if (rec.improved) best_flat = flat;
    records.push_back(rec);
    if (stopper.should_stop()) break;
  }

  // Best-validation weights win, never a later epoch.
  scatter_params(best_flat, master_params);

  TrainResult result;
  result.archive = nn::serialize_weights(master);
  result.log = records;
  result.best_epoch = stopper.best_epoch();
  result.best_val_metric = stopper.best_metric();
  result.n_classes = static_cast<int>(class_names.size());
  result.class_names = class_names;
  result.log_text = format_training_log(kind, cfg, records,
                                        result.best_epoch,
                                        result.best_val_metric);
  return result;
}

std::string format_training_log(ModelKind kind, const TrainConfig& cfg,
                                const std::vector<EpochRecord>& records,
                                int best_epoch, double best_val) {
  std::ostringstream os;
  os.precision(9);
  os << "# vocalid training log v1\n";
  os << "# model=" << (kind == ModelKind::kDiscriminator ? "discriminator"
                                                         : "embedder")
     << " seed=" << cfg.seed << " batch_size=" << cfg.batch_size
     << " lr_start=" << cfg.lr_start << " lr_end=" << cfg.lr_end
     << " weight_decay=" << cfg.weight_decay
     << " patience=" << cfg.early_stop_patience
     << " max_epochs=" << cfg.max_epochs
     << " augment_prob=" << cfg.augment.prob
     << " windows_per_track=" << cfg.windows_per_track
     << " variant=" << cfg.variant << " vad_trim=" << (cfg.vad_trim ? 1 : 0)
     << "\n";
  for (const auto& r : records)
    os << "epoch=" << r.epoch << " step=" << r.step << " lr=" << r.lr
       << " train_loss=" << r.train_loss << " val_metric=" << r.val_metric
       << " best=" << (r.improved ? 1 : 0)
       << " aug_fallbacks=" << r.aug_fallbacks << "\n";
  os << "# best_epoch=" << best_epoch << " best_val_metric=" << best_val
     << "\n";
  return os.str();
}

}  // namespace vocalid::models
