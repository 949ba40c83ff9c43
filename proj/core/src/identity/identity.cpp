// core/src/identity/identity.cpp

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

#include <algorithm>
#include <cmath>

#include "vocalid/common/error.hpp"
#include "vocalid/identity/identify.hpp"

namespace vocalid::identity {

double l2_norm(const std::vector<double>& v) {
  double acc = 0.0;
  for (double x : v) acc += x * x;
  return std::sqrt(acc);
}

double cosine_distance(const std::vector<double>& a,
                       const std::vector<double>& b) {
  if (a.size() != b.size())
    throw Error(ErrorCode::kShape,
                "embedding dims differ: " + std::to_string(a.size()) + " vs " +
                    std::to_string(b.size()));
  double na = l2_norm(a), nb = l2_norm(b);
  if (na == 0.0 || nb == 0.0)
    throw Error(ErrorCode::kUndefinedDistance,
                "cosine distance of a zero-norm vector");
  double dot = 0.0;
  for (size_t i = 0; i < a.size(); ++i) dot += a[i] * b[i];
  return 1.0 - dot / (na * nb);
}

double cosine_distance(const Embedding& a, const Embedding& b) {
  return cosine_distance(a.v, b.v);
}

std::vector<size_t> window_offsets(size_t len, size_t win, int n) {
  if (len < win)
    throw Error(ErrorCode::kTooShort,
                "clip of " + std::to_string(len) +
                    " samples cannot fill one window of " +
                    std::to_string(win));
  std::vector<size_t> offsets(static_cast<size_t>(n), 0);
  const size_t span = len - win;
  if (n > 1 && span > 0) {
    for (int i = 0; i < n; ++i)
      offsets[static_cast<size_t>(i)] = static_cast<size_t>(
          std::llround(double(span) * double(i) / double(n - 1)));
  }
  return offsets;
}

std::vector<audio::AudioClip> extract_windows(const audio::AudioClip& clip,
                                              int n, double dur_s) {
  const size_t win =
      static_cast<size_t>(std::llround(dur_s * clip.sample_rate_hz));
  auto offsets = window_offsets(clip.samples.size(), win, n);
  std::vector<audio::AudioClip> out;
  out.reserve(offsets.size());
  for (size_t off : offsets) out.push_back(crop(clip, off, win));
  return out;
}

Embedding embed_track(const audio::AudioClip& clip,
                      models::EmbedderModel& embedder, int n_windows,
                      double window_s) {
  auto windows = extract_windows(clip, n_windows, window_s);
  Embedding e;
  e.track_id = clip.source_id;
  e.model_fingerprint = embedder.fingerprint;
  e.v.assign(static_cast<size_t>(embedder.emb_dim), 0.0);
  for (const auto& w : windows) {
    audio::LogMelSpectrogram feats =
        audio::log_mel(w, audio::StftConfig{}, audio::MelConfig{});
    std::vector<double> we = embedder.embed_window(feats, 0, feats.n_frames);
    for (size_t i = 0; i < e.v.size(); ++i) e.v[i] += we[i];
  }
  for (double& x : e.v) x /= static_cast<double>(windows.size());
  return e;
}

double discriminate_track(const audio::AudioClip& clip,
                          models::DiscriminatorModel& d, int n_windows,
                          double window_s) {
  auto windows = extract_windows(clip, n_windows, window_s);
  double acc = 0.0;
  for (const auto& w : windows) {
    audio::LogMelSpectrogram feats =
        audio::log_mel(w, audio::StftConfig{}, audio::MelConfig{});
    acc += d.predict_window(feats, 0, feats.n_frames);
  }
  return acc / static_cast<double>(windows.size());
}

std::vector<std::pair<std::string, double>> identify(
    const audio::AudioClip& clip, models::EmbedderModel& embedder,
    const ProfileDb& db) {
  return db.rank(embed_track(clip, embedder));
}

SingerProfile enroll(const std::string& singer_id,
                     const std::vector<audio::AudioClip>& clips,
                     models::EmbedderModel& embedder, ProfileDb& db) {
  if (clips.empty())
    throw Error(ErrorCode::kInvalidArgument,
                singer_id + ": enrollment needs at least one clip");
  std::vector<Embedding> embeddings;
  embeddings.reserve(clips.size());
  for (const auto& clip : clips)
    embeddings.push_back(embed_track(clip, embedder));
  return db.enroll(singer_id, embeddings);
}

}  // namespace vocalid::identity
