// core/src/vad/vad.cpp

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

#include "vocalid/vad/vad.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "vocalid/common/error.hpp"

namespace vocalid::vad {

namespace {

constexpr double kLogZero = -80.0;       // stand-in for log of zero power
constexpr double kCrossfadeS = 0.010;

double median(std::vector<double> v) {
  size_t n = v.size();
  std::nth_element(v.begin(), v.begin() + n / 2, v.end());
  double hi = v[n / 2];
  if (n % 2 == 1) return hi;
  std::nth_element(v.begin(), v.begin() + n / 2 - 1, v.end());
  return 0.5 * (v[n / 2 - 1] + hi);
}

}  // namespace

size_t ActivityMask::active_count() const {
  size_t n = 0;
  for (bool a : active) n += a ? 1 : 0;
  return n;
}

double ActivityMask::active_fraction() const {
  return active.empty() ? 0.0
                        : double(active_count()) / double(active.size());
}

std::vector<Segment> ActivityMask::segments() const {
  std::vector<Segment> out;
  if (active.empty()) return out;
  double total_s = double(n_samples) / sample_rate_hz;
  size_t start = 0;
  for (size_t i = 1; i <= active.size(); ++i) {
    if (i == active.size() || active[i] != active[start]) {
      Segment seg;
      seg.start_s = start * hop_s;
      // The last frame reaches to the end of the clip.
      seg.end_s = (i == active.size()) ? total_s : i * hop_s;
      seg.active = active[start];
      out.push_back(seg);
      start = i;
    }
  }
  return out;
}

ActivityMask detect_activity(const audio::AudioClip& clip,
                             const VadConfig& cfg) {
  if (clip.sample_rate_hz <= 0)
    throw Error(ErrorCode::kInvalidArgument, "clip has no sample rate");
  if (!(cfg.frame_ms >= cfg.hop_ms) || !(cfg.hop_ms > 0))
    throw Error(ErrorCode::kInvalidArgument, "need frame_ms >= hop_ms > 0");
  if (cfg.hangover_frames < 0)
    throw Error(ErrorCode::kInvalidArgument, "hangover_frames must be >= 0");

  const int frame = int(std::lround(cfg.frame_ms * clip.sample_rate_hz / 1000));
  const int hop = int(std::lround(cfg.hop_ms * clip.sample_rate_hz / 1000));
  if (clip.samples.size() < size_t(frame))
    throw Error(ErrorCode::kTooShort,
                clip.source_id + ": shorter than one VAD frame");

  const int n_frames = int((clip.samples.size() - frame) / hop) + 1;

  std::vector<double> log_e(n_frames);
  for (int t = 0; t < n_frames; ++t) {
    const double* x = clip.samples.data() + size_t(t) * hop;
    double p = 0.0;
    for (int i = 0; i < frame; ++i) p += x[i] * x[i];
    p /= frame;
    log_e[t] = p > 0.0 ? std::log10(p) * 10.0 : kLogZero;  // dB
  }

  // Moving-average smoothing.
  std::vector<double> smooth(n_frames);
  const int half = std::max(0, cfg.smooth_frames / 2);
  for (int t = 0; t < n_frames; ++t) {
    int lo = std::max(0, t - half), hi = std::min(n_frames - 1, t + half);
    double acc = 0.0;
    for (int i = lo; i <= hi; ++i) acc += log_e[i];
    smooth[t] = acc / (hi - lo + 1);
  }

  const double thr_db = median(smooth) + cfg.energy_threshold_db;
  const double floor_db =
      cfg.floor_power > 0.0 ? std::log10(cfg.floor_power) * 10.0 : kLogZero;

  std::vector<bool> act(n_frames);
  for (int t = 0; t < n_frames; ++t)
    act[t] = smooth[t] > thr_db && smooth[t] > floor_db;

  // Hangover: keep frames for a while after each active run.
  if (cfg.hangover_frames > 0) {
    int countdown = 0;
    for (int t = 0; t < n_frames; ++t) {
      if (act[t]) {
        countdown = cfg.hangover_frames;
      } else if (countdown > 0) {
        act[t] = true;
        --countdown;
      }
    }
  }

  // Drop active segments shorter than min_segment_ms.
  const int min_frames = int(std::lround(cfg.min_segment_ms / cfg.hop_ms));
  if (min_frames > 1) {
    int run_start = -1;
    for (int t = 0; t <= n_frames; ++t) {
      bool a = t < n_frames && act[t];
      if (a && run_start < 0) run_start = t;
      if (!a && run_start >= 0) {
        if (t - run_start < min_frames)
          for (int i = run_start; i < t; ++i) act[i] = false;
        run_start = -1;
      }
    }
  }

  ActivityMask mask;
  mask.active = std::move(act);
  mask.frame_s = cfg.frame_ms / 1000.0;
  mask.hop_s = cfg.hop_ms / 1000.0;
  mask.n_samples = clip.samples.size();
  mask.sample_rate_hz = clip.sample_rate_hz;
  return mask;
}

TrimResult trim_nonvocal(const audio::AudioClip& clip,
                         const ActivityMask& mask) {
  if (mask.n_samples != clip.samples.size() ||
      mask.sample_rate_hz != clip.sample_rate_hz)
    throw Error(ErrorCode::kInvalidArgument,
                "mask was not derived from this clip");
  if (mask.active_count() == 0)
    throw Error(ErrorCode::kEmptyResult,
                clip.source_id + ": no active segments");

  // Active sample ranges from the segment list.
  struct Range { size_t begin, end; };
  std::vector<Range> ranges;
  for (const Segment& seg : mask.segments()) {
    if (!seg.active) continue;
    size_t b = size_t(std::lround(seg.start_s * clip.sample_rate_hz));
    size_t e = size_t(std::lround(seg.end_s * clip.sample_rate_hz));
    e = std::min(e, clip.samples.size());
    if (e > b) ranges.push_back({b, e});
  }

  TrimResult out;
  out.clip.sample_rate_hz = clip.sample_rate_hz;
  out.clip.source_id = clip.source_id;

  if (ranges.size() == 1 && ranges[0].begin == 0 &&
      ranges[0].end == clip.samples.size()) {
    out.clip.samples = clip.samples;  // fully active: no joins, no fades
    out.removed_fraction = 0.0;
    return out;
  }

  const size_t fade = size_t(std::lround(kCrossfadeS * clip.sample_rate_hz));
  std::vector<double>& y = out.clip.samples;
  for (size_t r = 0; r < ranges.size(); ++r) {
    const double* x = clip.samples.data();
    size_t b = ranges[r].begin, e = ranges[r].end;
    if (r == 0) {
      y.insert(y.end(), x + b, x + e);
      continue;
    }
    size_t overlap = std::min({fade, y.size(), e - b});
    // Linear crossfade: previous tail fades out while this head fades in.
    for (size_t i = 0; i < overlap; ++i) {
      double w = double(i + 1) / double(overlap + 1);
      size_t yi = y.size() - overlap + i;
      y[yi] = y[yi] * (1.0 - w) + x[b + i] * w;
    }
    y.insert(y.end(), x + b + overlap, x + e);
  }

  out.removed_fraction =
      1.0 - double(y.size()) / double(clip.samples.size());
  return out;
}

TrimResult trim_nonvocal(const audio::AudioClip& clip, const VadConfig& cfg) {
  return trim_nonvocal(clip, detect_activity(clip, cfg));
}

std::string format_segments(const ActivityMask& mask) {
  std::ostringstream os;
  os.precision(6);
  for (const Segment& seg : mask.segments())
    os << seg.start_s << "\t" << seg.end_s << "\t" << (seg.active ? 1 : 0)
       << "\n";
  return os.str();
}

}  // namespace vocalid::vad
