// core/include/vocalid/vad/vad.hpp

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

#ifndef VOCALID_VAD_VAD_HPP_
#define VOCALID_VAD_VAD_HPP_

#include <string>
#include <vector>

#include "vocalid/audio/clip.hpp"

namespace vocalid::vad {

/// Energy detector settings.  A frame is active when its smoothed log-energy
/// exceeds the clip's median log-energy plus energy_threshold_db (a negative
/// offset), and also clears an absolute power floor so that digital silence
/// can never be active regardless of the median.
struct VadConfig {
  double frame_ms = 25.0;
  double hop_ms = 10.0;
  double energy_threshold_db = -30.0;  // relative to the median
  int hangover_frames = 5;             // extends active runs
  double min_segment_ms = 200.0;       // shorter active segments are dropped
  int smooth_frames = 5;               // moving-average span for log-energy
  double floor_power = 1e-7;           // absolute activity floor (~ -70 dBFS)
};

struct Segment {
  double start_s = 0.0;
  double end_s = 0.0;
  bool active = false;
};

struct ActivityMask {
  std::vector<bool> active;  // one flag per VAD frame
  double frame_s = 0.0;      // hop in seconds
  double hop_s = 0.0;
  size_t n_samples = 0;      // length of the clip the mask was derived from
  int sample_rate_hz = 0;

  size_t active_count() const;
  double active_fraction() const;
  /// Contiguous runs, alternating active/inactive, covering the clip.
  std::vector<Segment> segments() const;
};

/// Errors: kTooShort when the clip holds less than one VAD frame.
ActivityMask detect_activity(const audio::AudioClip& clip,
                             const VadConfig& cfg);

struct TrimResult {
  audio::AudioClip clip;
  double removed_fraction = 0.0;
};

/// Concatenates the active regions with 10 ms linear crossfades at the
/// joins.  Errors: kInvalidArgument if the mask does not match the clip,
/// kEmptyResult when nothing is active.
TrimResult trim_nonvocal(const audio::AudioClip& clip,
                         const ActivityMask& mask);

/// detect + trim in one step.
TrimResult trim_nonvocal(const audio::AudioClip& clip, const VadConfig& cfg);

/// Text export: one "start_s\tend_s\tactive" line per segment.
std::string format_segments(const ActivityMask& mask);

}  // namespace vocalid::vad

#endif  // VOCALID_VAD_VAD_HPP_
