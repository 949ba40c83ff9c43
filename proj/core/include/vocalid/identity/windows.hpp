// core/include/vocalid/identity/windows.hpp

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

#ifndef VOCALID_IDENTITY_WINDOWS_HPP_
#define VOCALID_IDENTITY_WINDOWS_HPP_

#include <cstddef>
#include <vector>

#include "vocalid/audio/clip.hpp"

namespace vocalid::identity {

/// n start offsets evenly spaced over [0, len - win]; all zero when the
/// span is zero.  Deterministic.  Requires len >= win.
std::vector<size_t> window_offsets(size_t len, size_t win, int n);

/// Five (by default) 10-second inference windows, evenly spaced.
/// Errors: kTooShort when the clip is shorter than one window.
std::vector<audio::AudioClip> extract_windows(const audio::AudioClip& clip,
                                              int n = 5, double dur_s = 10.0);

}  // namespace vocalid::identity

#endif  // VOCALID_IDENTITY_WINDOWS_HPP_
