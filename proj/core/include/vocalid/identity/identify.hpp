// core/include/vocalid/identity/identify.hpp

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

#ifndef VOCALID_IDENTITY_IDENTIFY_HPP_
#define VOCALID_IDENTITY_IDENTIFY_HPP_

#include "vocalid/identity/profile_db.hpp"
#include "vocalid/identity/windows.hpp"
#include "vocalid/models/architectures.hpp"

namespace vocalid::identity {

/// Track embedding: the plain mean of the five window embeddings (no
/// normalization before averaging).  Errors: kTooShort.
Embedding embed_track(const audio::AudioClip& clip,
                      models::EmbedderModel& embedder, int n_windows = 5,
                      double window_s = 10.0);

/// Stage-1 score: window predictions averaged into one track probability.
double discriminate_track(const audio::AudioClip& clip,
                          models::DiscriminatorModel& d, int n_windows = 5,
                          double window_s = 10.0);

/// embed_track + exhaustive cosine ranking against the database.
std::vector<std::pair<std::string, double>> identify(
    const audio::AudioClip& clip, models::EmbedderModel& embedder,
    const ProfileDb& db);

/// Enrolls one singer from clips; the profile replaces any existing one.
SingerProfile enroll(const std::string& singer_id,
                     const std::vector<audio::AudioClip>& clips,
                     models::EmbedderModel& embedder, ProfileDb& db);

}  // namespace vocalid::identity

#endif  // VOCALID_IDENTITY_IDENTIFY_HPP_
