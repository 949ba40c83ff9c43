// core/include/vocalid/identity/embedding.hpp

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

#ifndef VOCALID_IDENTITY_EMBEDDING_HPP_
#define VOCALID_IDENTITY_EMBEDDING_HPP_

#include <cstdint>
#include <string>
#include <vector>

namespace vocalid::identity {

/// Vocal-likeness fingerprint: the track-averaged output of the embedder's
/// last dense layer, tagged with the weights that produced it.
struct Embedding {
  std::vector<double> v;
  std::string track_id;
  uint32_t model_fingerprint = 0;
};

double l2_norm(const std::vector<double>& v);

/// 1 - cos(a, b), in [0, 2].
/// Errors: kUndefinedDistance on zero-norm input, kShape on length mismatch.
double cosine_distance(const std::vector<double>& a,
                       const std::vector<double>& b);
double cosine_distance(const Embedding& a, const Embedding& b);

}  // namespace vocalid::identity

#endif  // VOCALID_IDENTITY_EMBEDDING_HPP_
