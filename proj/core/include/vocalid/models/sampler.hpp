// core/include/vocalid/models/sampler.hpp

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

#ifndef VOCALID_MODELS_SAMPLER_HPP_
#define VOCALID_MODELS_SAMPLER_HPP_

#include <limits>
#include <vector>

#include "vocalid/common/rng.hpp"

namespace vocalid::models {

/// One epoch of class-balanced batches over a binary-labeled pool.  Every
/// batch holds exactly batch_size/2 examples of each class: the majority
/// class is shuffled and walked once, the minority class is drawn uniformly
/// with replacement.  Returns batches of pool indices.
/// Errors: kCannotBalance (a class is empty), kInvalidArgument (odd batch).
std::vector<std::vector<int>> oversample_balanced(
    const std::vector<int>& labels, int batch_size, Rng& rng);

/// Fisher-Yates shuffle driven by our portable Rng.
template <typename T>
void shuffle(std::vector<T>& v, Rng& rng) {
  for (size_t i = v.size(); i > 1; --i) {
    size_t j = static_cast<size_t>(rng.uniform_int(static_cast<int64_t>(i)));
    std::swap(v[i - 1], v[j]);
  }
}

/// Patience-based early stopping on a higher-is-better validation metric.
class EarlyStopper {
 public:
  explicit EarlyStopper(int patience) : patience_(patience) {}

  /// Returns true when the metric strictly improved.
  bool observe(int epoch, double metric) {
    if (metric > best_) {
      best_ = metric;
      best_epoch_ = epoch;
      epochs_since_best_ = 0;
      return true;
    }
    ++epochs_since_best_;
    return false;
  }

  bool should_stop() const { return epochs_since_best_ >= patience_; }
  int best_epoch() const { return best_epoch_; }
  double best_metric() const { return best_; }

 private:
  int patience_;
  int best_epoch_ = -1;
  double best_ = -std::numeric_limits<double>::infinity();
  int epochs_since_best_ = 0;
};

}  // namespace vocalid::models

#endif  // VOCALID_MODELS_SAMPLER_HPP_
