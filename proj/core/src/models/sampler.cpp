// core/src/models/sampler.cpp

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

#include "vocalid/models/sampler.hpp"

#include "vocalid/common/error.hpp"

namespace vocalid::models {

std::vector<std::vector<int>> oversample_balanced(
    const std::vector<int>& labels, int batch_size, Rng& rng) {
  if (batch_size <= 0 || batch_size % 2 != 0)
    throw Error(ErrorCode::kInvalidArgument,
                "batch size must be positive and even");
  std::vector<int> class0, class1;
  for (size_t i = 0; i < labels.size(); ++i)
    (labels[i] == 0 ? class0 : class1).push_back(static_cast<int>(i));
  if (class0.empty() || class1.empty())
    throw Error(ErrorCode::kCannotBalance,
                "class " + std::string(class0.empty() ? "0" : "1") +
                    " has no examples");

  std::vector<int>& major = class0.size() >= class1.size() ? class0 : class1;
  std::vector<int>& minor = class0.size() >= class1.size() ? class1 : class0;
  shuffle(major, rng);

  const int half = batch_size / 2;
  const size_t n_batches = (major.size() + half - 1) / half;
  std::vector<std::vector<int>> batches(n_batches);
  size_t major_pos = 0;
  for (size_t b = 0; b < n_batches; ++b) {
    std::vector<int>& batch = batches[b];
    batch.reserve(batch_size);
    for (int i = 0; i < half; ++i) {
      if (major_pos < major.size())
        batch.push_back(major[major_pos++]);
      else  // tail batch: top up with replacement
        batch.push_back(
            major[static_cast<size_t>(rng.uniform_int(int64_t(major.size())))]);
    }
    for (int i = 0; i < half; ++i)
      batch.push_back(
          minor[static_cast<size_t>(rng.uniform_int(int64_t(minor.size())))]);
  }
  return batches;
}

}  // namespace vocalid::models
