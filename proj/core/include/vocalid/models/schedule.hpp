// core/include/vocalid/models/schedule.hpp

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

#ifndef VOCALID_MODELS_SCHEDULE_HPP_
#define VOCALID_MODELS_SCHEDULE_HPP_

#include <cmath>
#include <cstdint>

#include "vocalid/common/error.hpp"

namespace vocalid::models {

/// Cosine annealing: lr_end + (lr_start - lr_end) * (1 + cos(pi*s/S)) / 2.
/// Errors: kInvalidArgument for S == 0 or s outside [0, S].
inline double cosine_lr(int64_t step, int64_t total_steps, double lr_start,
                        double lr_end) {
  if (total_steps == 0)
    throw Error(ErrorCode::kInvalidArgument, "total_steps must be positive");
  if (step < 0 || step > total_steps)
    throw Error(ErrorCode::kInvalidArgument, "step outside [0, total_steps]");
  double phase = M_PI * static_cast<double>(step) /
                 static_cast<double>(total_steps);
  return lr_end + 0.5 * (lr_start - lr_end) * (1.0 + std::cos(phase));
}

}  // namespace vocalid::models

#endif  // VOCALID_MODELS_SCHEDULE_HPP_
