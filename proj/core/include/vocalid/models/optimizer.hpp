// core/include/vocalid/models/optimizer.hpp

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

#ifndef VOCALID_MODELS_OPTIMIZER_HPP_
#define VOCALID_MODELS_OPTIMIZER_HPP_

#include <cstdint>
#include <vector>

namespace vocalid::models {

/// Adam with decoupled (weight-decay-on-parameters) regularization,
/// operating on flat parameter/gradient vectors.
class AdamW {
 public:
  struct Config {
    double beta1 = 0.9;
    double beta2 = 0.999;
    double eps = 1e-8;
    double weight_decay = 0.0;
  };

  AdamW(size_t n_params, const Config& cfg)
      : cfg_(cfg), m_(n_params, 0.0), v_(n_params, 0.0) {}

  void step(double lr, std::vector<double>& params,
            const std::vector<double>& grads);

  int64_t steps_taken() const { return t_; }

 private:
  Config cfg_;
  std::vector<double> m_, v_;
  int64_t t_ = 0;
};

}  // namespace vocalid::models

#endif  // VOCALID_MODELS_OPTIMIZER_HPP_
