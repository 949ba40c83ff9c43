// core/include/vocalid/nn/network.hpp

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

#ifndef VOCALID_NN_NETWORK_HPP_
#define VOCALID_NN_NETWORK_HPP_

#include <memory>
#include <string>
#include <vector>

#include "vocalid/nn/layers.hpp"

namespace vocalid::nn {

/// A sequential stack of layers.  One instance is a single-writer during
/// training (forward records per-layer context); clone per thread for
/// concurrent use.
class Network {
 public:
  Network() = default;
  Network(Network&&) = default;
  Network& operator=(Network&&) = default;
  Network(const Network&) = delete;
  Network& operator=(const Network&) = delete;

  Layer& add(std::unique_ptr<Layer> layer);
  Layer& add(const LayerSpec& spec, const std::string& name,
             Rng* rng = nullptr);

  size_t num_layers() const { return layers_.size(); }
  Layer& layer(size_t i) { return *layers_[i]; }
  const Layer& layer(size_t i) const { return *layers_[i]; }

  Tensor forward(const Tensor& x, bool training = false);
  /// Runs only the first n_layers; used for embedding taps.
  Tensor forward_prefix(const Tensor& x, size_t n_layers,
                        bool training = false);
  /// Errors: kState when no forward pass has been recorded.
  Tensor backward(const Tensor& loss_grad);

  void zero_grad();

  /// Flattened (qualified name, tensor) views in archive order.
  std::vector<std::pair<std::string, Tensor*>> parameters();
  std::vector<std::pair<std::string, Tensor*>> buffers();
  /// parameters then buffers per layer, the serialization order.
  std::vector<std::pair<std::string, Tensor*>> state();

  int64_t num_parameters();

  Network clone() const;

 private:
  std::vector<std::unique_ptr<Layer>> layers_;
  size_t forward_depth_ = 0;
  bool has_forward_ = false;
};

/// Asserts spec chain composability from an input shape; returns the final
/// shape.  Errors: kShape naming the first incompatible layer.
std::vector<int> infer_output_shape(const Network& net,
                                    const std::vector<int>& input_shape);

}  // namespace vocalid::nn

#endif  // VOCALID_NN_NETWORK_HPP_
