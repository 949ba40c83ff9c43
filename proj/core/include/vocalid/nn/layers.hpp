// core/include/vocalid/nn/layers.hpp

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

#ifndef VOCALID_NN_LAYERS_HPP_
#define VOCALID_NN_LAYERS_HPP_

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "vocalid/common/rng.hpp"
#include "vocalid/nn/tensor.hpp"

namespace vocalid::nn {

enum class LayerKind {
  kConv1d,
  kConv2d,
  kDense,
  kBatchNorm,
  kMfm,
  kRelu,
  kSigmoid,
  kSoftmax,
  kSeBlock,
  kDilatedTdnnBlock,
  kAttentiveStatsPool,
  kMeanPool,
  kMaxPool2d,
};

const char* layer_kind_name(LayerKind kind);

/// Declarative layer description; make_layer validates the combination.
///
/// Shape conventions: conv1d/tdnn/attention work on [C, T]; conv2d and
/// max_pool2d on [C, H, W]; dense flattens whatever it gets; mean_pool
/// reduces every non-channel dim of [C, ...] to [C].
struct LayerSpec {
  LayerKind kind{};
  int in_channels = 0;   // conv*, mfm, batchnorm, se, tdnn, attention
  int out_channels = 0;  // conv*, dense (in/out dims)
  int kernel = 0;        // conv* and max_pool2d (pool stride == kernel)
  int dilation = 1;
  int stride = 1;
  bool same_padding = false;
  int hidden = 0;        // se bottleneck width / attention hidden width
  double eps = 1e-5;     // batchnorm variance epsilon
  double momentum = 0.1; // batchnorm running-stat update rate

  static LayerSpec conv1d(int in_ch, int out_ch, int kernel, int dilation = 1,
                          bool same_padding = false, int stride = 1);
  static LayerSpec conv2d(int in_ch, int out_ch, int kernel,
                          bool same_padding = false, int stride = 1);
  static LayerSpec dense(int in_dim, int out_dim);
  static LayerSpec batchnorm(int channels, double momentum = 0.1);
  static LayerSpec mfm(int in_channels);
  static LayerSpec relu();
  static LayerSpec sigmoid();
  static LayerSpec softmax();
  static LayerSpec se_block(int channels, int hidden);
  static LayerSpec dilated_tdnn_block(int channels, int kernel, int dilation);
  static LayerSpec attentive_stats_pool(int channels, int hidden);
  static LayerSpec mean_pool();
  static LayerSpec max_pool2d(int kernel = 2);
};

/// One differentiable stage.  forward(training=true) records whatever the
/// matching backward needs; backward consumes that context, accumulates
/// parameter gradients, and returns the input gradient.
class Layer {
 public:
  explicit Layer(std::string name) : name_(std::move(name)) {}
  virtual ~Layer() = default;

  virtual LayerKind kind() const = 0;
  const std::string& name() const { return name_; }

  virtual Tensor forward(const Tensor& x, bool training) = 0;
  virtual Tensor backward(const Tensor& dy) = 0;

  /// Trainable tensors as (local name, tensor) pairs; stable order.
  virtual std::vector<std::pair<std::string, Tensor*>> parameters() {
    return {};
  }
  /// Non-trainable persistent state (batchnorm running stats).
  virtual std::vector<std::pair<std::string, Tensor*>> buffers() { return {}; }

  virtual std::vector<int> output_shape(const std::vector<int>& in) const = 0;
  virtual std::unique_ptr<Layer> clone() const = 0;

 protected:
  std::string name_;
  bool has_ctx_ = false;

  void require_ctx() const;
  [[noreturn]] void throw_shape(const std::vector<int>& got,
                                const std::string& expected) const;
};

/// Builds and (when rng is given) He-uniform-initializes a layer.
std::unique_ptr<Layer> make_layer(const LayerSpec& spec,
                                  const std::string& name,
                                  Rng* rng = nullptr);

}  // namespace vocalid::nn

#endif  // VOCALID_NN_LAYERS_HPP_
