// core/src/nn/network.cpp

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

#include "vocalid/nn/network.hpp"

#include "vocalid/common/error.hpp"

namespace vocalid::nn {

Layer& Network::add(std::unique_ptr<Layer> layer) {
  layers_.push_back(std::move(layer));
  return *layers_.back();
}

Layer& Network::add(const LayerSpec& spec, const std::string& name, Rng* rng) {
  return add(make_layer(spec, name, rng));
}

Tensor Network::forward(const Tensor& x, bool training) {
  return forward_prefix(x, layers_.size(), training);
}

Tensor Network::forward_prefix(const Tensor& x, size_t n_layers,
                               bool training) {
  if (n_layers > layers_.size())
    throw Error(ErrorCode::kInvalidArgument, "prefix exceeds network depth");
  Tensor cur = x;
  for (size_t i = 0; i < n_layers; ++i)
    cur = layers_[i]->forward(cur, training);
  forward_depth_ = n_layers;
  has_forward_ = true;
  return cur;
}

Tensor Network::backward(const Tensor& loss_grad) {
  if (!has_forward_)
    throw Error(ErrorCode::kState, "backward called before forward");
  Tensor cur = loss_grad;
  for (size_t i = forward_depth_; i-- > 0;)
    cur = layers_[i]->backward(cur);
  return cur;
}

void Network::zero_grad() {
  for (auto& [name, t] : parameters()) t->zero_grad();
}

std::vector<std::pair<std::string, Tensor*>> Network::parameters() {
  std::vector<std::pair<std::string, Tensor*>> out;
  for (auto& layer : layers_)
    for (auto& [n, t] : layer->parameters())
      out.emplace_back(layer->name() + "/" + n, t);
  return out;
}

std::vector<std::pair<std::string, Tensor*>> Network::buffers() {
  std::vector<std::pair<std::string, Tensor*>> out;
  for (auto& layer : layers_)
    for (auto& [n, t] : layer->buffers())
      out.emplace_back(layer->name() + "/" + n, t);
  return out;
}

std::vector<std::pair<std::string, Tensor*>> Network::state() {
  std::vector<std::pair<std::string, Tensor*>> out;
  for (auto& layer : layers_) {
    for (auto& [n, t] : layer->parameters())
      out.emplace_back(layer->name() + "/" + n, t);
    for (auto& [n, t] : layer->buffers())
      out.emplace_back(layer->name() + "/" + n, t);
  }
  return out;
}

int64_t Network::num_parameters() {
  int64_t n = 0;
  for (auto& [name, t] : parameters()) n += t->size();
  return n;
}

Network Network::clone() const {
  Network copy;
  for (const auto& layer : layers_) copy.layers_.push_back(layer->clone());
  return copy;
}

std::vector<int> infer_output_shape(const Network& net,
                                    const std::vector<int>& input_shape) {
  std::vector<int> shape = input_shape;
  for (size_t i = 0; i < net.num_layers(); ++i) {
    std::vector<int> next = net.layer(i).output_shape(shape);
    if (next.empty())
      throw Error(ErrorCode::kShape,
                  net.layer(i).name() + ": cannot accept input shape " +
                      shape_to_string(shape));
    shape = std::move(next);
  }
  return shape;
}

}  // namespace vocalid::nn
