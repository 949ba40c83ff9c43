// tests/support/random_nets.hpp

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

#ifndef VOCALID_TESTS_SUPPORT_RANDOM_NETS_HPP_
#define VOCALID_TESTS_SUPPORT_RANDOM_NETS_HPP_

#include <string>
#include <vector>

#include "vocalid/common/rng.hpp"
#include "vocalid/nn/network.hpp"

namespace vocalid::testing {

struct BuiltNet {
  nn::Network net;
  std::vector<int> input_shape;
  std::string description;
};

/// Random valid layer stack of depth <= max_depth over a random input
/// shape.  Every kind that can legally splice onto the current shape is a
/// candidate, so compositions cover the whole layer set over time.
inline BuiltNet random_composition(Rng& rng, int max_depth) {
  using nn::LayerKind;
  using nn::LayerSpec;

  BuiltNet built;
  // Start in the [C,T] or [C,H,W] family.
  bool two_d = rng.bernoulli(0.4);
  std::vector<int> shape;
  if (two_d)
    shape = {2 + int(rng.uniform_int(3)), 5 + int(rng.uniform_int(4)),
             5 + int(rng.uniform_int(4))};
  else
    shape = {2 + int(rng.uniform_int(4)), 8 + int(rng.uniform_int(7))};
  built.input_shape = shape;
  built.description = nn::shape_to_string(shape);

  int depth = 1 + int(rng.uniform_int(max_depth));
  for (int d = 0; d < depth; ++d) {
    std::vector<LayerSpec> candidates;
    const int c = shape[0];
    if (shape.size() == 2) {
      int kernel = 1 + 2 * int(rng.uniform_int(2));  // 1 or 3
      int dil = 1 + int(rng.uniform_int(2));
      candidates.push_back(LayerSpec::conv1d(c, 2 + int(rng.uniform_int(3)),
                                             kernel, dil,
                                             rng.bernoulli(0.5)));
      candidates.push_back(LayerSpec::batchnorm(c));
      if (c % 2 == 0) candidates.push_back(LayerSpec::mfm(c));
      candidates.push_back(LayerSpec::se_block(c, 2));
      candidates.push_back(LayerSpec::dilated_tdnn_block(c, 3, dil));
      candidates.push_back(LayerSpec::attentive_stats_pool(c, 3));
      candidates.push_back(LayerSpec::mean_pool());
    } else if (shape.size() == 3) {
      candidates.push_back(LayerSpec::conv2d(c, 2 + int(rng.uniform_int(3)),
                                             3, rng.bernoulli(0.5)));
      candidates.push_back(LayerSpec::batchnorm(c));
      if (c % 2 == 0) candidates.push_back(LayerSpec::mfm(c));
      candidates.push_back(LayerSpec::se_block(c, 2));
      candidates.push_back(LayerSpec::max_pool2d(2));
      candidates.push_back(LayerSpec::mean_pool());
    } else {
      int n = shape[0];
      candidates.push_back(LayerSpec::dense(n, 2 + int(rng.uniform_int(4))));
      candidates.push_back(LayerSpec::softmax());
    }
    candidates.push_back(LayerSpec::relu());
    candidates.push_back(LayerSpec::sigmoid());
    if (shape.size() >= 2) {
      int flat = 1;
      for (int dim : shape) flat *= dim;
      if (flat <= 256)
        candidates.push_back(LayerSpec::dense(flat, 2 + int(rng.uniform_int(4))));
    }

    // Draw until one fits (kernel span versus current extent, etc).
    for (int attempt = 0; attempt < 32; ++attempt) {
      const LayerSpec& spec =
          candidates[size_t(rng.uniform_int(int64_t(candidates.size())))];
      auto probe = nn::make_layer(spec, "probe");
      std::vector<int> next = probe->output_shape(shape);
      if (next.empty()) continue;
      std::string name = "l" + std::to_string(d);
      built.net.add(spec, name, &rng);
      built.description += std::string("->") + nn::layer_kind_name(spec.kind) +
                           nn::shape_to_string(next);
      shape = next;
      break;
    }
  }
  return built;
}

}  // namespace vocalid::testing

#endif  // VOCALID_TESTS_SUPPORT_RANDOM_NETS_HPP_
