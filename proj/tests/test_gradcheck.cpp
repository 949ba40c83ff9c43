// tests/test_gradcheck.cpp

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

#include <doctest.h>

#include "support/gradcheck.hpp"
#include "support/random_nets.hpp"

using namespace vocalid;
using namespace vocalid::nn;
using vocalid::testing::away_from_kinks;
using vocalid::testing::gradient_check;

namespace {

constexpr double kTol = 1e-4;

void check_single(const LayerSpec& spec, const std::vector<int>& in_shape,
                  uint64_t seed) {
  Network net;
  Rng init(seed);
  net.add(spec, "layer", &init);
  Rng rng(seed + 1);
  testing::jitter_params(net, rng);
  Tensor x = away_from_kinks(in_shape, rng);
  auto r = gradient_check(net, x, rng);
  INFO("layer kind ", std::string(layer_kind_name(spec.kind)), " rel err ",
       r.max_rel_error);
  CHECK(r.max_rel_error < kTol);
  CHECK(r.n_checked > 0);
}

}  // namespace

TEST_CASE("every layer kind passes the finite-difference check") {
  check_single(LayerSpec::conv1d(3, 4, 3, 2), {3, 12}, 100);
  check_single(LayerSpec::conv1d(2, 3, 3, 1, true, 2), {2, 11}, 101);
  check_single(LayerSpec::conv2d(2, 3, 3), {2, 7, 6}, 102);
  check_single(LayerSpec::conv2d(1, 2, 3, true, 2), {1, 8, 9}, 103);
  check_single(LayerSpec::dense(10, 4), {10}, 104);
  check_single(LayerSpec::batchnorm(3), {3, 9}, 105);
  check_single(LayerSpec::mfm(4), {4, 6}, 106);
  check_single(LayerSpec::relu(), {5, 7}, 107);
  check_single(LayerSpec::sigmoid(), {4, 3}, 108);
  check_single(LayerSpec::softmax(), {8}, 109);
  check_single(LayerSpec::se_block(4, 2), {4, 8}, 110);
  check_single(LayerSpec::dilated_tdnn_block(3, 3, 2), {3, 10}, 111);
  check_single(LayerSpec::attentive_stats_pool(3, 4), {3, 9}, 112);
  check_single(LayerSpec::mean_pool(), {4, 5}, 113);
  check_single(LayerSpec::max_pool2d(2), {2, 6, 6}, 114);
}

TEST_CASE("random layer compositions pass the finite-difference check") {
  for (uint64_t seed = 0; seed < 8; ++seed) {
    Rng rng(2000 + seed);
    auto built = testing::random_composition(rng, /*max_depth=*/4);
    testing::jitter_params(built.net, rng);
    Tensor x = away_from_kinks(built.input_shape, rng);
    auto r = gradient_check(built.net, x, rng);
    INFO("composition ", built.description, " rel err ", r.max_rel_error);
    CHECK(r.max_rel_error < kTol);
  }
}
