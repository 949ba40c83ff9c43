// tests/support/gradcheck.hpp

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

#ifndef VOCALID_TESTS_SUPPORT_GRADCHECK_HPP_
#define VOCALID_TESTS_SUPPORT_GRADCHECK_HPP_

#include <cmath>
#include <vector>

#include "vocalid/common/rng.hpp"
#include "vocalid/nn/network.hpp"

namespace vocalid::testing {

/// Central finite-difference check of a network's backward pass.
///
/// Loss is sum(c_i * y_i) for fixed random c.  Analytic gradients come from
/// one forward/backward; numeric gradients perturb every parameter and
/// input element by +/- eps.  Returns the worst relative error
/// |analytic - numeric| / (|analytic| + floor).
struct GradCheckResult {
  double max_rel_error = 0.0;
  int64_t n_checked = 0;
};

inline GradCheckResult gradient_check(nn::Network& net, const nn::Tensor& x0,
                                      Rng& rng, double eps = 1e-5,
                                      double floor = 1e-8) {
  using nn::Tensor;

  Tensor probe = net.forward(x0, /*training=*/true);
  Tensor cvec(probe.shape());
  for (int64_t i = 0; i < cvec.size(); ++i) cvec[i] = rng.uniform(-1.0, 1.0);

  auto loss_of = [&](const Tensor& x) {
    Tensor y = net.forward(x, /*training=*/true);
    double acc = 0.0;
    for (int64_t i = 0; i < y.size(); ++i) acc += cvec[i] * y[i];
    return acc;
  };

  net.zero_grad();
  net.forward(x0, /*training=*/true);
  Tensor dx = net.backward(cvec);

  GradCheckResult result;
  auto check_one = [&](double analytic, double numeric) {
    double rel =
        std::abs(analytic - numeric) / (std::abs(analytic) + floor);
    if (rel > result.max_rel_error) result.max_rel_error = rel;
    ++result.n_checked;
  };

  for (auto& [name, param] : net.parameters()) {
    const std::vector<double> analytic = param->grad();
    for (int64_t i = 0; i < param->size(); ++i) {
      const double keep = (*param)[i];
      (*param)[i] = keep + eps;
      double up = loss_of(x0);
      (*param)[i] = keep - eps;
      double down = loss_of(x0);
      (*param)[i] = keep;
      check_one(analytic[static_cast<size_t>(i)], (up - down) / (2.0 * eps));
    }
  }

  Tensor x = x0;
  for (int64_t i = 0; i < x.size(); ++i) {
    const double keep = x[i];
    x[i] = keep + eps;
    double up = loss_of(x);
    x[i] = keep - eps;
    double down = loss_of(x);
    x[i] = keep;
    check_one(dx[i], (up - down) / (2.0 * eps));
  }
  return result;
}

/// Nudges every parameter off its initialization so that zero-init biases
/// cannot park an activation exactly on a ReLU/max kink (batchnorm output
/// has exactly zero channel means, which otherwise does just that to a
/// following SE block).
inline void jitter_params(nn::Network& net, Rng& rng) {
  for (auto& [name, t] : net.parameters())
    for (int64_t i = 0; i < t->size(); ++i)
      (*t)[i] += rng.uniform(0.05, 0.35) * (rng.bernoulli(0.5) ? 1.0 : -1.0);
}

/// Random input with entries kept away from zero so ReLU/MFM/max-pool
/// kinks cannot sit inside the finite-difference span.
inline nn::Tensor away_from_kinks(const std::vector<int>& shape, Rng& rng) {
  nn::Tensor x(shape);
  for (int64_t i = 0; i < x.size(); ++i) {
    double v = rng.uniform(0.05, 1.0);
    x[i] = rng.bernoulli(0.5) ? v : -v;
  }
  return x;
}

}  // namespace vocalid::testing

#endif  // VOCALID_TESTS_SUPPORT_GRADCHECK_HPP_
