// core/include/vocalid/nn/tensor.hpp

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

#ifndef VOCALID_NN_TENSOR_HPP_
#define VOCALID_NN_TENSOR_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace vocalid::nn {

/// Dense row-major n-d array of doubles with an optional same-shape
/// gradient buffer.  Parameters carry gradients; activations usually don't.
class Tensor {
 public:
  Tensor() = default;
  explicit Tensor(std::vector<int> shape);
  Tensor(std::vector<int> shape, std::vector<double> data);

  const std::vector<int>& shape() const { return shape_; }
  int rank() const { return static_cast<int>(shape_.size()); }
  int dim(int i) const { return shape_[i]; }
  int64_t size() const { return static_cast<int64_t>(data_.size()); }

  double* data() { return data_.data(); }
  const double* data() const { return data_.data(); }
  std::vector<double>& vec() { return data_; }
  const std::vector<double>& vec() const { return data_; }
  double& operator[](int64_t i) { return data_[static_cast<size_t>(i)]; }
  double operator[](int64_t i) const { return data_[static_cast<size_t>(i)]; }

  bool has_grad() const { return grad_.has_value(); }
  /// Allocates a zeroed gradient buffer on first use.
  std::vector<double>& grad();
  const std::vector<double>& grad() const;  // throws kState when absent
  void zero_grad();
  void drop_grad() { grad_.reset(); }

  void fill(double v);
  std::string shape_str() const;

 private:
  std::vector<int> shape_;
  std::vector<double> data_;
  std::optional<std::vector<double>> grad_;
};

bool same_shape(const Tensor& a, const Tensor& b);
int64_t shape_size(const std::vector<int>& shape);
std::string shape_to_string(const std::vector<int>& shape);

}  // namespace vocalid::nn

#endif  // VOCALID_NN_TENSOR_HPP_
