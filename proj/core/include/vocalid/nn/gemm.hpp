// core/include/vocalid/nn/gemm.hpp

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

#ifndef VOCALID_NN_GEMM_HPP_
#define VOCALID_NN_GEMM_HPP_

#include <cstddef>
#include <vector>

namespace vocalid::nn {

/// C[m x n] += A[m x k] * B[k x n], all row-major.  The accumulation order
/// is fixed (k ascending per output row), so results are deterministic and
/// independent of threading decisions made by callers.
void gemm_nn_acc(int m, int k, int n, const double* a, const double* b,
                 double* c);

/// scratch = src^T for an r x c row-major matrix (scratch becomes c x r).
void transpose(int rows, int cols, const double* src, double* dst);

}  // namespace vocalid::nn

#endif  // VOCALID_NN_GEMM_HPP_
