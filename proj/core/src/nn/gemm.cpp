// core/src/nn/gemm.cpp

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

#include "vocalid/nn/gemm.hpp"

namespace vocalid::nn {

// axpy-style inner loop over j: no reductions, so the compiler can
// vectorize it without reassociating floating-point sums.
void gemm_nn_acc(int m, int k, int n, const double* a, const double* b,
                 double* c) {
  constexpr int kJBlock = 4096;
  for (int j0 = 0; j0 < n; j0 += kJBlock) {
    const int j1 = j0 + kJBlock < n ? j0 + kJBlock : n;
    for (int i = 0; i < m; ++i) {
      double* __restrict ci = c + static_cast<size_t>(i) * n;
      const double* ai = a + static_cast<size_t>(i) * k;
      for (int l = 0; l < k; ++l) {
        const double s = ai[l];
        const double* __restrict bl = b + static_cast<size_t>(l) * n;
        for (int j = j0; j < j1; ++j) ci[j] += s * bl[j];
      }
    }
  }
}

void transpose(int rows, int cols, const double* src, double* dst) {
  constexpr int kTile = 32;
  for (int r0 = 0; r0 < rows; r0 += kTile)
    for (int c0 = 0; c0 < cols; c0 += kTile) {
      int r1 = r0 + kTile < rows ? r0 + kTile : rows;
      int c1 = c0 + kTile < cols ? c0 + kTile : cols;
      for (int r = r0; r < r1; ++r)
        for (int c = c0; c < c1; ++c)
          dst[static_cast<size_t>(c) * rows + r] =
              src[static_cast<size_t>(r) * cols + c];
    }
}

}  // namespace vocalid::nn
