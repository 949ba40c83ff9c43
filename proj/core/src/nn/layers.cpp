// core/src/nn/layers.cpp

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

#include "vocalid/nn/layers.hpp"

#include <algorithm>
#include <cmath>

#include "vocalid/common/error.hpp"
#include "vocalid/nn/gemm.hpp"

namespace vocalid::nn {

const char* layer_kind_name(LayerKind kind) {
  switch (kind) {
    case LayerKind::kConv1d: return "conv1d";
    case LayerKind::kConv2d: return "conv2d";
    case LayerKind::kDense: return "dense";
    case LayerKind::kBatchNorm: return "batchnorm";
    case LayerKind::kMfm: return "mfm";
    case LayerKind::kRelu: return "relu";
    case LayerKind::kSigmoid: return "sigmoid";
    case LayerKind::kSoftmax: return "softmax";
    case LayerKind::kSeBlock: return "se_block";
    case LayerKind::kDilatedTdnnBlock: return "dilated_tdnn_block";
    case LayerKind::kAttentiveStatsPool: return "attentive_stats_pool";
    case LayerKind::kMeanPool: return "mean_pool";
    case LayerKind::kMaxPool2d: return "max_pool2d";
  }
  return "?";
}

void Layer::require_ctx() const {
  if (!has_ctx_)
    throw Error(ErrorCode::kState,
                name_ + ": backward called before forward");
}

void Layer::throw_shape(const std::vector<int>& got,
                        const std::string& expected) const {
  throw Error(ErrorCode::kShape, name_ + " (" +
                                     layer_kind_name(kind()) + "): expected " +
                                     expected + ", got " +
                                     shape_to_string(got));
}

namespace {

void he_uniform(Tensor* w, int fan_in, Rng* rng) {
  if (!rng) return;
  double limit = std::sqrt(6.0 / std::max(1, fan_in));
  for (int64_t i = 0; i < w->size(); ++i)
    (*w)[i] = rng->uniform(-limit, limit);
}

int64_t tail_size(const std::vector<int>& shape) {
  int64_t n = 1;
  for (size_t i = 1; i < shape.size(); ++i) n *= shape[i];
  return n;
}

// ---------------------------------------------------------------------------
// Dense
// ---------------------------------------------------------------------------

class DenseLayer : public Layer {
 public:
  DenseLayer(const LayerSpec& spec, const std::string& name, Rng* rng)
      : Layer(name),
        in_(spec.in_channels),
        out_(spec.out_channels),
        w_({spec.out_channels, spec.in_channels}),
        b_({spec.out_channels}) {
    he_uniform(&w_, in_, rng);
    w_.grad();
    b_.grad();
  }

  LayerKind kind() const override { return LayerKind::kDense; }

  std::vector<int> output_shape(const std::vector<int>& in) const override {
    if (shape_size(in) != in_) return {};  // caller formats the error
    return {out_};
  }

  Tensor forward(const Tensor& x, bool) override {
    if (x.size() != in_)
      throw_shape(x.shape(), "any shape with " + std::to_string(in_) +
                                 " elements");
    x_ = x;
    Tensor y({out_});
    for (int o = 0; o < out_; ++o) {
      const double* wr = w_.data() + static_cast<size_t>(o) * in_;
      double acc = b_[o];
      for (int i = 0; i < in_; ++i) acc += wr[i] * x[i];
      y[o] = acc;
    }
    has_ctx_ = true;
    return y;
  }

  Tensor backward(const Tensor& dy) override {
    require_ctx();
    if (dy.size() != out_) throw_shape(dy.shape(), "[" + std::to_string(out_) + "]");
    auto& dw = w_.grad();
    auto& db = b_.grad();
    Tensor dx(x_.shape());
    for (int o = 0; o < out_; ++o) {
      const double g = dy[o];
      db[o] += g;
      double* dwr = dw.data() + static_cast<size_t>(o) * in_;
      const double* wr = w_.data() + static_cast<size_t>(o) * in_;
      for (int i = 0; i < in_; ++i) {
        dwr[i] += g * x_[i];
        dx[i] += g * wr[i];
      }
    }
    return dx;
  }

  std::vector<std::pair<std::string, Tensor*>> parameters() override {
    return {{"weight", &w_}, {"bias", &b_}};
  }

  std::unique_ptr<Layer> clone() const override {
    return std::make_unique<DenseLayer>(*this);
  }

 private:
  int in_, out_;
  Tensor w_, b_;
  Tensor x_;
};

// ---------------------------------------------------------------------------
// Conv1d
// ---------------------------------------------------------------------------

class Conv1dLayer : public Layer {
 public:
  Conv1dLayer(const LayerSpec& spec, const std::string& name, Rng* rng)
      : Layer(name), spec_(spec),
        w_({spec.out_channels, spec.in_channels * spec.kernel}),
        b_({spec.out_channels}) {
    he_uniform(&w_, spec.in_channels * spec.kernel, rng);
    w_.grad();
    b_.grad();
  }

  LayerKind kind() const override { return LayerKind::kConv1d; }

  int out_len(int t) const {
    const int span = (spec_.kernel - 1) * spec_.dilation + 1;
    if (spec_.same_padding) return (t - 1) / spec_.stride + 1;
    if (t < span) return 0;
    return (t - span) / spec_.stride + 1;
  }

  std::vector<int> output_shape(const std::vector<int>& in) const override {
    if (in.size() != 2 || in[0] != spec_.in_channels) return {};
    int t = out_len(in[1]);
    if (t <= 0) return {};
    return {spec_.out_channels, t};
  }

  Tensor forward(const Tensor& x, bool) override {
    if (x.rank() != 2 || x.dim(0) != spec_.in_channels)
      throw_shape(x.shape(), "[" + std::to_string(spec_.in_channels) + " x T]");
    const int t_in = x.dim(1);
    const int t_out = out_len(t_in);
    if (t_out <= 0)
      throw_shape(x.shape(), "input long enough for kernel span " +
                                 std::to_string((spec_.kernel - 1) *
                                                    spec_.dilation + 1));
    t_in_ = t_in;
    const int ck = spec_.in_channels * spec_.kernel;
    const int pad = spec_.same_padding ? ((spec_.kernel - 1) * spec_.dilation) / 2 : 0;
    col_.assign(static_cast<size_t>(ck) * t_out, 0.0);
    for (int ci = 0; ci < spec_.in_channels; ++ci) {
      const double* xc = x.data() + static_cast<size_t>(ci) * t_in;
      for (int j = 0; j < spec_.kernel; ++j) {
        double* row = col_.data() + (static_cast<size_t>(ci) * spec_.kernel + j) * t_out;
        const int off = j * spec_.dilation - pad;
        for (int t = 0; t < t_out; ++t) {
          const int src = t * spec_.stride + off;
          row[t] = (src >= 0 && src < t_in) ? xc[src] : 0.0;
        }
      }
    }
    Tensor y({spec_.out_channels, t_out});
    gemm_nn_acc(spec_.out_channels, ck, t_out, w_.data(), col_.data(),
                y.data());
    for (int co = 0; co < spec_.out_channels; ++co) {
      double* yr = y.data() + static_cast<size_t>(co) * t_out;
      const double bias = b_[co];
      for (int t = 0; t < t_out; ++t) yr[t] += bias;
    }
    has_ctx_ = true;
    return y;
  }

  Tensor backward(const Tensor& dy) override {
    require_ctx();
    const int t_out = dy.rank() == 2 ? dy.dim(1) : -1;
    const int ck = spec_.in_channels * spec_.kernel;
    if (dy.rank() != 2 || dy.dim(0) != spec_.out_channels ||
        static_cast<size_t>(ck) * t_out != col_.size())
      throw_shape(dy.shape(), "gradient matching the forward output");

    auto& dw = w_.grad();
    auto& db = b_.grad();
    for (int co = 0; co < spec_.out_channels; ++co) {
      const double* dyr = dy.data() + static_cast<size_t>(co) * t_out;
      double acc = 0.0;
      for (int t = 0; t < t_out; ++t) acc += dyr[t];
      db[co] += acc;
    }
    // dW += dY * col^T  (via col transposed so the kernel stays axpy-style).
    scratch_.assign(col_.size(), 0.0);
    transpose(ck, t_out, col_.data(), scratch_.data());
    gemm_nn_acc(spec_.out_channels, t_out, ck, dy.data(), scratch_.data(),
                dw.data());
    // dcol = W^T * dY, then scatter back into dx.
    wt_.assign(w_.vec().size(), 0.0);
    transpose(spec_.out_channels, ck, w_.data(), wt_.data());
    std::vector<double> dcol(static_cast<size_t>(ck) * t_out, 0.0);
    gemm_nn_acc(ck, spec_.out_channels, t_out, wt_.data(), dy.data(),
                dcol.data());

    Tensor dx({spec_.in_channels, t_in_});
    const int pad = spec_.same_padding ? ((spec_.kernel - 1) * spec_.dilation) / 2 : 0;
    for (int ci = 0; ci < spec_.in_channels; ++ci) {
      double* dxc = dx.data() + static_cast<size_t>(ci) * t_in_;
      for (int j = 0; j < spec_.kernel; ++j) {
        const double* row =
            dcol.data() + (static_cast<size_t>(ci) * spec_.kernel + j) * t_out;
        const int off = j * spec_.dilation - pad;
        for (int t = 0; t < t_out; ++t) {
          const int src = t * spec_.stride + off;
          if (src >= 0 && src < t_in_) dxc[src] += row[t];
        }
      }
    }
    return dx;
  }

  std::vector<std::pair<std::string, Tensor*>> parameters() override {
    return {{"weight", &w_}, {"bias", &b_}};
  }

  std::unique_ptr<Layer> clone() const override {
    return std::make_unique<Conv1dLayer>(*this);
  }

 private:
  LayerSpec spec_;
  Tensor w_, b_;
  int t_in_ = 0;
  std::vector<double> col_, scratch_, wt_;
};

// ---------------------------------------------------------------------------
// Conv2d
// ---------------------------------------------------------------------------

class Conv2dLayer : public Layer {
 public:
  Conv2dLayer(const LayerSpec& spec, const std::string& name, Rng* rng)
      : Layer(name), spec_(spec),
        w_({spec.out_channels, spec.in_channels * spec.kernel * spec.kernel}),
        b_({spec.out_channels}) {
    he_uniform(&w_, spec.in_channels * spec.kernel * spec.kernel, rng);
    w_.grad();
    b_.grad();
  }

  LayerKind kind() const override { return LayerKind::kConv2d; }

  int out_extent(int n) const {
    if (spec_.same_padding) return (n - 1) / spec_.stride + 1;
    if (n < spec_.kernel) return 0;
    return (n - spec_.kernel) / spec_.stride + 1;
  }

  std::vector<int> output_shape(const std::vector<int>& in) const override {
    if (in.size() != 3 || in[0] != spec_.in_channels) return {};
    int h = out_extent(in[1]), w = out_extent(in[2]);
    if (h <= 0 || w <= 0) return {};
    return {spec_.out_channels, h, w};
  }

  Tensor forward(const Tensor& x, bool) override {
    if (x.rank() != 3 || x.dim(0) != spec_.in_channels)
      throw_shape(x.shape(),
                  "[" + std::to_string(spec_.in_channels) + " x H x W]");
    h_in_ = x.dim(1);
    w_in_ = x.dim(2);
    const int ho = out_extent(h_in_), wo = out_extent(w_in_);
    if (ho <= 0 || wo <= 0)
      throw_shape(x.shape(), "input at least kernel-sized");
    const int k = spec_.kernel;
    const int ckk = spec_.in_channels * k * k;
    const int hw = ho * wo;
    const int pad = spec_.same_padding ? (k - 1) / 2 : 0;

    col_.assign(static_cast<size_t>(ckk) * hw, 0.0);
    for (int ci = 0; ci < spec_.in_channels; ++ci) {
      const double* xc = x.data() + static_cast<size_t>(ci) * h_in_ * w_in_;
      for (int u = 0; u < k; ++u) {
        for (int v = 0; v < k; ++v) {
          double* row = col_.data() +
                        (static_cast<size_t>(ci) * k * k + u * k + v) * hw;
          for (int i = 0; i < ho; ++i) {
            const int si = i * spec_.stride + u - pad;
            double* out_row = row + static_cast<size_t>(i) * wo;
            if (si < 0 || si >= h_in_) continue;  // row stays zero
            const double* src_row = xc + static_cast<size_t>(si) * w_in_;
            for (int j = 0; j < wo; ++j) {
              const int sj = j * spec_.stride + v - pad;
              if (sj >= 0 && sj < w_in_) out_row[j] = src_row[sj];
            }
          }
        }
      }
    }
    Tensor y({spec_.out_channels, ho, wo});
    gemm_nn_acc(spec_.out_channels, ckk, hw, w_.data(), col_.data(), y.data());
    for (int co = 0; co < spec_.out_channels; ++co) {
      double* yr = y.data() + static_cast<size_t>(co) * hw;
      const double bias = b_[co];
      for (int i = 0; i < hw; ++i) yr[i] += bias;
    }
    has_ctx_ = true;
    return y;
  }

  Tensor backward(const Tensor& dy) override {
    require_ctx();
    const int k = spec_.kernel;
    const int ckk = spec_.in_channels * k * k;
    const int ho = out_extent(h_in_), wo = out_extent(w_in_);
    const int hw = ho * wo;
    if (dy.rank() != 3 || dy.dim(0) != spec_.out_channels ||
        dy.dim(1) != ho || dy.dim(2) != wo)
      throw_shape(dy.shape(), "gradient matching the forward output");

    auto& dw = w_.grad();
    auto& db = b_.grad();
    for (int co = 0; co < spec_.out_channels; ++co) {
      const double* dyr = dy.data() + static_cast<size_t>(co) * hw;
      double acc = 0.0;
      for (int i = 0; i < hw; ++i) acc += dyr[i];
      db[co] += acc;
    }
    scratch_.assign(col_.size(), 0.0);
    transpose(ckk, hw, col_.data(), scratch_.data());
    gemm_nn_acc(spec_.out_channels, hw, ckk, dy.data(), scratch_.data(),
                dw.data());

    wt_.assign(w_.vec().size(), 0.0);
    transpose(spec_.out_channels, ckk, w_.data(), wt_.data());
    std::vector<double> dcol(static_cast<size_t>(ckk) * hw, 0.0);
    gemm_nn_acc(ckk, spec_.out_channels, hw, wt_.data(), dy.data(),
                dcol.data());

    Tensor dx({spec_.in_channels, h_in_, w_in_});
    const int pad = spec_.same_padding ? (k - 1) / 2 : 0;
    for (int ci = 0; ci < spec_.in_channels; ++ci) {
      double* dxc = dx.data() + static_cast<size_t>(ci) * h_in_ * w_in_;
      for (int u = 0; u < k; ++u) {
        for (int v = 0; v < k; ++v) {
          const double* row = dcol.data() +
                              (static_cast<size_t>(ci) * k * k + u * k + v) * hw;
          for (int i = 0; i < ho; ++i) {
            const int si = i * spec_.stride + u - pad;
            if (si < 0 || si >= h_in_) continue;
            double* dst_row = dxc + static_cast<size_t>(si) * w_in_;
            const double* src_row = row + static_cast<size_t>(i) * wo;
            for (int j = 0; j < wo; ++j) {
              const int sj = j * spec_.stride + v - pad;
              if (sj >= 0 && sj < w_in_) dst_row[sj] += src_row[j];
            }
          }
        }
      }
    }
    return dx;
  }

  std::vector<std::pair<std::string, Tensor*>> parameters() override {
    return {{"weight", &w_}, {"bias", &b_}};
  }

  std::unique_ptr<Layer> clone() const override {
    return std::make_unique<Conv2dLayer>(*this);
  }

 private:
  LayerSpec spec_;
  Tensor w_, b_;
  int h_in_ = 0, w_in_ = 0;
  std::vector<double> col_, scratch_, wt_;
};

// ---------------------------------------------------------------------------
// BatchNorm (per channel over all non-channel elements)
// ---------------------------------------------------------------------------

class BatchNormLayer : public Layer {
 public:
  BatchNormLayer(const LayerSpec& spec, const std::string& name, Rng*)
      : Layer(name), spec_(spec),
        gamma_({spec.in_channels}), beta_({spec.in_channels}),
        running_mean_({spec.in_channels}), running_var_({spec.in_channels}) {
    gamma_.fill(1.0);
    running_var_.fill(1.0);
    gamma_.grad();
    beta_.grad();
  }

  LayerKind kind() const override { return LayerKind::kBatchNorm; }

  std::vector<int> output_shape(const std::vector<int>& in) const override {
    if (in.empty() || in[0] != spec_.in_channels) return {};
    return in;
  }

  Tensor forward(const Tensor& x, bool training) override {
    if (x.rank() < 1 || x.dim(0) != spec_.in_channels)
      throw_shape(x.shape(), "[" + std::to_string(spec_.in_channels) + ", ...]");
    const int c_n = spec_.in_channels;
    const int64_t n = tail_size(x.shape());
    x_ = x;
    training_ = training;
    Tensor y(x.shape());
    mean_.assign(c_n, 0.0);
    var_.assign(c_n, 0.0);
    for (int c = 0; c < c_n; ++c) {
      const double* xc = x.data() + static_cast<size_t>(c) * n;
      double m, v;
      if (training) {
        m = 0.0;
        for (int64_t i = 0; i < n; ++i) m += xc[i];
        m /= static_cast<double>(n);
        v = 0.0;
        for (int64_t i = 0; i < n; ++i) {
          double d = xc[i] - m;
          v += d * d;
        }
        v /= static_cast<double>(n);  // population variance
        running_mean_[c] =
            (1.0 - spec_.momentum) * running_mean_[c] + spec_.momentum * m;
        running_var_[c] =
            (1.0 - spec_.momentum) * running_var_[c] + spec_.momentum * v;
      } else {
        m = running_mean_[c];
        v = running_var_[c];
      }
      mean_[c] = m;
      var_[c] = v;
      const double inv = 1.0 / std::sqrt(v + spec_.eps);
      const double g = gamma_[c], bb = beta_[c];
      double* yc = y.data() + static_cast<size_t>(c) * n;
      for (int64_t i = 0; i < n; ++i) yc[i] = g * (xc[i] - m) * inv + bb;
    }
    has_ctx_ = true;
    return y;
  }

  Tensor backward(const Tensor& dy) override {
    require_ctx();
    if (dy.shape() != x_.shape())
      throw_shape(dy.shape(), "gradient matching the forward input");
    const int c_n = spec_.in_channels;
    const int64_t n = tail_size(x_.shape());
    auto& dg = gamma_.grad();
    auto& db = beta_.grad();
    Tensor dx(x_.shape());
    for (int c = 0; c < c_n; ++c) {
      const double* xc = x_.data() + static_cast<size_t>(c) * n;
      const double* dyc = dy.data() + static_cast<size_t>(c) * n;
      double* dxc = dx.data() + static_cast<size_t>(c) * n;
      const double m = mean_[c];
      const double inv = 1.0 / std::sqrt(var_[c] + spec_.eps);
      const double g = gamma_[c];

      double sum_dy = 0.0, sum_dy_xhat = 0.0;
      for (int64_t i = 0; i < n; ++i) {
        const double xhat = (xc[i] - m) * inv;
        sum_dy += dyc[i];
        sum_dy_xhat += dyc[i] * xhat;
      }
      dg[c] += sum_dy_xhat;
      db[c] += sum_dy;

      if (!training_) {
        for (int64_t i = 0; i < n; ++i) dxc[i] = dyc[i] * g * inv;
        continue;
      }
      const double inv_n = 1.0 / static_cast<double>(n);
      for (int64_t i = 0; i < n; ++i) {
        const double xhat = (xc[i] - m) * inv;
        dxc[i] = g * inv *
                 (dyc[i] - sum_dy * inv_n - xhat * sum_dy_xhat * inv_n);
      }
    }
    return dx;
  }

  std::vector<std::pair<std::string, Tensor*>> parameters() override {
    return {{"gamma", &gamma_}, {"beta", &beta_}};
  }

  std::vector<std::pair<std::string, Tensor*>> buffers() override {
    return {{"running_mean", &running_mean_}, {"running_var", &running_var_}};
  }

  std::unique_ptr<Layer> clone() const override {
    return std::make_unique<BatchNormLayer>(*this);
  }

 private:
  LayerSpec spec_;
  Tensor gamma_, beta_, running_mean_, running_var_;
  Tensor x_;
  std::vector<double> mean_, var_;
  bool training_ = false;
};

// ---------------------------------------------------------------------------
// Max-feature-map: split channels in half, take the elementwise max
// ---------------------------------------------------------------------------

class MfmLayer : public Layer {
 public:
  MfmLayer(const LayerSpec& spec, const std::string& name, Rng*)
      : Layer(name), in_(spec.in_channels) {}

  LayerKind kind() const override { return LayerKind::kMfm; }

  std::vector<int> output_shape(const std::vector<int>& in) const override {
    if (in.empty() || in[0] != in_) return {};
    std::vector<int> out = in;
    out[0] = in_ / 2;
    return out;
  }

  Tensor forward(const Tensor& x, bool) override {
    if (x.rank() < 1 || x.dim(0) != in_)
      throw_shape(x.shape(), "[" + std::to_string(in_) + ", ...]");
    const int half = in_ / 2;
    const int64_t n = tail_size(x.shape());
    std::vector<int> out_shape = x.shape();
    out_shape[0] = half;
    in_shape_ = x.shape();
    Tensor y(out_shape);
    const int64_t half_elems = half * n;
    first_wins_.assign(static_cast<size_t>(half_elems), true);
    for (int64_t i = 0; i < half_elems; ++i) {
      const double a = x[i];
      const double b = x[i + half_elems];
      // Ties go to the first half, deterministically.
      if (a >= b) {
        y[i] = a;
      } else {
        y[i] = b;
        first_wins_[static_cast<size_t>(i)] = false;
      }
    }
    has_ctx_ = true;
    return y;
  }

  Tensor backward(const Tensor& dy) override {
    require_ctx();
    const int64_t half_elems = static_cast<int64_t>(first_wins_.size());
    if (dy.size() != half_elems)
      throw_shape(dy.shape(), "gradient matching the forward output");
    Tensor dx(in_shape_);
    for (int64_t i = 0; i < half_elems; ++i) {
      if (first_wins_[static_cast<size_t>(i)])
        dx[i] = dy[i];
      else
        dx[i + half_elems] = dy[i];
    }
    return dx;
  }

  std::unique_ptr<Layer> clone() const override {
    return std::make_unique<MfmLayer>(*this);
  }

 private:
  int in_;
  std::vector<int> in_shape_;
  std::vector<bool> first_wins_;
};

// ---------------------------------------------------------------------------
// Elementwise activations
// ---------------------------------------------------------------------------

class ReluLayer : public Layer {
 public:
  ReluLayer(const LayerSpec&, const std::string& name, Rng*) : Layer(name) {}
  LayerKind kind() const override { return LayerKind::kRelu; }

  std::vector<int> output_shape(const std::vector<int>& in) const override {
    return in;
  }

  Tensor forward(const Tensor& x, bool) override {
    Tensor y(x.shape());
    pass_.assign(static_cast<size_t>(x.size()), false);
    for (int64_t i = 0; i < x.size(); ++i) {
      if (x[i] > 0.0) {
        y[i] = x[i];
        pass_[static_cast<size_t>(i)] = true;
      }
    }
    has_ctx_ = true;
    return y;
  }

  Tensor backward(const Tensor& dy) override {
    require_ctx();
    if (dy.size() != static_cast<int64_t>(pass_.size()))
      throw_shape(dy.shape(), "gradient matching the forward output");
    Tensor dx(dy.shape());
    for (int64_t i = 0; i < dy.size(); ++i)
      if (pass_[static_cast<size_t>(i)]) dx[i] = dy[i];
    return dx;
  }

  std::unique_ptr<Layer> clone() const override {
    return std::make_unique<ReluLayer>(*this);
  }

 private:
  std::vector<bool> pass_;
};

class SigmoidLayer : public Layer {
 public:
  SigmoidLayer(const LayerSpec&, const std::string& name, Rng*) : Layer(name) {}
  LayerKind kind() const override { return LayerKind::kSigmoid; }

  std::vector<int> output_shape(const std::vector<int>& in) const override {
    return in;
  }

  Tensor forward(const Tensor& x, bool) override {
    y_ = Tensor(x.shape());
    for (int64_t i = 0; i < x.size(); ++i)
      y_[i] = 1.0 / (1.0 + std::exp(-x[i]));
    has_ctx_ = true;
    return y_;
  }

  Tensor backward(const Tensor& dy) override {
    require_ctx();
    if (dy.size() != y_.size())
      throw_shape(dy.shape(), "gradient matching the forward output");
    Tensor dx(dy.shape());
    for (int64_t i = 0; i < dy.size(); ++i)
      dx[i] = dy[i] * y_[i] * (1.0 - y_[i]);
    return dx;
  }

  std::unique_ptr<Layer> clone() const override {
    return std::make_unique<SigmoidLayer>(*this);
  }

 private:
  Tensor y_;
};

class SoftmaxLayer : public Layer {
 public:
  SoftmaxLayer(const LayerSpec&, const std::string& name, Rng*) : Layer(name) {}
  LayerKind kind() const override { return LayerKind::kSoftmax; }

  std::vector<int> output_shape(const std::vector<int>& in) const override {
    if (in.size() != 1) return {};
    return in;
  }

  Tensor forward(const Tensor& x, bool) override {
    if (x.rank() != 1) throw_shape(x.shape(), "a rank-1 tensor");
    y_ = Tensor(x.shape());
    double mx = x[0];
    for (int64_t i = 1; i < x.size(); ++i) mx = std::max(mx, x[i]);
    double z = 0.0;
    for (int64_t i = 0; i < x.size(); ++i) {
      y_[i] = std::exp(x[i] - mx);
      z += y_[i];
    }
    for (int64_t i = 0; i < x.size(); ++i) y_[i] /= z;
    has_ctx_ = true;
    return y_;
  }

  Tensor backward(const Tensor& dy) override {
    require_ctx();
    if (dy.size() != y_.size())
      throw_shape(dy.shape(), "gradient matching the forward output");
    double dot = 0.0;
    for (int64_t i = 0; i < dy.size(); ++i) dot += dy[i] * y_[i];
    Tensor dx(dy.shape());
    for (int64_t i = 0; i < dy.size(); ++i) dx[i] = y_[i] * (dy[i] - dot);
    return dx;
  }

  std::unique_ptr<Layer> clone() const override {
    return std::make_unique<SoftmaxLayer>(*this);
  }

 private:
  Tensor y_;
};

// ---------------------------------------------------------------------------
// Squeeze-excitation: channel gates from the time-averaged descriptor
// ---------------------------------------------------------------------------

class SeBlockLayer : public Layer {
 public:
  SeBlockLayer(const LayerSpec& spec, const std::string& name, Rng* rng)
      : Layer(name), c_(spec.in_channels), h_(spec.hidden),
        w1_({spec.hidden, spec.in_channels}), b1_({spec.hidden}),
        w2_({spec.in_channels, spec.hidden}), b2_({spec.in_channels}) {
    he_uniform(&w1_, c_, rng);
    he_uniform(&w2_, h_, rng);
    w1_.grad(); b1_.grad(); w2_.grad(); b2_.grad();
  }

  LayerKind kind() const override { return LayerKind::kSeBlock; }

  std::vector<int> output_shape(const std::vector<int>& in) const override {
    if (in.empty() || in[0] != c_) return {};
    return in;
  }

  Tensor forward(const Tensor& x, bool) override {
    if (x.rank() < 2 || x.dim(0) != c_)
      throw_shape(x.shape(), "[" + std::to_string(c_) + ", ...]");
    const int64_t n = tail_size(x.shape());
    x_ = x;
    // squeeze
    s_.assign(c_, 0.0);
    for (int c = 0; c < c_; ++c) {
      const double* xc = x.data() + static_cast<size_t>(c) * n;
      double acc = 0.0;
      for (int64_t i = 0; i < n; ++i) acc += xc[i];
      s_[c] = acc / static_cast<double>(n);
    }
    // excitation MLP
    z_.assign(h_, 0.0);
    a_.assign(h_, 0.0);
    for (int j = 0; j < h_; ++j) {
      const double* wr = w1_.data() + static_cast<size_t>(j) * c_;
      double acc = b1_[j];
      for (int c = 0; c < c_; ++c) acc += wr[c] * s_[c];
      z_[j] = acc;
      a_[j] = acc > 0.0 ? acc : 0.0;
    }
    g_.assign(c_, 0.0);
    for (int c = 0; c < c_; ++c) {
      const double* wr = w2_.data() + static_cast<size_t>(c) * h_;
      double acc = b2_[c];
      for (int j = 0; j < h_; ++j) acc += wr[j] * a_[j];
      g_[c] = 1.0 / (1.0 + std::exp(-acc));
    }
    Tensor y(x.shape());
    for (int c = 0; c < c_; ++c) {
      const double* xc = x.data() + static_cast<size_t>(c) * n;
      double* yc = y.data() + static_cast<size_t>(c) * n;
      const double g = g_[c];
      for (int64_t i = 0; i < n; ++i) yc[i] = g * xc[i];
    }
    has_ctx_ = true;
    return y;
  }

  Tensor backward(const Tensor& dy) override {
    require_ctx();
    if (dy.shape() != x_.shape())
      throw_shape(dy.shape(), "gradient matching the forward input");
    const int64_t n = tail_size(x_.shape());
    Tensor dx(x_.shape());

    // Direct path plus gate gradient.
    std::vector<double> dgate(c_, 0.0);
    for (int c = 0; c < c_; ++c) {
      const double* xc = x_.data() + static_cast<size_t>(c) * n;
      const double* dyc = dy.data() + static_cast<size_t>(c) * n;
      double* dxc = dx.data() + static_cast<size_t>(c) * n;
      const double g = g_[c];
      double acc = 0.0;
      for (int64_t i = 0; i < n; ++i) {
        acc += dyc[i] * xc[i];
        dxc[i] = dyc[i] * g;
      }
      dgate[c] = acc;
    }
    // Through sigmoid / dense2 / relu / dense1 back to the squeeze.
    auto& dw2 = w2_.grad();
    auto& db2 = b2_.grad();
    std::vector<double> da(h_, 0.0);
    for (int c = 0; c < c_; ++c) {
      const double dz2 = dgate[c] * g_[c] * (1.0 - g_[c]);
      db2[c] += dz2;
      double* dwr = dw2.data() + static_cast<size_t>(c) * h_;
      const double* wr = w2_.data() + static_cast<size_t>(c) * h_;
      for (int j = 0; j < h_; ++j) {
        dwr[j] += dz2 * a_[j];
        da[j] += dz2 * wr[j];
      }
    }
    auto& dw1 = w1_.grad();
    auto& db1 = b1_.grad();
    std::vector<double> ds(c_, 0.0);
    for (int j = 0; j < h_; ++j) {
      const double dz1 = z_[j] > 0.0 ? da[j] : 0.0;
      db1[j] += dz1;
      double* dwr = dw1.data() + static_cast<size_t>(j) * c_;
      const double* wr = w1_.data() + static_cast<size_t>(j) * c_;
      for (int c = 0; c < c_; ++c) {
        dwr[c] += dz1 * s_[c];
        ds[c] += dz1 * wr[c];
      }
    }
    // Squeeze is a mean over the tail dims.
    const double inv_n = 1.0 / static_cast<double>(n);
    for (int c = 0; c < c_; ++c) {
      double* dxc = dx.data() + static_cast<size_t>(c) * n;
      const double d = ds[c] * inv_n;
      for (int64_t i = 0; i < n; ++i) dxc[i] += d;
    }
    return dx;
  }

  std::vector<std::pair<std::string, Tensor*>> parameters() override {
    return {{"w1", &w1_}, {"b1", &b1_}, {"w2", &w2_}, {"b2", &b2_}};
  }

  std::unique_ptr<Layer> clone() const override {
    return std::make_unique<SeBlockLayer>(*this);
  }

 private:
  int c_, h_;
  Tensor w1_, b1_, w2_, b2_;
  Tensor x_;
  std::vector<double> s_, z_, a_, g_;
};

// ---------------------------------------------------------------------------
// Dilated TDNN block: x + relu(conv1d_same(x))
// ---------------------------------------------------------------------------

class DilatedTdnnBlockLayer : public Layer {
 public:
  DilatedTdnnBlockLayer(const LayerSpec& spec, const std::string& name,
                        Rng* rng)
      : Layer(name), c_(spec.in_channels) {
    LayerSpec conv = LayerSpec::conv1d(spec.in_channels, spec.in_channels,
                                       spec.kernel, spec.dilation,
                                       /*same_padding=*/true);
    conv_ = make_layer(conv, "conv", rng);
  }

  DilatedTdnnBlockLayer(const DilatedTdnnBlockLayer& other)
      : Layer(other), c_(other.c_), conv_(other.conv_->clone()),
        pass_(other.pass_) {}

  LayerKind kind() const override { return LayerKind::kDilatedTdnnBlock; }

  std::vector<int> output_shape(const std::vector<int>& in) const override {
    if (in.size() != 2 || in[0] != c_) return {};
    return in;  // same padding keeps T
  }

  Tensor forward(const Tensor& x, bool training) override {
    if (x.rank() != 2 || x.dim(0) != c_)
      throw_shape(x.shape(), "[" + std::to_string(c_) + " x T]");
    Tensor r = conv_->forward(x, training);
    pass_.assign(static_cast<size_t>(r.size()), false);
    Tensor y(x.shape());
    for (int64_t i = 0; i < r.size(); ++i) {
      double a = 0.0;
      if (r[i] > 0.0) {
        a = r[i];
        pass_[static_cast<size_t>(i)] = true;
      }
      y[i] = x[i] + a;
    }
    has_ctx_ = true;
    return y;
  }

  Tensor backward(const Tensor& dy) override {
    require_ctx();
    if (dy.size() != static_cast<int64_t>(pass_.size()))
      throw_shape(dy.shape(), "gradient matching the forward output");
    Tensor da(dy.shape());
    for (int64_t i = 0; i < dy.size(); ++i)
      if (pass_[static_cast<size_t>(i)]) da[i] = dy[i];
    Tensor dx = conv_->backward(da);
    for (int64_t i = 0; i < dy.size(); ++i) dx[i] += dy[i];
    return dx;
  }

  std::vector<std::pair<std::string, Tensor*>> parameters() override {
    std::vector<std::pair<std::string, Tensor*>> out;
    for (auto& [n, t] : conv_->parameters()) out.emplace_back("conv/" + n, t);
    return out;
  }

  std::unique_ptr<Layer> clone() const override {
    return std::make_unique<DilatedTdnnBlockLayer>(*this);
  }

 private:
  int c_;
  std::unique_ptr<Layer> conv_;
  std::vector<bool> pass_;
};

// ---------------------------------------------------------------------------
// Attentive statistics pooling over time
// ---------------------------------------------------------------------------

class AttentiveStatsPoolLayer : public Layer {
 public:
  AttentiveStatsPoolLayer(const LayerSpec& spec, const std::string& name,
                          Rng* rng)
      : Layer(name), c_(spec.in_channels), h_(spec.hidden),
        w_({spec.hidden, spec.in_channels}), b_({spec.hidden}),
        v_({spec.hidden}), vb_({1}) {
    he_uniform(&w_, c_, rng);
    he_uniform(&v_, h_, rng);
    w_.grad(); b_.grad(); v_.grad(); vb_.grad();
  }

  LayerKind kind() const override { return LayerKind::kAttentiveStatsPool; }

  std::vector<int> output_shape(const std::vector<int>& in) const override {
    if (in.size() != 2 || in[0] != c_) return {};
    return {2 * c_};
  }

  Tensor forward(const Tensor& x, bool) override {
    if (x.rank() != 2 || x.dim(0) != c_)
      throw_shape(x.shape(), "[" + std::to_string(c_) + " x T]");
    const int t_n = x.dim(1);
    x_ = x;
    u_.assign(static_cast<size_t>(h_) * t_n, 0.0);
    std::vector<double> e(t_n, 0.0);
    for (int t = 0; t < t_n; ++t) {
      double et = vb_[0];
      for (int j = 0; j < h_; ++j) {
        const double* wr = w_.data() + static_cast<size_t>(j) * c_;
        double acc = b_[j];
        for (int c = 0; c < c_; ++c) acc += wr[c] * x[static_cast<int64_t>(c) * t_n + t];
        const double uu = std::tanh(acc);
        u_[static_cast<size_t>(j) * t_n + t] = uu;
        et += v_[j] * uu;
      }
      e[t] = et;
    }
    // softmax over time
    alpha_.assign(t_n, 0.0);
    double mx = e[0];
    for (int t = 1; t < t_n; ++t) mx = std::max(mx, e[t]);
    double z = 0.0;
    for (int t = 0; t < t_n; ++t) {
      alpha_[t] = std::exp(e[t] - mx);
      z += alpha_[t];
    }
    for (int t = 0; t < t_n; ++t) alpha_[t] /= z;

    mu_.assign(c_, 0.0);
    m2_.assign(c_, 0.0);
    sigma_.assign(c_, 0.0);
    Tensor y({2 * c_});
    for (int c = 0; c < c_; ++c) {
      const double* xc = x.data() + static_cast<size_t>(c) * t_n;
      double mu = 0.0, m2 = 0.0;
      for (int t = 0; t < t_n; ++t) {
        mu += alpha_[t] * xc[t];
        m2 += alpha_[t] * xc[t] * xc[t];
      }
      mu_[c] = mu;
      m2_[c] = m2;
      const double var = std::max(m2 - mu * mu, 0.0);
      sigma_[c] = std::sqrt(var + kVarEps);
      y[c] = mu;
      y[c_ + c] = sigma_[c];
    }
    has_ctx_ = true;
    return y;
  }

  Tensor backward(const Tensor& dy) override {
    require_ctx();
    if (dy.size() != 2 * c_)
      throw_shape(dy.shape(), "[" + std::to_string(2 * c_) + "]");
    const int t_n = x_.dim(1);

    std::vector<double> dmu(c_), dm2(c_);
    for (int c = 0; c < c_; ++c) {
      dmu[c] = dy[c];
      const double dsigma = dy[c_ + c];
      const double raw_var = m2_[c] - mu_[c] * mu_[c];
      double dvar = raw_var > 0.0 ? dsigma / (2.0 * sigma_[c]) : 0.0;
      dm2[c] = dvar;
      dmu[c] += -2.0 * mu_[c] * dvar;
    }

    Tensor dx(x_.shape());
    std::vector<double> dalpha(t_n, 0.0);
    for (int c = 0; c < c_; ++c) {
      const double* xc = x_.data() + static_cast<size_t>(c) * t_n;
      double* dxc = dx.data() + static_cast<size_t>(c) * t_n;
      for (int t = 0; t < t_n; ++t) {
        dxc[t] = alpha_[t] * (dmu[c] + 2.0 * xc[t] * dm2[c]);
        dalpha[t] += dmu[c] * xc[t] + dm2[c] * xc[t] * xc[t];
      }
    }
    // softmax backward
    double dot = 0.0;
    for (int t = 0; t < t_n; ++t) dot += dalpha[t] * alpha_[t];
    std::vector<double> de(t_n);
    for (int t = 0; t < t_n; ++t) de[t] = alpha_[t] * (dalpha[t] - dot);

    auto& dw = w_.grad();
    auto& db = b_.grad();
    auto& dv = v_.grad();
    auto& dvb = vb_.grad();
    for (int t = 0; t < t_n; ++t) {
      const double det = de[t];
      dvb[0] += det;
      for (int j = 0; j < h_; ++j) {
        const double uu = u_[static_cast<size_t>(j) * t_n + t];
        dv[j] += det * uu;
        const double dz = det * v_[j] * (1.0 - uu * uu);
        db[j] += dz;
        double* dwr = dw.data() + static_cast<size_t>(j) * c_;
        const double* wr = w_.data() + static_cast<size_t>(j) * c_;
        for (int c = 0; c < c_; ++c) {
          const double xv = x_[static_cast<int64_t>(c) * t_n + t];
          dwr[c] += dz * xv;
          dx[static_cast<int64_t>(c) * t_n + t] += dz * wr[c];
        }
      }
    }
    return dx;
  }

  std::vector<std::pair<std::string, Tensor*>> parameters() override {
    return {{"w", &w_}, {"b", &b_}, {"v", &v_}, {"v_bias", &vb_}};
  }

  std::unique_ptr<Layer> clone() const override {
    return std::make_unique<AttentiveStatsPoolLayer>(*this);
  }

 private:
  static constexpr double kVarEps = 1e-9;
  int c_, h_;
  Tensor w_, b_, v_, vb_;
  Tensor x_;
  std::vector<double> u_, alpha_, mu_, m2_, sigma_;
};

// ---------------------------------------------------------------------------
// Pooling
// ---------------------------------------------------------------------------

class MeanPoolLayer : public Layer {
 public:
  MeanPoolLayer(const LayerSpec&, const std::string& name, Rng*)
      : Layer(name) {}
  LayerKind kind() const override { return LayerKind::kMeanPool; }

  std::vector<int> output_shape(const std::vector<int>& in) const override {
    if (in.size() < 2) return {};
    return {in[0]};
  }

  Tensor forward(const Tensor& x, bool) override {
    if (x.rank() < 2) throw_shape(x.shape(), "[C, ...] with rank >= 2");
    in_shape_ = x.shape();
    const int c_n = x.dim(0);
    const int64_t n = tail_size(x.shape());
    Tensor y({c_n});
    for (int c = 0; c < c_n; ++c) {
      const double* xc = x.data() + static_cast<size_t>(c) * n;
      double acc = 0.0;
      for (int64_t i = 0; i < n; ++i) acc += xc[i];
      y[c] = acc / static_cast<double>(n);
    }
    has_ctx_ = true;
    return y;
  }

  Tensor backward(const Tensor& dy) override {
    require_ctx();
    const int c_n = in_shape_[0];
    if (dy.size() != c_n)
      throw_shape(dy.shape(), "[" + std::to_string(c_n) + "]");
    const int64_t n = tail_size(in_shape_);
    Tensor dx(in_shape_);
    const double inv_n = 1.0 / static_cast<double>(n);
    for (int c = 0; c < c_n; ++c) {
      double* dxc = dx.data() + static_cast<size_t>(c) * n;
      const double d = dy[c] * inv_n;
      for (int64_t i = 0; i < n; ++i) dxc[i] = d;
    }
    return dx;
  }

  std::unique_ptr<Layer> clone() const override {
    return std::make_unique<MeanPoolLayer>(*this);
  }

 private:
  std::vector<int> in_shape_;
};

class MaxPool2dLayer : public Layer {
 public:
  MaxPool2dLayer(const LayerSpec& spec, const std::string& name, Rng*)
      : Layer(name), k_(spec.kernel) {}
  LayerKind kind() const override { return LayerKind::kMaxPool2d; }

  std::vector<int> output_shape(const std::vector<int>& in) const override {
    if (in.size() != 3) return {};
    int h = in[1] / k_, w = in[2] / k_;
    if (h <= 0 || w <= 0) return {};
    return {in[0], h, w};
  }

  Tensor forward(const Tensor& x, bool) override {
    if (x.rank() != 3) throw_shape(x.shape(), "[C x H x W]");
    in_shape_ = x.shape();
    const int c_n = x.dim(0), h = x.dim(1), w = x.dim(2);
    const int ho = h / k_, wo = w / k_;
    if (ho <= 0 || wo <= 0)
      throw_shape(x.shape(), "spatial dims of at least the pool size");
    Tensor y({c_n, ho, wo});
    argmax_.assign(static_cast<size_t>(c_n) * ho * wo, 0);
    for (int c = 0; c < c_n; ++c) {
      const double* xc = x.data() + static_cast<size_t>(c) * h * w;
      for (int i = 0; i < ho; ++i) {
        for (int j = 0; j < wo; ++j) {
          int64_t best = (static_cast<int64_t>(i) * k_) * w + j * k_;
          double best_v = xc[best];
          for (int u = 0; u < k_; ++u) {
            for (int v = 0; v < k_; ++v) {
              int64_t idx = (static_cast<int64_t>(i) * k_ + u) * w + j * k_ + v;
              if (xc[idx] > best_v) {  // first occurrence wins ties
                best_v = xc[idx];
                best = idx;
              }
            }
          }
          y[(static_cast<int64_t>(c) * ho + i) * wo + j] = best_v;
          argmax_[(static_cast<size_t>(c) * ho + i) * wo + j] =
              static_cast<size_t>(c) * h * w + best;
        }
      }
    }
    has_ctx_ = true;
    return y;
  }

  Tensor backward(const Tensor& dy) override {
    require_ctx();
    if (dy.size() != static_cast<int64_t>(argmax_.size()))
      throw_shape(dy.shape(), "gradient matching the forward output");
    Tensor dx(in_shape_);
    for (int64_t i = 0; i < dy.size(); ++i)
      dx[static_cast<int64_t>(argmax_[static_cast<size_t>(i)])] += dy[i];
    return dx;
  }

  std::unique_ptr<Layer> clone() const override {
    return std::make_unique<MaxPool2dLayer>(*this);
  }

 private:
  int k_;
  std::vector<int> in_shape_;
  std::vector<size_t> argmax_;
};

void check_positive(int v, const char* what) {
  if (v <= 0)
    throw Error(ErrorCode::kInvalidArgument,
                std::string(what) + " must be positive");
}

}  // namespace

LayerSpec LayerSpec::conv1d(int in_ch, int out_ch, int kernel, int dilation,
                            bool same_padding, int stride) {
  LayerSpec s;
  s.kind = LayerKind::kConv1d;
  s.in_channels = in_ch;
  s.out_channels = out_ch;
  s.kernel = kernel;
  s.dilation = dilation;
  s.same_padding = same_padding;
  s.stride = stride;
  return s;
}

LayerSpec LayerSpec::conv2d(int in_ch, int out_ch, int kernel,
                            bool same_padding, int stride) {
  LayerSpec s;
  s.kind = LayerKind::kConv2d;
  s.in_channels = in_ch;
  s.out_channels = out_ch;
  s.kernel = kernel;
  s.same_padding = same_padding;
  s.stride = stride;
  return s;
}

LayerSpec LayerSpec::dense(int in_dim, int out_dim) {
  LayerSpec s;
  s.kind = LayerKind::kDense;
  s.in_channels = in_dim;
  s.out_channels = out_dim;
  return s;
}

LayerSpec LayerSpec::batchnorm(int channels, double momentum) {
  LayerSpec s;
  s.kind = LayerKind::kBatchNorm;
  s.in_channels = channels;
  s.momentum = momentum;
  return s;
}

LayerSpec LayerSpec::mfm(int in_channels) {
  LayerSpec s;
  s.kind = LayerKind::kMfm;
  s.in_channels = in_channels;
  return s;
}

LayerSpec LayerSpec::relu() {
  LayerSpec s;
  s.kind = LayerKind::kRelu;
  return s;
}

LayerSpec LayerSpec::sigmoid() {
  LayerSpec s;
  s.kind = LayerKind::kSigmoid;
  return s;
}

LayerSpec LayerSpec::softmax() {
  LayerSpec s;
  s.kind = LayerKind::kSoftmax;
  return s;
}

LayerSpec LayerSpec::se_block(int channels, int hidden) {
  LayerSpec s;
  s.kind = LayerKind::kSeBlock;
  s.in_channels = channels;
  s.hidden = hidden;
  return s;
}

LayerSpec LayerSpec::dilated_tdnn_block(int channels, int kernel,
                                        int dilation) {
  LayerSpec s;
  s.kind = LayerKind::kDilatedTdnnBlock;
  s.in_channels = channels;
  s.kernel = kernel;
  s.dilation = dilation;
  return s;
}

LayerSpec LayerSpec::attentive_stats_pool(int channels, int hidden) {
  LayerSpec s;
  s.kind = LayerKind::kAttentiveStatsPool;
  s.in_channels = channels;
  s.hidden = hidden;
  return s;
}

LayerSpec LayerSpec::mean_pool() {
  LayerSpec s;
  s.kind = LayerKind::kMeanPool;
  return s;
}

LayerSpec LayerSpec::max_pool2d(int kernel) {
  LayerSpec s;
  s.kind = LayerKind::kMaxPool2d;
  s.kernel = kernel;
  return s;
}

std::unique_ptr<Layer> make_layer(const LayerSpec& spec,
                                  const std::string& name, Rng* rng) {
  switch (spec.kind) {
    case LayerKind::kConv1d:
      check_positive(spec.in_channels, "in_channels");
      check_positive(spec.out_channels, "out_channels");
      check_positive(spec.kernel, "kernel");
      check_positive(spec.dilation, "dilation");
      check_positive(spec.stride, "stride");
      return std::make_unique<Conv1dLayer>(spec, name, rng);
    case LayerKind::kConv2d:
      check_positive(spec.in_channels, "in_channels");
      check_positive(spec.out_channels, "out_channels");
      check_positive(spec.kernel, "kernel");
      check_positive(spec.stride, "stride");
      return std::make_unique<Conv2dLayer>(spec, name, rng);
    case LayerKind::kDense:
      check_positive(spec.in_channels, "in_dim");
      check_positive(spec.out_channels, "out_dim");
      return std::make_unique<DenseLayer>(spec, name, rng);
    case LayerKind::kBatchNorm:
      check_positive(spec.in_channels, "channels");
      return std::make_unique<BatchNormLayer>(spec, name, rng);
    case LayerKind::kMfm:
      check_positive(spec.in_channels, "in_channels");
      if (spec.in_channels % 2 != 0)
        throw Error(ErrorCode::kInvalidArgument,
                    "mfm needs an even channel count");
      return std::make_unique<MfmLayer>(spec, name, rng);
    case LayerKind::kRelu:
      return std::make_unique<ReluLayer>(spec, name, rng);
    case LayerKind::kSigmoid:
      return std::make_unique<SigmoidLayer>(spec, name, rng);
    case LayerKind::kSoftmax:
      return std::make_unique<SoftmaxLayer>(spec, name, rng);
    case LayerKind::kSeBlock:
      check_positive(spec.in_channels, "channels");
      check_positive(spec.hidden, "hidden");
      return std::make_unique<SeBlockLayer>(spec, name, rng);
    case LayerKind::kDilatedTdnnBlock:
      check_positive(spec.in_channels, "channels");
      check_positive(spec.kernel, "kernel");
      check_positive(spec.dilation, "dilation");
      return std::make_unique<DilatedTdnnBlockLayer>(spec, name, rng);
    case LayerKind::kAttentiveStatsPool:
      check_positive(spec.in_channels, "channels");
      check_positive(spec.hidden, "hidden");
      return std::make_unique<AttentiveStatsPoolLayer>(spec, name, rng);
    case LayerKind::kMeanPool:
      return std::make_unique<MeanPoolLayer>(spec, name, rng);
    case LayerKind::kMaxPool2d:
      check_positive(spec.kernel, "kernel");
      return std::make_unique<MaxPool2dLayer>(spec, name, rng);
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown layer kind");
}

}  // namespace vocalid::nn
