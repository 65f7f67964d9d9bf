#pragma once

#include <utility>
#include <vector>

#include "dfkit/tensor.hpp"

namespace dfkit::nn {

// Scalar activations (double in, double out; storage stays f32 at call sites).
inline double sigmoid(double x) { return 1.0 / (1.0 + std::exp(-x)); }
inline double elu(double x, double alpha = 1.0) { return x >= 0 ? x : alpha * (std::exp(x) - 1.0); }

/// Numerically stable softmax over a vector (max subtraction, f64 sums).
Tensor softmax(const Tensor& x);

/// Elementwise arithmetic mean of a non-empty uniform-dimension sequence.
Tensor avg_pool(const std::vector<Tensor>& xs);

/// y = W x + b with f64 accumulation. b may be empty (no bias).
Tensor linear(const Tensor& w, const Tensor& x, const Tensor& b);

/// LSTM cell weights, gate order [input, forget, cell, output] stacked
/// along the first axis: wx is [4H, in], wh is [4H, H], b is [4H].
struct LstmWeights {
  const Tensor* wx;
  const Tensor* wh;
  const Tensor* b;
  int hidden() const { return wx->shape[0] / 4; }
  int input() const { return wx->shape[1]; }
};

/// One LSTM step. Returns (h, c).
std::pair<Tensor, Tensor> lstm_step(const Tensor& x, const Tensor& h_prev, const Tensor& c_prev,
                                    const LstmWeights& w);

/// Unidirectional run from zero states; returns one h per input.
std::vector<Tensor> lstm_run(const std::vector<Tensor>& xs, const LstmWeights& w);

/// Bidirectional run; output at position i is concat(forward_i, backward_i),
/// dimension 2H.
std::vector<Tensor> bilstm_run(const std::vector<Tensor>& xs, const LstmWeights& fwd,
                               const LstmWeights& bwd);

Tensor concat(const Tensor& a, const Tensor& b);

}  // namespace dfkit::nn
