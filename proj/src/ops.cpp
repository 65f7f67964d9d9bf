#include "dfkit/ops.hpp"

#include <algorithm>
#include <cmath>

namespace dfkit::nn {

Tensor softmax(const Tensor& x) {
  if (x.data.empty()) throw DimensionError("softmax of empty vector");
  double mx = -1e300;
  for (float v : x.data) mx = std::max(mx, static_cast<double>(v));
  std::vector<double> e(x.data.size());
  double sum = 0.0;
  for (size_t i = 0; i < x.data.size(); ++i) {
    e[i] = std::exp(static_cast<double>(x.data[i]) - mx);
    sum += e[i];
  }
  Tensor out(x.shape);
  for (size_t i = 0; i < e.size(); ++i) out.data[i] = static_cast<float>(e[i] / sum);
  return out;
}

Tensor avg_pool(const std::vector<Tensor>& xs) {
  if (xs.empty()) throw DimensionError("avg_pool of empty sequence");
  const size_t d = xs[0].numel();
  std::vector<double> acc(d, 0.0);
  for (const Tensor& t : xs) {
    if (t.numel() != d) throw DimensionError("avg_pool dimension mismatch");
    for (size_t i = 0; i < d; ++i) acc[i] += t.data[i];
  }
  Tensor out(xs[0].shape);
  for (size_t i = 0; i < d; ++i) out.data[i] = static_cast<float>(acc[i] / xs.size());
  return out;
}

Tensor linear(const Tensor& w, const Tensor& x, const Tensor& b) {
  if (w.rank() != 2 || w.shape[1] != static_cast<int>(x.numel()))
    throw DimensionError("linear: weight " + shape_str(w.shape) + " vs input " + shape_str(x.shape));
  const int rows = w.shape[0], cols = w.shape[1];
  if (!b.data.empty() && static_cast<int>(b.numel()) != rows)
    throw DimensionError("linear: bias shape mismatch");
  Tensor out({rows});
  for (int r = 0; r < rows; ++r) {
    double acc = b.data.empty() ? 0.0 : static_cast<double>(b.data[r]);
    const float* wr = &w.data[static_cast<size_t>(r) * cols];
    for (int c = 0; c < cols; ++c) acc += static_cast<double>(wr[c]) * static_cast<double>(x.data[c]);
    out.data[r] = static_cast<float>(acc);
  }
  return out;
}

std::pair<Tensor, Tensor> lstm_step(const Tensor& x, const Tensor& h_prev, const Tensor& c_prev,
                                    const LstmWeights& w) {
  const int hidden = w.hidden();
  if (static_cast<int>(x.numel()) != w.input())
    throw DimensionError("lstm_step: input dim " + std::to_string(x.numel()) + " vs weights " +
                         std::to_string(w.input()));
  if (static_cast<int>(h_prev.numel()) != hidden || static_cast<int>(c_prev.numel()) != hidden)
    throw DimensionError("lstm_step: state dim mismatch");

  Tensor zx = linear(*w.wx, x, *w.b);
  Tensor zh = linear(*w.wh, h_prev, Tensor{});
  Tensor h({hidden}), c({hidden});
  for (int i = 0; i < hidden; ++i) {
    double zi = static_cast<double>(zx.data[i]) + zh.data[i];
    double zf = static_cast<double>(zx.data[hidden + i]) + zh.data[hidden + i];
    double zg = static_cast<double>(zx.data[2 * hidden + i]) + zh.data[2 * hidden + i];
    double zo = static_cast<double>(zx.data[3 * hidden + i]) + zh.data[3 * hidden + i];
    double ci = sigmoid(zf) * c_prev.data[i] + sigmoid(zi) * std::tanh(zg);
    c.data[i] = static_cast<float>(ci);
    h.data[i] = static_cast<float>(sigmoid(zo) * std::tanh(ci));
  }
  return {std::move(h), std::move(c)};
}

std::vector<Tensor> lstm_run(const std::vector<Tensor>& xs, const LstmWeights& w) {
  if (xs.empty()) throw DimensionError("lstm_run of empty sequence");
  Tensor h({w.hidden()}), c({w.hidden()});
  std::vector<Tensor> out;
  out.reserve(xs.size());
  for (const Tensor& x : xs) {
    auto [h2, c2] = lstm_step(x, h, c, w);
    h = std::move(h2);
    c = std::move(c2);
    out.push_back(h);
  }
  return out;
}

std::vector<Tensor> bilstm_run(const std::vector<Tensor>& xs, const LstmWeights& fwd,
                               const LstmWeights& bwd) {
  if (xs.empty()) throw DimensionError("bilstm_run of empty sequence");
  for (const Tensor& x : xs)
    if (x.numel() != xs[0].numel()) throw DimensionError("bilstm_run: non-uniform input dims");
  std::vector<Tensor> f = lstm_run(xs, fwd);
  std::vector<Tensor> rev(xs.rbegin(), xs.rend());
  std::vector<Tensor> b = lstm_run(rev, bwd);
  std::vector<Tensor> out;
  out.reserve(xs.size());
  for (size_t i = 0; i < xs.size(); ++i) out.push_back(concat(f[i], b[xs.size() - 1 - i]));
  return out;
}

Tensor concat(const Tensor& a, const Tensor& b) {
  std::vector<float> d;
  d.reserve(a.numel() + b.numel());
  d.insert(d.end(), a.data.begin(), a.data.end());
  d.insert(d.end(), b.data.begin(), b.data.end());
  return Tensor::vec(std::move(d));
}

}  // namespace dfkit::nn
