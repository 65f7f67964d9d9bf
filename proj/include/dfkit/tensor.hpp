#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dfkit/error.hpp"

namespace dfkit::nn {

/// Dense row-major float32 tensor. The value type shared by parameters,
/// checkpoints and extracted features.
struct Tensor {
  std::vector<int> shape;
  std::vector<float> data;

  Tensor() = default;
  explicit Tensor(std::vector<int> s);
  Tensor(std::vector<int> s, std::vector<float> d);

  static Tensor zeros(std::vector<int> s) { return Tensor(std::move(s)); }
  static Tensor vec(std::vector<float> d);

  size_t numel() const { return data.size(); }
  int rank() const { return static_cast<int>(shape.size()); }

  float& at(int i) { return data[static_cast<size_t>(i)]; }
  float at(int i) const { return data[static_cast<size_t>(i)]; }
  // rank-2 access
  float& at(int r, int c) { return data[static_cast<size_t>(r) * shape[1] + c]; }
  float at(int r, int c) const { return data[static_cast<size_t>(r) * shape[1] + c]; }

  bool same_shape(const Tensor& o) const { return shape == o.shape; }
  bool all_finite() const;
};

size_t shape_numel(const std::vector<int>& shape);
std::string shape_str(const std::vector<int>& shape);

}  // namespace dfkit::nn
