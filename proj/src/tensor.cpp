#include "dfkit/tensor.hpp"

#include <cmath>

namespace dfkit::nn {

size_t shape_numel(const std::vector<int>& shape) {
  size_t n = 1;
  for (int e : shape) {
    if (e <= 0) throw DimensionError("tensor extents must be positive, got " + shape_str(shape));
    n *= static_cast<size_t>(e);
  }
  return n;
}

std::string shape_str(const std::vector<int>& shape) {
  std::string s = "[";
  for (size_t i = 0; i < shape.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(shape[i]);
  }
  return s + "]";
}

Tensor::Tensor(std::vector<int> s) : shape(std::move(s)) {
  data.assign(shape_numel(shape), 0.0f);
}

Tensor::Tensor(std::vector<int> s, std::vector<float> d) : shape(std::move(s)), data(std::move(d)) {
  if (shape_numel(shape) != data.size())
    throw DimensionError("tensor data length " + std::to_string(data.size()) +
                         " does not match shape " + shape_str(shape));
}

Tensor Tensor::vec(std::vector<float> d) {
  if (d.empty()) throw DimensionError("empty vector tensor");
  std::vector<int> s{static_cast<int>(d.size())};
  return Tensor(std::move(s), std::move(d));
}

bool Tensor::all_finite() const {
  for (float v : data)
    if (!std::isfinite(v)) return false;
  return true;
}

}  // namespace dfkit::nn
