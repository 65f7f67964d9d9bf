#pragma once

#include <map>
#include <string>

#include "dfkit/rng.hpp"
#include "dfkit/tensor.hpp"

namespace dfkit::nn {

struct Param {
  Tensor value;
  Tensor grad;  // same shape, accumulated between optimizer steps
};

/// Named parameter table. Iteration order is lexicographic by name
/// (std::map), which every consumer relies on for reproducibility.
class ParamStore {
 public:
  /// Creates a zero-initialized entry. Throws if the name exists.
  Tensor& add(const std::string& name, std::vector<int> shape);

  bool has(const std::string& name) const { return entries_.count(name) > 0; }
  Param& at(const std::string& name);
  const Param& at(const std::string& name) const;
  Tensor& value(const std::string& name) { return at(name).value; }
  const Tensor& value(const std::string& name) const { return at(name).value; }
  Tensor& grad(const std::string& name) { return at(name).grad; }

  size_t size() const { return entries_.size(); }
  void zero_grads();

  auto begin() { return entries_.begin(); }
  auto end() { return entries_.end(); }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  // Seeded initializers. Embeddings use uniform(-0.1, 0.1), weight
  // matrices Xavier-uniform, biases stay zero.
  Tensor& add_embedding(const std::string& name, int rows, int cols, Rng& rng);
  Tensor& add_xavier(const std::string& name, std::vector<int> shape, Rng& rng);

 private:
  std::map<std::string, Param> entries_;
};

/// Binary checkpoint, "DFCK" magic, little-endian payload. Round-trips
/// bit-exactly. Saves values only (gradients are transient).
void save_checkpoint(const ParamStore& params, const std::string& path);
ParamStore load_checkpoint(const std::string& path);

}  // namespace dfkit::nn
