#include "dfkit/params.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <fstream>

namespace dfkit::nn {

Tensor& ParamStore::add(const std::string& name, std::vector<int> shape) {
  if (has(name)) throw ValidationError("duplicate parameter name: " + name);
  Param p;
  p.value = Tensor(shape);
  p.grad = Tensor(std::move(shape));
  auto [it, ok] = entries_.emplace(name, std::move(p));
  (void)ok;
  return it->second.value;
}

Param& ParamStore::at(const std::string& name) {
  auto it = entries_.find(name);
  if (it == entries_.end()) throw ValidationError("unknown parameter: " + name);
  return it->second;
}

const Param& ParamStore::at(const std::string& name) const {
  auto it = entries_.find(name);
  if (it == entries_.end()) throw ValidationError("unknown parameter: " + name);
  return it->second;
}

void ParamStore::zero_grads() {
  for (auto& [name, p] : entries_) std::fill(p.grad.data.begin(), p.grad.data.end(), 0.0f);
}

Tensor& ParamStore::add_embedding(const std::string& name, int rows, int cols, Rng& rng) {
  Tensor& t = add(name, {rows, cols});
  for (float& v : t.data) v = static_cast<float>(rng.uniform(-0.1, 0.1));
  return t;
}

Tensor& ParamStore::add_xavier(const std::string& name, std::vector<int> shape, Rng& rng) {
  Tensor& t = add(name, std::move(shape));
  int fan_out = t.shape[0];
  int fan_in = t.rank() >= 2 ? t.shape[1] : 1;
  double limit = std::sqrt(6.0 / (fan_in + fan_out));
  for (float& v : t.data) v = static_cast<float>(rng.uniform(-limit, limit));
  return t;
}

namespace {

constexpr char kMagic[4] = {'D', 'F', 'C', 'K'};
constexpr uint32_t kVersion = 1;

void put_u32(std::ostream& os, uint32_t v) {
  char b[4] = {static_cast<char>(v & 0xff), static_cast<char>((v >> 8) & 0xff),
               static_cast<char>((v >> 16) & 0xff), static_cast<char>((v >> 24) & 0xff)};
  os.write(b, 4);
}

uint32_t get_u32(std::istream& is) {
  unsigned char b[4];
  is.read(reinterpret_cast<char*>(b), 4);
  if (!is) throw IoError("truncated checkpoint");
  return static_cast<uint32_t>(b[0]) | (static_cast<uint32_t>(b[1]) << 8) |
         (static_cast<uint32_t>(b[2]) << 16) | (static_cast<uint32_t>(b[3]) << 24);
}

void put_f32(std::ostream& os, float f) {
  uint32_t v;
  std::memcpy(&v, &f, 4);
  put_u32(os, v);
}

float get_f32(std::istream& is) {
  uint32_t v = get_u32(is);
  float f;
  std::memcpy(&f, &v, 4);
  return f;
}

}  // namespace

void save_checkpoint(const ParamStore& params, const std::string& path) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw IoError("cannot open checkpoint for writing: " + path);
  os.write(kMagic, 4);
  put_u32(os, kVersion);
  put_u32(os, static_cast<uint32_t>(params.size()));
  for (const auto& [name, p] : params) {
    put_u32(os, static_cast<uint32_t>(name.size()));
    os.write(name.data(), static_cast<std::streamsize>(name.size()));
    put_u32(os, static_cast<uint32_t>(p.value.rank()));
    for (int e : p.value.shape) put_u32(os, static_cast<uint32_t>(e));
    for (float f : p.value.data) put_f32(os, f);
  }
  if (!os) throw IoError("write failure on checkpoint: " + path);
}

ParamStore load_checkpoint(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw IoError("cannot open checkpoint: " + path);
  char magic[4];
  is.read(magic, 4);
  if (!is || std::memcmp(magic, kMagic, 4) != 0) throw IoError("bad checkpoint magic in " + path);
  uint32_t version = get_u32(is);
  if (version != kVersion) throw IoError("unsupported checkpoint version " + std::to_string(version));
  uint32_t count = get_u32(is);
  ParamStore store;
  for (uint32_t i = 0; i < count; ++i) {
    uint32_t name_len = get_u32(is);
    std::string name(name_len, '\0');
    is.read(name.data(), name_len);
    if (!is) throw IoError("truncated checkpoint entry name");
    uint32_t rank = get_u32(is);
    std::vector<int> shape(rank);
    for (uint32_t d = 0; d < rank; ++d) shape[d] = static_cast<int>(get_u32(is));
    Tensor& t = store.add(name, shape);
    for (float& f : t.data) f = get_f32(is);
  }
  return store;
}

}  // namespace dfkit::nn
