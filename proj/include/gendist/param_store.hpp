#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "gendist/tensor.hpp"

namespace gendist {

// Named trainable parameter with gradient and Adam state; all same shape.
struct Param {
  Tensor value;
  Tensor grad;
  Tensor adam_m;
  Tensor adam_v;
  std::size_t step = 0;
};

// Owned by exactly one training loop; ordered by name so that iteration,
// checkpointing, and the optimizer sweep are deterministic.
class ParamStore {
 public:
  Param& create(const std::string& name, std::vector<std::size_t> shape);
  Param& at(const std::string& name);
  const Param& at(const std::string& name) const;
  bool contains(const std::string& name) const { return params_.count(name) != 0; }

  std::map<std::string, Param>& params() { return params_; }
  const std::map<std::string, Param>& params() const { return params_; }

  std::size_t total_size() const;
  void zero_grads();

  // header JSON (names, shapes, step) + raw little-endian doubles
  // (value, adam_m, adam_v per parameter); reload is byte-exact
  void save(const std::string& path) const;
  static ParamStore load(const std::string& path);

 private:
  std::map<std::string, Param> params_;
};

struct AdamConfig {
  double lr = 1e-3;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double eps = 1e-8;
  double weight_decay = 0.0;  // decoupled; 0 disables
};

// Bias-corrected Adam over every parameter; gradients are zeroed afterwards.
void adam_step(ParamStore& store, const AdamConfig& cfg);

}  // namespace gendist
