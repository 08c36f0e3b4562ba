#include "gendist/tensor.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace gendist {

Tensor::Tensor(std::vector<std::size_t> shp) : shape(std::move(shp)) {
  std::size_t n = 1;
  for (std::size_t d : shape) n *= d;
  data.assign(n, 0.0);
}

void Tensor::fill(double v) { std::fill(data.begin(), data.end(), v); }

std::string shape_str(const Tensor& t) {
  std::string s = "[";
  for (std::size_t i = 0; i < t.shape.size(); ++i) {
    if (i > 0) s += ",";
    s += std::to_string(t.shape[i]);
  }
  return s + "]";
}

void check_shape(const char* op, const Tensor& t, const std::vector<std::size_t>& expect) {
  if (t.shape != expect) {
    Tensor e;
    e.shape = expect;
    throw std::runtime_error(std::string(op) + ": shape mismatch, got " + shape_str(t) +
                             ", expected " + shape_str(e));
  }
}

bool all_finite(const Tensor& t) {
  for (double v : t.data) {
    if (!std::isfinite(v)) return false;
  }
  return true;
}

}  // namespace gendist
