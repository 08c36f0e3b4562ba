#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace gendist {

// Dense row-major 64-bit float array.
struct Tensor {
  std::vector<std::size_t> shape;
  std::vector<double> data;

  Tensor() = default;
  explicit Tensor(std::vector<std::size_t> shp);

  static Tensor zeros(std::vector<std::size_t> shp) { return Tensor(std::move(shp)); }

  std::size_t size() const { return data.size(); }
  std::size_t dim(std::size_t i) const { return shape.at(i); }

  double& operator()(std::size_t i) { return data[i]; }
  double operator()(std::size_t i) const { return data[i]; }
  double& operator()(std::size_t i, std::size_t j) { return data[i * shape[1] + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data[i * shape[1] + j]; }
  double& operator()(std::size_t i, std::size_t j, std::size_t k) {
    return data[(i * shape[1] + j) * shape[2] + k];
  }
  double operator()(std::size_t i, std::size_t j, std::size_t k) const {
    return data[(i * shape[1] + j) * shape[2] + k];
  }

  void fill(double v);
  bool same_shape(const Tensor& other) const { return shape == other.shape; }
};

std::string shape_str(const Tensor& t);

// Throws std::runtime_error naming `op` unless the shapes match.
void check_shape(const char* op, const Tensor& t, const std::vector<std::size_t>& expect);

bool all_finite(const Tensor& t);

}  // namespace gendist
