#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace airgnn::diffcore {

// Dense row-major real array, rank 1 or 2. Training math is 64-bit; a
// float32 rounding mode for inference lives on the tape, not here.
struct Array {
  std::vector<int> shape;
  std::vector<double> data;

  Array() = default;
  explicit Array(std::vector<int> s) : shape(std::move(s)) {
    data.assign(numel_of(shape), 0.0);
  }
  Array(std::vector<int> s, std::vector<double> d)
      : shape(std::move(s)), data(std::move(d)) {
    if (data.size() != numel_of(shape)) {
      throw std::invalid_argument("Array: data size does not match shape");
    }
  }

  static size_t numel_of(const std::vector<int>& s) {
    size_t n = 1;
    for (int d : s) {
      if (d < 0) throw std::invalid_argument("Array: negative dimension");
      n *= static_cast<size_t>(d);
    }
    return n;
  }

  static Array zeros(int rows, int cols) { return Array({rows, cols}); }
  static Array zeros_like(const Array& other) { return Array(other.shape); }
  static Array full(std::vector<int> s, double v) {
    Array a(std::move(s));
    for (auto& x : a.data) x = v;
    return a;
  }
  static Array scalar(double v) { return Array({1}, {v}); }

  size_t numel() const { return data.size(); }
  int rank() const { return static_cast<int>(shape.size()); }
  int rows() const { return rank() == 2 ? shape[0] : 1; }
  int cols() const { return rank() == 2 ? shape[1] : (rank() == 1 ? shape[0] : 1); }

  double& at(int r, int c) { return data[static_cast<size_t>(r) * cols() + c]; }
  double at(int r, int c) const { return data[static_cast<size_t>(r) * cols() + c]; }

  bool same_shape(const Array& other) const { return shape == other.shape; }
  std::string shape_str() const;

  bool all_finite() const;
  void round_to_float32();
};

// GEMM kernels. The omp variants partition rows, so they produce bitwise
// identical results to the serial reference; tests assert that.
namespace kernels {

namespace serial {
void gemm_nn(const double* a, const double* b, double* c, int m, int k, int n);
void gemm_nt_acc(const double* a, const double* b, double* c, int m, int k, int n);
void gemm_tn_acc(const double* a, const double* b, double* c, int m, int k, int n);
}  // namespace serial

namespace omp {
void gemm_nn(const double* a, const double* b, double* c, int m, int k, int n);
void gemm_nt_acc(const double* a, const double* b, double* c, int m, int k, int n);
void gemm_tn_acc(const double* a, const double* b, double* c, int m, int k, int n);
}  // namespace omp

// Dispatchers: omp when the problem is large enough and we are not already
// inside a parallel region.
void gemm_nn(const double* a, const double* b, double* c, int m, int k, int n);
void gemm_nt_acc(const double* a, const double* b, double* c, int m, int k, int n);
void gemm_tn_acc(const double* a, const double* b, double* c, int m, int k, int n);

}  // namespace kernels

// C = A(m x k) * B(k x n)
Array matmul_value(const Array& a, const Array& b);

}  // namespace airgnn::diffcore
