#include "airgnn/array.hpp"

#include <omp.h>

#include <cmath>
#include <cstring>
#include <sstream>

#include "airgnn/parallel.hpp"

namespace airgnn::diffcore {

std::string Array::shape_str() const {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < shape.size(); ++i) {
    if (i) os << ",";
    os << shape[i];
  }
  os << ")";
  return os.str();
}

bool Array::all_finite() const {
  for (double v : data) {
    if (!std::isfinite(v)) return false;
  }
  return true;
}

void Array::round_to_float32() {
  for (auto& v : data) v = static_cast<double>(static_cast<float>(v));
}

namespace kernels {

namespace serial {

void gemm_nn(const double* a, const double* b, double* c, int m, int k, int n) {
  std::memset(c, 0, sizeof(double) * static_cast<size_t>(m) * n);
  for (int i = 0; i < m; ++i) {
    const double* ai = a + static_cast<size_t>(i) * k;
    double* ci = c + static_cast<size_t>(i) * n;
    for (int p = 0; p < k; ++p) {
      const double av = ai[p];
      const double* bp = b + static_cast<size_t>(p) * n;
      for (int j = 0; j < n; ++j) ci[j] += av * bp[j];
    }
  }
}

// C(m x n) += A(m x k) * B(n x k)^T
void gemm_nt_acc(const double* a, const double* b, double* c, int m, int k, int n) {
  for (int i = 0; i < m; ++i) {
    const double* ai = a + static_cast<size_t>(i) * k;
    double* ci = c + static_cast<size_t>(i) * n;
    for (int j = 0; j < n; ++j) {
      const double* bj = b + static_cast<size_t>(j) * k;
      double acc = 0.0;
      for (int p = 0; p < k; ++p) acc += ai[p] * bj[p];
      ci[j] += acc;
    }
  }
}

// C(k x n) += A(m x k)^T * B(m x n)
void gemm_tn_acc(const double* a, const double* b, double* c, int m, int k, int n) {
  for (int p = 0; p < m; ++p) {
    const double* ap = a + static_cast<size_t>(p) * k;
    const double* bp = b + static_cast<size_t>(p) * n;
    for (int i = 0; i < k; ++i) {
      const double av = ap[i];
      if (av == 0.0) continue;
      double* ci = c + static_cast<size_t>(i) * n;
      for (int j = 0; j < n; ++j) ci[j] += av * bp[j];
    }
  }
}

}  // namespace serial

namespace omp {

void gemm_nn(const double* a, const double* b, double* c, int m, int k, int n) {
  std::memset(c, 0, sizeof(double) * static_cast<size_t>(m) * n);
#pragma omp parallel for schedule(static)
  for (int i = 0; i < m; ++i) {
    const double* ai = a + static_cast<size_t>(i) * k;
    double* ci = c + static_cast<size_t>(i) * n;
    for (int p = 0; p < k; ++p) {
      const double av = ai[p];
      const double* bp = b + static_cast<size_t>(p) * n;
      for (int j = 0; j < n; ++j) ci[j] += av * bp[j];
    }
  }
}

void gemm_nt_acc(const double* a, const double* b, double* c, int m, int k, int n) {
#pragma omp parallel for schedule(static)
  for (int i = 0; i < m; ++i) {
    const double* ai = a + static_cast<size_t>(i) * k;
    double* ci = c + static_cast<size_t>(i) * n;
    for (int j = 0; j < n; ++j) {
      const double* bj = b + static_cast<size_t>(j) * k;
      double acc = 0.0;
      for (int p = 0; p < k; ++p) acc += ai[p] * bj[p];
      ci[j] += acc;
    }
  }
}

void gemm_tn_acc(const double* a, const double* b, double* c, int m, int k, int n) {
  // rows of C are independent; parallelize over output rows i
#pragma omp parallel for schedule(static)
  for (int i = 0; i < k; ++i) {
    double* ci = c + static_cast<size_t>(i) * n;
    for (int p = 0; p < m; ++p) {
      const double av = a[static_cast<size_t>(p) * k + i];
      if (av == 0.0) continue;
      const double* bp = b + static_cast<size_t>(p) * n;
      for (int j = 0; j < n; ++j) ci[j] += av * bp[j];
    }
  }
}

}  // namespace omp

namespace {
constexpr int64_t kOmpFlopThreshold = 1 << 18;

bool use_omp(int m, int k, int n) {
  if (airgnn::inside_parallel_region()) return false;
  if (airgnn::max_jobs() <= 1) return false;
  return static_cast<int64_t>(m) * k * n >= kOmpFlopThreshold;
}
}  // namespace

void gemm_nn(const double* a, const double* b, double* c, int m, int k, int n) {
  if (use_omp(m, k, n)) {
    omp::gemm_nn(a, b, c, m, k, n);
  } else {
    serial::gemm_nn(a, b, c, m, k, n);
  }
}

void gemm_nt_acc(const double* a, const double* b, double* c, int m, int k, int n) {
  if (use_omp(m, k, n)) {
    omp::gemm_nt_acc(a, b, c, m, k, n);
  } else {
    serial::gemm_nt_acc(a, b, c, m, k, n);
  }
}

void gemm_tn_acc(const double* a, const double* b, double* c, int m, int k, int n) {
  if (use_omp(m, k, n)) {
    omp::gemm_tn_acc(a, b, c, m, k, n);
  } else {
    serial::gemm_tn_acc(a, b, c, m, k, n);
  }
}

}  // namespace kernels

Array matmul_value(const Array& a, const Array& b) {
  if (a.rank() != 2 || b.rank() != 2) {
    throw std::invalid_argument("matmul: operands must be rank-2, got " +
                                a.shape_str() + " x " + b.shape_str());
  }
  if (a.shape[1] != b.shape[0]) {
    throw std::invalid_argument("matmul: inner dimensions differ: " + a.shape_str() +
                                " x " + b.shape_str());
  }
  Array c({a.shape[0], b.shape[1]});
  kernels::gemm_nn(a.data.data(), b.data.data(), c.data.data(), a.shape[0],
                   a.shape[1], b.shape[1]);
  return c;
}

}  // namespace airgnn::diffcore
