#include "airgnn/tape.hpp"

#include <cmath>
#include <cstring>
#include <stdexcept>

#include "airgnn/params.hpp"

namespace airgnn::diffcore {

VarId Tape::push(Array value, bool needs_grad, const char* op,
                 std::function<void(Tape&)> back) {
  if (float32_mode_) value.round_to_float32();
  if (check_finite_ && !value.all_finite()) {
    throw std::runtime_error(std::string("tape: non-finite output of op '") + op + "'");
  }
  Node node;
  node.value = std::move(value);
  node.back = std::move(back);
  node.needs_grad = needs_grad;
  node.op = op;
  nodes_.push_back(std::move(node));
  grads_.emplace_back();
  return static_cast<VarId>(nodes_.size() - 1);
}

Array& Tape::grad_buffer(VarId id) {
  Array& g = grads_[id];
  if (g.data.empty()) g = Array(nodes_[id].value.shape);
  return g;
}

const Array& Tape::grad(VarId id) const {
  if (grads_[id].data.empty()) {
    throw std::runtime_error("tape: gradient not computed for node");
  }
  return grads_[id];
}

VarId Tape::constant(Array v) { return push(std::move(v), false, "constant", nullptr); }

VarId Tape::leaf(Array v) { return push(std::move(v), true, "leaf", nullptr); }

VarId Tape::param(const ParameterStore& store, const std::string& name) {
  VarId id = push(store.value(name), true, "param", nullptr);
  param_ids_.emplace_back(name, id);
  return id;
}

VarId Tape::matmul(VarId a, VarId b) {
  const Array& av = val(a);
  const Array& bv = val(b);
  Array out = matmul_value(av, bv);
  bool ng = needs(a) || needs(b);
  VarId id = push(std::move(out), ng, "matmul", nullptr);
  if (ng) {
    nodes_[id].back = [a, b, id](Tape& t) {
      const Array& g = t.grads_[id];
      const Array& av2 = t.val(a);
      const Array& bv2 = t.val(b);
      const int m = av2.shape[0], k = av2.shape[1], n = bv2.shape[1];
      if (t.needs(a)) {
        Array& ga = t.grad_buffer(a);
        kernels::gemm_nt_acc(g.data.data(), bv2.data.data(), ga.data.data(), m, n, k);
      }
      if (t.needs(b)) {
        Array& gb = t.grad_buffer(b);
        kernels::gemm_tn_acc(av2.data.data(), g.data.data(), gb.data.data(), m, k, n);
      }
    };
  }
  return id;
}

VarId Tape::add(VarId a, VarId b) {
  const Array& av = val(a);
  const Array& bv = val(b);
  const bool broadcast = !av.same_shape(bv);
  if (broadcast) {
    if (!(bv.numel() == static_cast<size_t>(av.cols()) && av.rank() == 2)) {
      throw std::invalid_argument("add: shape mismatch " + av.shape_str() + " + " +
                                  bv.shape_str());
    }
  }
  Array out = av;
  if (broadcast) {
    const int rows = av.rows(), cols = av.cols();
    for (int r = 0; r < rows; ++r) {
      for (int c = 0; c < cols; ++c) out.data[static_cast<size_t>(r) * cols + c] += bv.data[c];
    }
  } else {
    for (size_t i = 0; i < out.numel(); ++i) out.data[i] += bv.data[i];
  }
  bool ng = needs(a) || needs(b);
  VarId id = push(std::move(out), ng, "add", nullptr);
  if (ng) {
    nodes_[id].back = [a, b, id, broadcast](Tape& t) {
      const Array& g = t.grads_[id];
      if (t.needs(a)) {
        Array& ga = t.grad_buffer(a);
        for (size_t i = 0; i < g.numel(); ++i) ga.data[i] += g.data[i];
      }
      if (t.needs(b)) {
        Array& gb = t.grad_buffer(b);
        if (broadcast) {
          const int rows = g.rows(), cols = g.cols();
          for (int r = 0; r < rows; ++r) {
            for (int c = 0; c < cols; ++c) gb.data[c] += g.data[static_cast<size_t>(r) * cols + c];
          }
        } else {
          for (size_t i = 0; i < g.numel(); ++i) gb.data[i] += g.data[i];
        }
      }
    };
  }
  return id;
}

VarId Tape::mul(VarId a, VarId b) {
  const Array& av = val(a);
  const Array& bv = val(b);
  if (!av.same_shape(bv)) {
    throw std::invalid_argument("mul: shape mismatch " + av.shape_str() + " * " +
                                bv.shape_str());
  }
  Array out = av;
  for (size_t i = 0; i < out.numel(); ++i) out.data[i] *= bv.data[i];
  bool ng = needs(a) || needs(b);
  VarId id = push(std::move(out), ng, "mul", nullptr);
  if (ng) {
    nodes_[id].back = [a, b, id](Tape& t) {
      const Array& g = t.grads_[id];
      const Array& av2 = t.val(a);
      const Array& bv2 = t.val(b);
      if (t.needs(a)) {
        Array& ga = t.grad_buffer(a);
        for (size_t i = 0; i < g.numel(); ++i) ga.data[i] += g.data[i] * bv2.data[i];
      }
      if (t.needs(b)) {
        Array& gb = t.grad_buffer(b);
        for (size_t i = 0; i < g.numel(); ++i) gb.data[i] += g.data[i] * av2.data[i];
      }
    };
  }
  return id;
}

VarId Tape::concat_cols(const std::vector<VarId>& parts) {
  if (parts.empty()) throw std::invalid_argument("concat_cols: no parts");
  const int rows = val(parts[0]).rows();
  int total = 0;
  bool ng = false;
  for (VarId p : parts) {
    const Array& v = val(p);
    if (v.rank() != 2 || v.rows() != rows) {
      throw std::invalid_argument("concat_cols: row mismatch");
    }
    total += v.cols();
    ng = ng || needs(p);
  }
  Array out({rows, total});
  int off = 0;
  for (VarId p : parts) {
    const Array& v = val(p);
    const int c = v.cols();
    for (int r = 0; r < rows; ++r) {
      std::memcpy(&out.data[static_cast<size_t>(r) * total + off],
                  &v.data[static_cast<size_t>(r) * c], sizeof(double) * c);
    }
    off += c;
  }
  VarId id = push(std::move(out), ng, "concat_cols", nullptr);
  if (ng) {
    std::vector<VarId> ps = parts;
    nodes_[id].back = [ps, id, rows, total](Tape& t) {
      const Array& g = t.grads_[id];
      int off2 = 0;
      for (VarId p : ps) {
        const int c = t.val(p).cols();
        if (t.needs(p)) {
          Array& gp = t.grad_buffer(p);
          for (int r = 0; r < rows; ++r) {
            for (int j = 0; j < c; ++j) {
              gp.data[static_cast<size_t>(r) * c + j] +=
                  g.data[static_cast<size_t>(r) * total + off2 + j];
            }
          }
        }
        off2 += c;
      }
    };
  }
  return id;
}

VarId Tape::concat_rows(const std::vector<VarId>& parts) {
  if (parts.empty()) throw std::invalid_argument("concat_rows: no parts");
  const int cols = val(parts[0]).cols();
  int total = 0;
  bool ng = false;
  for (VarId p : parts) {
    const Array& v = val(p);
    if (v.rank() != 2 || v.cols() != cols) {
      throw std::invalid_argument("concat_rows: column mismatch");
    }
    total += v.rows();
    ng = ng || needs(p);
  }
  Array out({total, cols});
  size_t off = 0;
  for (VarId p : parts) {
    const Array& v = val(p);
    std::memcpy(&out.data[off], v.data.data(), sizeof(double) * v.numel());
    off += v.numel();
  }
  VarId id = push(std::move(out), ng, "concat_rows", nullptr);
  if (ng) {
    std::vector<VarId> ps = parts;
    nodes_[id].back = [ps, id](Tape& t) {
      const Array& g = t.grads_[id];
      size_t off2 = 0;
      for (VarId p : ps) {
        const size_t n = t.val(p).numel();
        if (t.needs(p)) {
          Array& gp = t.grad_buffer(p);
          for (size_t i = 0; i < n; ++i) gp.data[i] += g.data[off2 + i];
        }
        off2 += n;
      }
    };
  }
  return id;
}

VarId Tape::slice_rows(VarId x, int from, int to) {
  const Array& v = val(x);
  if (v.rank() != 2 || from < 0 || to > v.rows() || from >= to) {
    throw std::invalid_argument("slice_rows: bad range");
  }
  const int cols = v.cols(), h = to - from;
  Array out({h, cols});
  std::memcpy(out.data.data(), &v.data[static_cast<size_t>(from) * cols],
              sizeof(double) * out.numel());
  bool ng = needs(x);
  VarId id = push(std::move(out), ng, "slice_rows", nullptr);
  if (ng) {
    nodes_[id].back = [x, id, from, cols, h](Tape& t) {
      const Array& g = t.grads_[id];
      Array& gx = t.grad_buffer(x);
      for (size_t i = 0; i < static_cast<size_t>(h) * cols; ++i) {
        gx.data[static_cast<size_t>(from) * cols + i] += g.data[i];
      }
    };
  }
  return id;
}

VarId Tape::transpose(VarId x) {
  const Array& v = val(x);
  if (v.rank() != 2) throw std::invalid_argument("transpose: rank-2 required");
  const int rows = v.rows(), cols = v.cols();
  Array out({cols, rows});
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      out.data[static_cast<size_t>(c) * rows + r] = v.data[static_cast<size_t>(r) * cols + c];
    }
  }
  bool ng = needs(x);
  VarId id = push(std::move(out), ng, "transpose", nullptr);
  if (ng) {
    nodes_[id].back = [x, id, rows, cols](Tape& t) {
      const Array& g = t.grads_[id];
      Array& gx = t.grad_buffer(x);
      for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) {
          gx.data[static_cast<size_t>(r) * cols + c] +=
              g.data[static_cast<size_t>(c) * rows + r];
        }
      }
    };
  }
  return id;
}

VarId Tape::slice_cols(VarId x, int from, int to) {
  const Array& v = val(x);
  if (v.rank() != 2 || from < 0 || to > v.cols() || from >= to) {
    throw std::invalid_argument("slice_cols: bad range");
  }
  const int rows = v.rows(), cols = v.cols(), w = to - from;
  Array out({rows, w});
  for (int r = 0; r < rows; ++r) {
    std::memcpy(&out.data[static_cast<size_t>(r) * w],
                &v.data[static_cast<size_t>(r) * cols + from], sizeof(double) * w);
  }
  bool ng = needs(x);
  VarId id = push(std::move(out), ng, "slice_cols", nullptr);
  if (ng) {
    nodes_[id].back = [x, id, from, rows, cols, w](Tape& t) {
      const Array& g = t.grads_[id];
      Array& gx = t.grad_buffer(x);
      for (int r = 0; r < rows; ++r) {
        for (int j = 0; j < w; ++j) {
          gx.data[static_cast<size_t>(r) * cols + from + j] +=
              g.data[static_cast<size_t>(r) * w + j];
        }
      }
    };
  }
  return id;
}

VarId Tape::sigmoid(VarId x) {
  Array out = val(x);
  for (auto& v : out.data) v = 1.0 / (1.0 + std::exp(-v));
  bool ng = needs(x);
  VarId id = push(std::move(out), ng, "sigmoid", nullptr);
  if (ng) {
    nodes_[id].back = [x, id](Tape& t) {
      const Array& g = t.grads_[id];
      const Array& y = t.val(id);
      Array& gx = t.grad_buffer(x);
      for (size_t i = 0; i < g.numel(); ++i) {
        gx.data[i] += g.data[i] * y.data[i] * (1.0 - y.data[i]);
      }
    };
  }
  return id;
}

VarId Tape::tanh(VarId x) {
  Array out = val(x);
  for (auto& v : out.data) v = std::tanh(v);
  bool ng = needs(x);
  VarId id = push(std::move(out), ng, "tanh", nullptr);
  if (ng) {
    nodes_[id].back = [x, id](Tape& t) {
      const Array& g = t.grads_[id];
      const Array& y = t.val(id);
      Array& gx = t.grad_buffer(x);
      for (size_t i = 0; i < g.numel(); ++i) {
        gx.data[i] += g.data[i] * (1.0 - y.data[i] * y.data[i]);
      }
    };
  }
  return id;
}

VarId Tape::relu(VarId x) {
  Array out = val(x);
  for (auto& v : out.data) v = v > 0.0 ? v : 0.0;
  bool ng = needs(x);
  VarId id = push(std::move(out), ng, "relu", nullptr);
  if (ng) {
    nodes_[id].back = [x, id](Tape& t) {
      const Array& g = t.grads_[id];
      const Array& xv = t.val(x);
      Array& gx = t.grad_buffer(x);
      for (size_t i = 0; i < g.numel(); ++i) {
        if (xv.data[i] > 0.0) gx.data[i] += g.data[i];
      }
    };
  }
  return id;
}

VarId Tape::log(VarId x) {
  Array out = val(x);
  for (auto& v : out.data) v = std::log(v);
  bool ng = needs(x);
  VarId id = push(std::move(out), ng, "log", nullptr);
  if (ng) {
    nodes_[id].back = [x, id](Tape& t) {
      const Array& g = t.grads_[id];
      const Array& xv = t.val(x);
      Array& gx = t.grad_buffer(x);
      for (size_t i = 0; i < g.numel(); ++i) gx.data[i] += g.data[i] / xv.data[i];
    };
  }
  return id;
}

VarId Tape::sqrt(VarId x) {
  Array out = val(x);
  for (auto& v : out.data) v = std::sqrt(v);
  bool ng = needs(x);
  VarId id = push(std::move(out), ng, "sqrt", nullptr);
  if (ng) {
    nodes_[id].back = [x, id](Tape& t) {
      const Array& g = t.grads_[id];
      const Array& y = t.val(id);
      Array& gx = t.grad_buffer(x);
      for (size_t i = 0; i < g.numel(); ++i) {
        gx.data[i] += g.data[i] * 0.5 / (y.data[i] > 0.0 ? y.data[i] : 1e-300);
      }
    };
  }
  return id;
}

VarId Tape::asinh(VarId x) {
  Array out = val(x);
  for (auto& v : out.data) v = std::asinh(v);
  bool ng = needs(x);
  VarId id = push(std::move(out), ng, "asinh", nullptr);
  if (ng) {
    nodes_[id].back = [x, id](Tape& t) {
      const Array& g = t.grads_[id];
      const Array& xv = t.val(x);
      Array& gx = t.grad_buffer(x);
      for (size_t i = 0; i < g.numel(); ++i) {
        gx.data[i] += g.data[i] / std::sqrt(xv.data[i] * xv.data[i] + 1.0);
      }
    };
  }
  return id;
}

VarId Tape::softmax_rows(VarId x) {
  const Array& v = val(x);
  Array out = v;
  const int rows = v.rows(), cols = v.cols();
  for (int r = 0; r < rows; ++r) {
    double* row = &out.data[static_cast<size_t>(r) * cols];
    double mx = row[0];
    for (int c = 1; c < cols; ++c) mx = std::max(mx, row[c]);
    double s = 0.0;
    for (int c = 0; c < cols; ++c) {
      row[c] = std::exp(row[c] - mx);
      s += row[c];
    }
    for (int c = 0; c < cols; ++c) row[c] /= s;
  }
  bool ng = needs(x);
  VarId id = push(std::move(out), ng, "softmax", nullptr);
  if (ng) {
    nodes_[id].back = [x, id, rows, cols](Tape& t) {
      const Array& g = t.grads_[id];
      const Array& y = t.val(id);
      Array& gx = t.grad_buffer(x);
      for (int r = 0; r < rows; ++r) {
        const double* yr = &y.data[static_cast<size_t>(r) * cols];
        const double* gr = &g.data[static_cast<size_t>(r) * cols];
        double dot = 0.0;
        for (int c = 0; c < cols; ++c) dot += yr[c] * gr[c];
        double* gxr = &gx.data[static_cast<size_t>(r) * cols];
        for (int c = 0; c < cols; ++c) gxr[c] += yr[c] * (gr[c] - dot);
      }
    };
  }
  return id;
}

VarId Tape::masked_softmax_rows(VarId x, const std::vector<uint8_t>& mask) {
  const Array& v = val(x);
  if (mask.size() != v.numel()) {
    throw std::invalid_argument("masked_softmax: mask size mismatch");
  }
  Array out(v.shape);
  const int rows = v.rows(), cols = v.cols();
  for (int r = 0; r < rows; ++r) {
    const double* row = &v.data[static_cast<size_t>(r) * cols];
    const uint8_t* mr = &mask[static_cast<size_t>(r) * cols];
    double mx = -1e300;
    bool any = false;
    for (int c = 0; c < cols; ++c) {
      if (mr[c]) {
        mx = any ? std::max(mx, row[c]) : row[c];
        any = true;
      }
    }
    double* orow = &out.data[static_cast<size_t>(r) * cols];
    if (!any) continue;  // fully masked row stays zero
    double s = 0.0;
    for (int c = 0; c < cols; ++c) {
      if (mr[c]) {
        orow[c] = std::exp(row[c] - mx);
        s += orow[c];
      }
    }
    for (int c = 0; c < cols; ++c) orow[c] /= s;
  }
  bool ng = needs(x);
  VarId id = push(std::move(out), ng, "masked_softmax", nullptr);
  if (ng) {
    std::vector<uint8_t> m = mask;
    nodes_[id].back = [x, id, m, rows, cols](Tape& t) {
      const Array& g = t.grads_[id];
      const Array& y = t.val(id);
      Array& gx = t.grad_buffer(x);
      for (int r = 0; r < rows; ++r) {
        const double* yr = &y.data[static_cast<size_t>(r) * cols];
        const double* gr = &g.data[static_cast<size_t>(r) * cols];
        const uint8_t* mr = &m[static_cast<size_t>(r) * cols];
        double dot = 0.0;
        for (int c = 0; c < cols; ++c) {
          if (mr[c]) dot += yr[c] * gr[c];
        }
        double* gxr = &gx.data[static_cast<size_t>(r) * cols];
        for (int c = 0; c < cols; ++c) {
          if (mr[c]) gxr[c] += yr[c] * (gr[c] - dot);
        }
      }
    };
  }
  return id;
}

VarId Tape::l2_normalize_blocks(VarId x, int block, double eps) {
  const Array& v = val(x);
  if (v.rank() != 2 || block <= 0 || v.cols() % block != 0) {
    throw std::invalid_argument("l2_normalize_blocks: cols not divisible by block");
  }
  const int rows = v.rows(), cols = v.cols(), nb = cols / block;
  Array out = v;
  std::vector<double> norms(static_cast<size_t>(rows) * nb);
  for (int r = 0; r < rows; ++r) {
    for (int b = 0; b < nb; ++b) {
      double* seg = &out.data[static_cast<size_t>(r) * cols + static_cast<size_t>(b) * block];
      double n2 = 0.0;
      for (int j = 0; j < block; ++j) n2 += seg[j] * seg[j];
      const double n = std::sqrt(n2);
      norms[static_cast<size_t>(r) * nb + b] = n;
      const double s = n + eps;
      for (int j = 0; j < block; ++j) seg[j] /= s;
    }
  }
  bool ng = needs(x);
  VarId id = push(std::move(out), ng, "l2_normalize", nullptr);
  if (ng) {
    nodes_[id].back = [x, id, block, eps, rows, cols, nb, norms](Tape& t) {
      const Array& g = t.grads_[id];
      const Array& xv = t.val(x);
      Array& gx = t.grad_buffer(x);
      for (int r = 0; r < rows; ++r) {
        for (int b = 0; b < nb; ++b) {
          const size_t off = static_cast<size_t>(r) * cols + static_cast<size_t>(b) * block;
          const double n = norms[static_cast<size_t>(r) * nb + b];
          const double s = n + eps;
          // y = x / s with s = |x| + eps:
          // dL/dx_j = g_j / s - x_j * (g . x) / (s^2 * n)
          double dot = 0.0;
          for (int j = 0; j < block; ++j) dot += g.data[off + j] * xv.data[off + j];
          const double coef = n > eps ? dot / (s * s * n) : 0.0;
          for (int j = 0; j < block; ++j) {
            gx.data[off + j] += g.data[off + j] / s - xv.data[off + j] * coef;
          }
        }
      }
    };
  }
  return id;
}

VarId Tape::sum(VarId x) {
  const Array& v = val(x);
  double s = 0.0;
  for (double d : v.data) s += d;
  bool ng = needs(x);
  VarId id = push(Array::scalar(s), ng, "sum", nullptr);
  if (ng) {
    nodes_[id].back = [x, id](Tape& t) {
      const double g = t.grads_[id].data[0];
      Array& gx = t.grad_buffer(x);
      for (auto& d : gx.data) d += g;
    };
  }
  return id;
}

VarId Tape::mean(VarId x) {
  const Array& v = val(x);
  if (v.numel() == 0) throw std::invalid_argument("mean: empty input");
  double s = 0.0;
  for (double d : v.data) s += d;
  const double inv = 1.0 / static_cast<double>(v.numel());
  bool ng = needs(x);
  VarId id = push(Array::scalar(s * inv), ng, "mean", nullptr);
  if (ng) {
    nodes_[id].back = [x, id, inv](Tape& t) {
      const double g = t.grads_[id].data[0] * inv;
      Array& gx = t.grad_buffer(x);
      for (auto& d : gx.data) d += g;
    };
  }
  return id;
}

VarId Tape::affine(VarId x, double scale, double shift) {
  Array out = val(x);
  for (auto& v : out.data) v = v * scale + shift;
  bool ng = needs(x);
  VarId id = push(std::move(out), ng, "affine", nullptr);
  if (ng) {
    nodes_[id].back = [x, id, scale](Tape& t) {
      const Array& g = t.grads_[id];
      Array& gx = t.grad_buffer(x);
      for (size_t i = 0; i < g.numel(); ++i) gx.data[i] += g.data[i] * scale;
    };
  }
  return id;
}

VarId Tape::clamp(VarId x, double lo, double hi) {
  const Array& v = val(x);
  Array out = v;
  for (auto& d : out.data) d = d < lo ? lo : (d > hi ? hi : d);
  bool ng = needs(x);
  VarId id = push(std::move(out), ng, "clamp", nullptr);
  if (ng) {
    nodes_[id].back = [x, id, lo, hi](Tape& t) {
      const Array& g = t.grads_[id];
      const Array& xv = t.val(x);
      Array& gx = t.grad_buffer(x);
      for (size_t i = 0; i < g.numel(); ++i) {
        if (xv.data[i] >= lo && xv.data[i] <= hi) gx.data[i] += g.data[i];
      }
    };
  }
  return id;
}

VarId Tape::scale_blocks(VarId m, VarId s, int block) {
  const Array& mv = val(m);
  const Array& sv = val(s);
  if (mv.rank() != 2 || sv.rank() != 2 || mv.rows() != sv.rows() ||
      mv.cols() != sv.cols() * block) {
    throw std::invalid_argument("scale_blocks: shape mismatch " + mv.shape_str() +
                                " vs " + sv.shape_str());
  }
  const int rows = mv.rows(), nb = sv.cols();
  Array out = mv;
  for (int r = 0; r < rows; ++r) {
    for (int b = 0; b < nb; ++b) {
      const double f = sv.data[static_cast<size_t>(r) * nb + b];
      double* seg = &out.data[(static_cast<size_t>(r) * nb + b) * block];
      for (int j = 0; j < block; ++j) seg[j] *= f;
    }
  }
  bool ng = needs(m) || needs(s);
  VarId id = push(std::move(out), ng, "scale_blocks", nullptr);
  if (ng) {
    nodes_[id].back = [m, s, id, block, rows, nb](Tape& t) {
      const Array& g = t.grads_[id];
      const Array& mv2 = t.val(m);
      const Array& sv2 = t.val(s);
      if (t.needs(m)) {
        Array& gm = t.grad_buffer(m);
        for (int r = 0; r < rows; ++r) {
          for (int b = 0; b < nb; ++b) {
            const double f = sv2.data[static_cast<size_t>(r) * nb + b];
            const size_t off = (static_cast<size_t>(r) * nb + b) * block;
            for (int j = 0; j < block; ++j) gm.data[off + j] += g.data[off + j] * f;
          }
        }
      }
      if (t.needs(s)) {
        Array& gs = t.grad_buffer(s);
        for (int r = 0; r < rows; ++r) {
          for (int b = 0; b < nb; ++b) {
            const size_t off = (static_cast<size_t>(r) * nb + b) * block;
            double acc = 0.0;
            for (int j = 0; j < block; ++j) acc += g.data[off + j] * mv2.data[off + j];
            gs.data[static_cast<size_t>(r) * nb + b] += acc;
          }
        }
      }
    };
  }
  return id;
}

VarId Tape::add_noise(VarId x, const Array& z) {
  const Array& v = val(x);
  if (!v.same_shape(z)) throw std::invalid_argument("add_noise: shape mismatch");
  Array out = v;
  for (size_t i = 0; i < out.numel(); ++i) out.data[i] += z.data[i];
  bool ng = needs(x);
  VarId id = push(std::move(out), ng, "add_noise", nullptr);
  if (ng) {
    nodes_[id].back = [x, id](Tape& t) {
      const Array& g = t.grads_[id];
      Array& gx = t.grad_buffer(x);
      for (size_t i = 0; i < g.numel(); ++i) gx.data[i] += g.data[i];
    };
  }
  return id;
}

void Tape::backward(VarId root) {
  if (val(root).numel() != 1) {
    throw std::invalid_argument("backward: root must be scalar");
  }
  grad_buffer(root).data[0] = 1.0;
  for (VarId i = root; i >= 0; --i) {
    if (grads_[i].data.empty()) continue;  // node does not influence root
    if (nodes_[i].back) nodes_[i].back(*this);
  }
}

void Tape::accumulate_param_grads(GradientBuffer& buffer) const {
  for (const auto& [name, id] : param_ids_) {
    if (grads_[id].data.empty()) continue;
    auto it = buffer.find(name);
    if (it == buffer.end()) {
      buffer.emplace(name, grads_[id]);
    } else {
      Array& acc = it->second;
      const Array& g = grads_[id];
      for (size_t i = 0; i < g.numel(); ++i) acc.data[i] += g.data[i];
    }
  }
}

}  // namespace airgnn::diffcore
