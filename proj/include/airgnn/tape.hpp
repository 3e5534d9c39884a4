#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "airgnn/array.hpp"

namespace airgnn::diffcore {

using VarId = int32_t;

class ParameterStore;

// name -> gradient accumulator, one per training worker; merged into the
// ParameterStore in a fixed order so batch gradients are deterministic for
// any thread count.
using GradientBuffer = std::map<std::string, Array>;

// Eager reverse-mode tape over dense real arrays. Ops compute values on
// creation and record a backward closure; backward() walks nodes in reverse
// creation order (a topological order), visiting each exactly once.
class Tape {
 public:
  Tape() = default;
  Tape(const Tape&) = delete;
  Tape& operator=(const Tape&) = delete;

  // leaves
  VarId constant(Array v);
  VarId leaf(Array v);
  VarId param(const ParameterStore& store, const std::string& name);

  // primitives
  VarId matmul(VarId a, VarId b);
  VarId add(VarId a, VarId b);  // same shape, or b broadcast as a row vector
  VarId mul(VarId a, VarId b);  // Hadamard
  VarId concat_cols(const std::vector<VarId>& parts);
  VarId concat_rows(const std::vector<VarId>& parts);
  VarId slice_cols(VarId x, int from, int to);
  VarId slice_rows(VarId x, int from, int to);
  VarId transpose(VarId x);
  VarId sigmoid(VarId x);
  VarId tanh(VarId x);
  VarId relu(VarId x);
  VarId log(VarId x);
  VarId sqrt(VarId x);
  VarId asinh(VarId x);
  VarId softmax_rows(VarId x);
  // softmax over unmasked entries per row; fully masked rows yield zeros
  VarId masked_softmax_rows(VarId x, const std::vector<uint8_t>& mask);
  // rows are split into blocks of `block` columns; each block is scaled to
  // unit L2 norm (norm + eps in the denominator guards zero rows)
  VarId l2_normalize_blocks(VarId x, int block, double eps = 1e-12);
  VarId sum(VarId x);
  VarId mean(VarId x);
  VarId affine(VarId x, double scale, double shift = 0.0);
  VarId clamp(VarId x, double lo, double hi);
  // out[r, k*block+j] = m[r, k*block+j] * s[r, k]
  VarId scale_blocks(VarId m, VarId s, int block);
  // value = x + z with z treated as a constant: backward is identity
  VarId add_noise(VarId x, const Array& z);

  const Array& val(VarId id) const { return nodes_[id].value; }
  const Array& grad(VarId id) const;
  bool has_grad(VarId id) const { return !grads_[id].data.empty(); }

  void backward(VarId root);
  void accumulate_param_grads(GradientBuffer& buffer) const;

  size_t size() const { return nodes_.size(); }

  // Rounds every op output to float32 precision (inference mode).
  void set_float32_mode(bool on) { float32_mode_ = on; }
  // Checks every op output for NaN/Inf; throws naming the op.
  void set_check_finite(bool on) { check_finite_ = on; }

 private:
  struct Node {
    Array value;
    std::function<void(Tape&)> back;
    bool needs_grad = false;
    const char* op = "leaf";
  };

  VarId push(Array value, bool needs_grad, const char* op,
             std::function<void(Tape&)> back);
  Array& grad_buffer(VarId id);
  bool needs(VarId id) const { return nodes_[id].needs_grad; }

  std::vector<Node> nodes_;
  std::vector<Array> grads_;  // lazily allocated, parallel to nodes_
  std::vector<std::pair<std::string, VarId>> param_ids_;
  bool float32_mode_ = false;
  bool check_finite_ = false;
};

}  // namespace airgnn::diffcore
