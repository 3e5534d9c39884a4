#include "airgnn/nn.hpp"

#include <cmath>
#include <stdexcept>

namespace airgnn::diffcore {

Array glorot_init(int rows, int cols, RngStream& rng) {
  Array w({rows, cols});
  const double bound = std::sqrt(6.0 / (rows + cols));
  for (auto& v : w.data) v = rng.uniform(-bound, bound);
  return w;
}

void init_mlp(ParameterStore& store, const MlpSpec& spec, RngStream& rng) {
  store.add(spec.prefix + ".W1", glorot_init(spec.in, spec.hidden, rng));
  store.add(spec.prefix + ".b1", Array({1, spec.hidden}));
  store.add(spec.prefix + ".W2", glorot_init(spec.hidden, spec.out, rng));
  store.add(spec.prefix + ".b2", Array({1, spec.out}));
}

MlpVars bind_mlp(Tape& tape, const ParameterStore& store, const std::string& prefix) {
  MlpVars vars;
  vars.w1 = tape.param(store, prefix + ".W1");
  vars.b1 = tape.param(store, prefix + ".b1");
  vars.w2 = tape.param(store, prefix + ".W2");
  vars.b2 = tape.param(store, prefix + ".b2");
  return vars;
}

VarId mlp_forward(Tape& tape, const MlpVars& vars, VarId x) {
  VarId h = tape.tanh(tape.add(tape.matmul(x, vars.w1), vars.b1));
  return tape.add(tape.matmul(h, vars.w2), vars.b2);
}

void init_lstm(ParameterStore& store, const LstmSpec& spec, RngStream& rng) {
  store.add(spec.prefix + ".W", glorot_init(spec.in + spec.hidden, 4 * spec.hidden, rng));
  Array b({1, 4 * spec.hidden});
  // forget-gate bias starts at 1
  for (int j = spec.hidden; j < 2 * spec.hidden; ++j) b.data[j] = 1.0;
  store.add(spec.prefix + ".b", std::move(b));
}

LstmVars bind_lstm(Tape& tape, const ParameterStore& store, const std::string& prefix,
                   int hidden) {
  LstmVars vars;
  vars.w = tape.param(store, prefix + ".W");
  vars.b = tape.param(store, prefix + ".b");
  vars.hidden = hidden;
  return vars;
}

LstmState lstm_cell(Tape& tape, const LstmVars& vars, VarId x, const LstmState& prev) {
  const int h = vars.hidden;
  VarId xh = tape.concat_cols({x, prev.h});
  VarId gates = tape.add(tape.matmul(xh, vars.w), vars.b);
  VarId ig = tape.sigmoid(tape.slice_cols(gates, 0, h));
  VarId fg = tape.sigmoid(tape.slice_cols(gates, h, 2 * h));
  VarId gg = tape.tanh(tape.slice_cols(gates, 2 * h, 3 * h));
  VarId og = tape.sigmoid(tape.slice_cols(gates, 3 * h, 4 * h));
  LstmState next;
  next.c = tape.add(tape.mul(fg, prev.c), tape.mul(ig, gg));
  next.h = tape.mul(og, tape.tanh(next.c));
  return next;
}

std::vector<VarId> lstm_unroll(Tape& tape, const std::vector<LstmVars>& layers,
                               const std::vector<VarId>& inputs, int batch_rows) {
  std::vector<LstmState> states(layers.size());
  for (size_t l = 0; l < layers.size(); ++l) {
    VarId zero = tape.constant(Array::zeros(batch_rows, layers[l].hidden));
    states[l] = LstmState{zero, zero};
  }
  std::vector<VarId> top;
  top.reserve(inputs.size());
  for (VarId x : inputs) {
    VarId cur = x;
    for (size_t l = 0; l < layers.size(); ++l) {
      states[l] = lstm_cell(tape, layers[l], cur, states[l]);
      cur = states[l].h;
    }
    top.push_back(cur);
  }
  return top;
}

VarId bce_loss(Tape& tape, VarId pred, const Array& target, double eps) {
  const Array& pv = tape.val(pred);
  if (pv.numel() == 0) throw std::invalid_argument("bce_loss: empty input");
  if (!pv.same_shape(target)) throw std::invalid_argument("bce_loss: shape mismatch");
  VarId p = tape.clamp(pred, eps, 1.0 - eps);
  VarId t = tape.constant(target);
  Array ones_minus_t = target;
  for (auto& v : ones_minus_t.data) v = 1.0 - v;
  VarId t1 = tape.constant(std::move(ones_minus_t));
  VarId pos = tape.mul(t, tape.log(p));
  VarId neg = tape.mul(t1, tape.log(tape.affine(p, -1.0, 1.0)));
  return tape.affine(tape.mean(tape.add(pos, neg)), -1.0);
}

VarId softmax_power_head(Tape& tape, VarId logits, double p_tot) {
  if (p_tot <= 0.0) throw std::invalid_argument("softmax_power_head: P_tot must be > 0");
  return tape.affine(tape.softmax_rows(logits), p_tot);
}

}  // namespace airgnn::diffcore
