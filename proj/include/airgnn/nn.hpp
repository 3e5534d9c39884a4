#pragma once

#include <string>
#include <vector>

#include "airgnn/params.hpp"
#include "airgnn/rng.hpp"
#include "airgnn/tape.hpp"

namespace airgnn::diffcore {

// Xavier-uniform init for a (rows x cols) weight matrix.
Array glorot_init(int rows, int cols, RngStream& rng);

// Two-layer tanh MLP: in -> hidden -> out (no output activation).
// Parameters are registered under prefix.W1/.b1/.W2/.b2.
struct MlpSpec {
  int in = 0;
  int hidden = 0;
  int out = 0;
  std::string prefix;
};

void init_mlp(ParameterStore& store, const MlpSpec& spec, RngStream& rng);

struct MlpVars {
  VarId w1, b1, w2, b2;
};
MlpVars bind_mlp(Tape& tape, const ParameterStore& store, const std::string& prefix);
VarId mlp_forward(Tape& tape, const MlpVars& vars, VarId x);

// Standard LSTM layer: one weight matrix over [x, h] producing the four
// gates in order (input, forget, cell, output), plus a bias.
struct LstmSpec {
  int in = 0;
  int hidden = 0;
  std::string prefix;
};

void init_lstm(ParameterStore& store, const LstmSpec& spec, RngStream& rng);

struct LstmVars {
  VarId w, b;
  int hidden = 0;
};
LstmVars bind_lstm(Tape& tape, const ParameterStore& store, const std::string& prefix,
                   int hidden);

struct LstmState {
  VarId h, c;
};
LstmState lstm_cell(Tape& tape, const LstmVars& vars, VarId x, const LstmState& prev);

// Unrolls a (possibly multi-layer) LSTM stack over a sequence of batched
// inputs; returns the top layer's hidden state at every step.
std::vector<VarId> lstm_unroll(Tape& tape, const std::vector<LstmVars>& layers,
                               const std::vector<VarId>& inputs, int batch_rows);

// -mean[ y log p + (1-y) log(1-p) ], predictions clamped to [eps, 1-eps].
VarId bce_loss(Tape& tape, VarId pred, const Array& target, double eps = 1e-7);

// P_tot * softmax(logits): nonnegative, rows sum to exactly the budget.
VarId softmax_power_head(Tape& tape, VarId logits, double p_tot);

}  // namespace airgnn::diffcore
