#pragma once

#include <limits>
#include <string>
#include <vector>

#include "airgnn/episode.hpp"
#include "airgnn/graphs.hpp"
#include "airgnn/nn.hpp"
#include "airgnn/params.hpp"
#include "airgnn/tape.hpp"

namespace airgnn::model {

enum class ModelKind { kOtaGnn, kLocalLstm, kStGcn, kStGat };
enum class AllocationMode { kLearned, kUniform, kRandom };
enum class WeightSharing { kShared, kPerNode };

ModelKind model_kind_from_string(const std::string& s);
std::string to_string(ModelKind kind);
AllocationMode allocation_mode_from_string(const std::string& s);
std::string to_string(AllocationMode mode);

struct ModelConfig {
  ModelKind kind = ModelKind::kOtaGnn;
  int k = 4;        // subcarriers
  int d = 16;       // per-subcarrier embedding dim
  int window = 6;   // L
  double p_tot = 1e-3;    // watts
  double sigma2 = 7.9e-15;  // watts
  double gamma_min = 10.0;  // linear SNR threshold
  AllocationMode allocation = AllocationMode::kLearned;
  WeightSharing sharing = WeightSharing::kShared;
  int encoder_hidden = 32;
  int lstm_hidden = 32;
  int lstm_layers = 2;
  int embed_dim = 16;  // neighbor embedding for the digital graph baselines
  int attn_dim = 8;    // attention projection for st_gat
  // Fixed input conditioning: gains enter the networks as
  // (mag_db + feature_offset_db) / feature_scale_db; aggregated signals as
  // asinh(agg_input_scale * y). agg_input_scale <= 0 selects 1/sqrt(sigma2)
  // (or 1 when sigma2 = 0).
  double feature_offset_db = 100.0;
  double feature_scale_db = 20.0;
  double agg_input_scale = 0.0;

  void validate() const;
  int decoder_input_dim() const;
  double effective_agg_scale() const;
};

// Running extrema of the physical-layer constraints, updated on every
// forward step when attached through ForwardOptions.
struct ConstraintStats {
  int64_t power_checks = 0;
  int64_t norm_checks = 0;
  double min_power = std::numeric_limits<double>::infinity();
  double max_budget_rel_err = 0.0;
  double max_row_norm_err = 0.0;
};

// Per-step channel noise for one episode, drawn up front so a forward pass
// can be replayed exactly (finite-difference checks) or redrawn fresh
// (training and inference).
struct EpisodeNoise {
  std::vector<diffcore::Array> per_step;  // each N x (K*d)
};

EpisodeNoise draw_episode_noise(const ModelConfig& cfg, int n, int t_steps,
                                RngStream& rng);

struct ForwardOptions {
  const EpisodeNoise* noise = nullptr;  // required for ota_gnn when sigma2 > 0
  ConstraintStats* stats = nullptr;
  RngStream* alloc_rng = nullptr;  // required for AllocationMode::kRandom
};

struct EpisodeForward {
  diffcore::VarId predictions = -1;  // N x (T - tau), probabilities in (0,1)
  diffcore::Array targets;           // N x (T - tau), labels at t + tau
};

void init_params(diffcore::ParameterStore& store, const ModelConfig& cfg,
                 int num_nodes, RngStream& rng);

// Parameter-name prefixes trained under decoder-only adaptation.
std::vector<std::string> decoder_param_names(const diffcore::ParameterStore& store);

// Single-step building blocks (exposed for tests; forward_episode composes
// them). All matrices are batched over nodes as rows.
diffcore::VarId encode_messages(diffcore::Tape& tape, const diffcore::MlpVars& phi,
                                diffcore::VarId x, int k, int d);
diffcore::VarId allocate_power(diffcore::Tape& tape, const ModelConfig& cfg,
                               const diffcore::MlpVars* psi, diffcore::VarId x,
                               int rows, RngStream* alloc_rng);
diffcore::VarId transmit(diffcore::Tape& tape, diffcore::VarId messages,
                         diffcore::VarId powers, int d);
// receive[i,k*d:j] = sum_j mask(j->i,k) |h_jik| transmit[j,k*d:j] + noise
diffcore::VarId ota_aggregate(diffcore::Tape& tape, diffcore::VarId transmitted,
                              const envsim::Episode& episode, int step,
                              const topology::SubcarrierGraphs& masks, int d,
                              const diffcore::Array* noise);

// Full-episode forward pass for any model kind; exactly one aggregation
// round per time step. Predictions cover t in [0, T - tau).
EpisodeForward forward_episode(diffcore::Tape& tape, const envsim::Episode& episode,
                               const diffcore::ParameterStore& store,
                               const ModelConfig& cfg, int tau,
                               const ForwardOptions& options = {});

// Digital baseline graph at one step: edge (i, j) iff the expected link SNR
// at uniform full power clears gamma_min on any subcarrier.
topology::DirectedGraph digital_graph_at(const envsim::Episode& episode, int step,
                                         const ModelConfig& cfg);

// Transformed local-feature window for one step (constant model input).
diffcore::Array feature_window(const envsim::Episode& episode, int step,
                               const ModelConfig& cfg);

}  // namespace airgnn::model
