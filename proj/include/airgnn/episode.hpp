#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "airgnn/channel.hpp"
#include "airgnn/geometry.hpp"
#include "airgnn/trajectory.hpp"

namespace airgnn::envsim {

// Channel coefficients for one episode. Tensors are stored as float32 (the
// on-disk precision); node-to-node channels are reciprocal, so both the
// gains and the fading-averaged magnitudes are symmetric in (i, j).
struct ChannelTensor {
  int n = 0;
  int k = 0;
  int t = 0;
  std::vector<std::complex<float>> gains;     // [i][j][k][t]
  std::vector<std::complex<float>> ap_gains;  // [i][t]
  std::vector<float> expected_sq;             // [i][j][k][t]

  size_t idx(int i, int j, int sc, int step) const {
    return ((static_cast<size_t>(i) * n + j) * k + sc) * t + step;
  }
  size_t ap_idx(int i, int step) const { return static_cast<size_t>(i) * t + step; }
};

struct Episode {
  FactoryLayout layout;
  BlockerTrajectory trajectory;
  ChannelTensor channels;
  std::vector<float> features;  // [i][t][L], sliding window of |h_ap|
  std::vector<uint8_t> labels;  // [i][t], 1 = NLOS
  int n = 0;
  int t_steps = 0;
  int window = 0;  // L
  uint64_t config_hash = 0;

  size_t feat_idx(int i, int step, int l) const {
    return (static_cast<size_t>(i) * t_steps + step) * window + l;
  }
  size_t label_idx(int i, int step) const {
    return static_cast<size_t>(i) * t_steps + step;
  }
};

// Everything needed to synthesize one episode.
struct EnvConfig {
  double width = 20.0;
  double height = 15.0;
  int num_nodes = 10;
  // negative AP coordinates mean "floor center"
  double ap_x = -1.0;
  double ap_y = -1.0;
  double node_margin = 1.0;
  double node_min_separation = 0.8;
  double blocker_length = 1.2;
  double blocker_width = 0.8;
  double blocker_speed = 1.0;  // m/s
  double dt = 0.3;             // s
  int t_steps = 50;
  int window = 6;  // L
  ChannelModelConfig channel;

  void validate() const;
};

// Uniform node placement with wall margin and minimum pairwise separation.
FactoryLayout make_layout(const EnvConfig& cfg, RngStream& placement_rng);

// Fills channels for all K subcarriers, the AP link, Eq.-style sliding-window
// features (early windows left-padded by repeating the first sample), and
// per-step NLOS labels from the blocker geometry.
Episode generate_episode(const FactoryLayout& layout, double blocker_speed,
                         double dt, int t_steps, const ChannelModelConfig& chan_cfg,
                         int window, RngStream& rng);

// Convenience: layout + episode from one config, with separate streams for
// placement and dynamics so dataset splits can share dynamics seeding while
// drawing disjoint placements.
Episode make_episode(const EnvConfig& cfg, RngStream& placement_rng,
                     RngStream& dynamics_rng);

}  // namespace airgnn::envsim
