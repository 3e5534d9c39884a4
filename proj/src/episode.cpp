#include "airgnn/episode.hpp"

#include <cmath>
#include <stdexcept>

namespace airgnn::envsim {

void EnvConfig::validate() const {
  if (num_nodes < 2) throw std::invalid_argument("env: need at least 2 nodes");
  if (t_steps < 1) throw std::invalid_argument("env: T must be >= 1");
  if (window < 1) throw std::invalid_argument("env: window must be >= 1");
  if (t_steps < window) throw std::invalid_argument("env: T must be >= window");
  channel.validate();
}

FactoryLayout make_layout(const EnvConfig& cfg, RngStream& placement_rng) {
  FactoryLayout layout;
  layout.width = cfg.width;
  layout.height = cfg.height;
  layout.blocker_length = cfg.blocker_length;
  layout.blocker_width = cfg.blocker_width;
  layout.ap = Point{cfg.ap_x >= 0.0 ? cfg.ap_x : 0.5 * cfg.width,
                    cfg.ap_y >= 0.0 ? cfg.ap_y : 0.5 * cfg.height};

  const double m = cfg.node_margin;
  if (cfg.width - 2 * m <= 0.0 || cfg.height - 2 * m <= 0.0) {
    throw std::invalid_argument("env: node margin leaves no valid area");
  }
  const int max_attempts = 1000 * cfg.num_nodes;
  int attempts = 0;
  while (static_cast<int>(layout.nodes.size()) < cfg.num_nodes) {
    if (++attempts > max_attempts) {
      throw std::runtime_error("env: could not place nodes with requested separation");
    }
    Point p{placement_rng.uniform(m, cfg.width - m),
            placement_rng.uniform(m, cfg.height - m)};
    if (dist(p, layout.ap) < cfg.node_min_separation) continue;
    bool ok = true;
    for (const Point& q : layout.nodes) {
      if (dist(p, q) < cfg.node_min_separation) {
        ok = false;
        break;
      }
    }
    if (ok) layout.nodes.push_back(p);
  }
  layout.validate();
  return layout;
}

Episode generate_episode(const FactoryLayout& layout, double blocker_speed,
                         double dt, int t_steps, const ChannelModelConfig& chan_cfg,
                         int window, RngStream& rng) {
  if (window < 1) throw std::invalid_argument("episode: window must be >= 1");
  if (t_steps < window) throw std::invalid_argument("episode: T must be >= window");
  layout.validate();
  chan_cfg.validate();

  Episode ep;
  ep.layout = layout;
  ep.n = static_cast<int>(layout.nodes.size());
  ep.t_steps = t_steps;
  ep.window = window;
  ep.trajectory = generate_trajectory(layout, blocker_speed, dt, t_steps, rng);

  const int n = ep.n;
  const int K = chan_cfg.num_subcarriers;
  ChannelTensor& ch = ep.channels;
  ch.n = n;
  ch.k = K;
  ch.t = t_steps;
  ch.gains.assign(static_cast<size_t>(n) * n * K * t_steps, {0.0f, 0.0f});
  ch.ap_gains.assign(static_cast<size_t>(n) * t_steps, {0.0f, 0.0f});
  ch.expected_sq.assign(static_cast<size_t>(n) * n * K * t_steps, 0.0f);
  ep.labels.assign(static_cast<size_t>(n) * t_steps, 0);
  ep.features.assign(static_cast<size_t>(n) * t_steps * window, 0.0f);

  // AP links and labels
  for (int i = 0; i < n; ++i) {
    const double d = dist(layout.nodes[i], layout.ap);
    for (int t = 0; t < t_steps; ++t) {
      const bool blocked = los_blocked(layout.nodes[i], layout.ap,
                                       ep.trajectory.poses[t], layout.blocker_length,
                                       layout.blocker_width);
      const ChannelDraw draw =
          channel_gain(d, blocked, chan_cfg.carrier_freq_hz, chan_cfg, rng);
      ch.ap_gains[ch.ap_idx(i, t)] = std::complex<float>(
          static_cast<float>(draw.gain.real()), static_cast<float>(draw.gain.imag()));
      ep.labels[ep.label_idx(i, t)] = blocked ? 1 : 0;
    }
  }

  // Sliding-window features over |h_ap|, padded by repeating the first sample
  for (int i = 0; i < n; ++i) {
    for (int t = 0; t < t_steps; ++t) {
      for (int l = 0; l < window; ++l) {
        const int src = std::max(t - l, 0);
        ep.features[ep.feat_idx(i, t, l)] = std::abs(ch.ap_gains[ch.ap_idx(i, src)]);
      }
    }
  }

  // Node-to-node links: reciprocal, independent fading per subcarrier
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double d = dist(layout.nodes[i], layout.nodes[j]);
      for (int t = 0; t < t_steps; ++t) {
        const bool blocked =
            los_blocked(layout.nodes[i], layout.nodes[j], ep.trajectory.poses[t],
                        layout.blocker_length, layout.blocker_width);
        for (int k = 0; k < K; ++k) {
          const ChannelDraw draw = channel_gain(
              d, blocked, chan_cfg.subcarrier_freq_hz(k), chan_cfg, rng);
          const std::complex<float> g(static_cast<float>(draw.gain.real()),
                                      static_cast<float>(draw.gain.imag()));
          const float e = static_cast<float>(draw.expected_sq_mag);
          ch.gains[ch.idx(i, j, k, t)] = g;
          ch.gains[ch.idx(j, i, k, t)] = g;
          ch.expected_sq[ch.idx(i, j, k, t)] = e;
          ch.expected_sq[ch.idx(j, i, k, t)] = e;
        }
      }
    }
  }
  return ep;
}

Episode make_episode(const EnvConfig& cfg, RngStream& placement_rng,
                     RngStream& dynamics_rng) {
  cfg.validate();
  FactoryLayout layout = make_layout(cfg, placement_rng);
  return generate_episode(layout, cfg.blocker_speed, cfg.dt, cfg.t_steps, cfg.channel,
                          cfg.window, dynamics_rng);
}

}  // namespace airgnn::envsim
