#pragma once

#include <complex>

#include "airgnn/rng.hpp"

namespace airgnn::envsim {

// Parametric narrowband channel: free-space path loss plus a fixed NLOS
// penalty, Rician small-scale fading when LOS, Rayleigh when blocked.
struct ChannelModelConfig {
  double carrier_freq_hz = 28e9;          // f_c
  double subcarrier_bandwidth_hz = 400e3;  // B_k
  double guard_band_hz = 100e3;            // delta_f
  int num_subcarriers = 4;                 // K
  double nlos_extra_loss_db = 20.0;
  double rician_k_factor_db = 10.0;        // LOS K-factor
  double noise_power_w = 7.9e-15;          // sigma^2, thermal noise per subcarrier

  void validate() const;
  // center frequency of zero-based subcarrier index k:
  // f_c + k * (B_k + delta_f)
  double subcarrier_freq_hz(int k) const {
    return carrier_freq_hz + k * (subcarrier_bandwidth_hz + guard_band_hz);
  }
};

struct ChannelDraw {
  std::complex<double> gain;  // includes the small-scale fading draw
  double expected_sq_mag;     // fading-averaged |h|^2
};

double fspl_linear(double distance_m, double freq_hz);

// Throws on distance <= 0. The expected |h|^2 excludes the fading draw;
// fading is normalized to unit mean power so E[|gain|^2] == expected_sq_mag.
ChannelDraw channel_gain(double distance_m, bool blocked, double freq_hz,
                         const ChannelModelConfig& cfg, RngStream& rng);

}  // namespace airgnn::envsim
