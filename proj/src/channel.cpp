#include "airgnn/channel.hpp"

#include <cmath>
#include <stdexcept>

namespace airgnn::envsim {

namespace {
constexpr double kSpeedOfLight = 299792458.0;
constexpr double kTwoPi = 6.283185307179586476925286766559;
}  // namespace

void ChannelModelConfig::validate() const {
  if (num_subcarriers < 1) throw std::invalid_argument("channel: K must be >= 1");
  if (noise_power_w <= 0.0) throw std::invalid_argument("channel: sigma^2 must be > 0");
  if (carrier_freq_hz <= 0.0 || subcarrier_bandwidth_hz <= 0.0) {
    throw std::invalid_argument("channel: nonpositive frequency parameters");
  }
  if (guard_band_hz < 0.0) throw std::invalid_argument("channel: negative guard band");
}

double fspl_linear(double distance_m, double freq_hz) {
  const double x = 4.0 * M_PI * distance_m * freq_hz / kSpeedOfLight;
  return 1.0 / (x * x);
}

ChannelDraw channel_gain(double distance_m, bool blocked, double freq_hz,
                         const ChannelModelConfig& cfg, RngStream& rng) {
  if (distance_m <= 0.0) throw std::invalid_argument("channel_gain: distance must be > 0");

  double path_gain = fspl_linear(distance_m, freq_hz);
  if (blocked) path_gain *= std::pow(10.0, -cfg.nlos_extra_loss_db / 10.0);

  std::complex<double> fading;
  if (blocked) {
    // Rayleigh, unit mean power
    const double s = std::sqrt(0.5);
    fading = {s * rng.gaussian(), s * rng.gaussian()};
  } else {
    // Rician with linear K-factor kf, unit mean power
    const double kf = std::pow(10.0, cfg.rician_k_factor_db / 10.0);
    const double los_amp = std::sqrt(kf / (kf + 1.0));
    const double scatter = std::sqrt(0.5 / (kf + 1.0));
    const double phase = rng.uniform(0.0, kTwoPi);
    fading = std::complex<double>(los_amp * std::cos(phase), los_amp * std::sin(phase)) +
             std::complex<double>(scatter * rng.gaussian(), scatter * rng.gaussian());
  }

  ChannelDraw draw;
  draw.expected_sq_mag = path_gain;
  draw.gain = std::sqrt(path_gain) * fading;
  return draw;
}

}  // namespace airgnn::envsim
