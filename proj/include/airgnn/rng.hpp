#pragma once

#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace airgnn {

// splitmix64, used to derive independent stream seeds from (seed, ids...).
inline uint64_t splitmix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline uint64_t mix_stream(uint64_t seed, std::initializer_list<uint64_t> ids) {
  uint64_t h = splitmix64(seed);
  for (uint64_t id : ids) {
    h = splitmix64(h ^ (id + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2)));
  }
  return h;
}

// xoshiro256** with hand-rolled uniform/gaussian transforms so that draw
// sequences do not depend on the standard library implementation.
class RngStream {
 public:
  explicit RngStream(uint64_t seed) {
    uint64_t x = seed;
    for (auto& word : state_) {
      x = splitmix64(x);
      word = x;
    }
    has_spare_ = false;
    spare_ = 0.0;
  }

  RngStream(uint64_t seed, std::initializer_list<uint64_t> ids)
      : RngStream(mix_stream(seed, ids)) {}

  uint64_t next_u64() {
    const uint64_t result = rotl(state_[1] * 5, 7) * 9;
    const uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
  }

  // uniform in [0, 1)
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // uniform integer in [0, n)
  uint64_t uniform_index(uint64_t n) { return next_u64() % n; }

  // standard normal via Box-Muller (pair cached)
  double gaussian() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    double u1 = uniform();
    double u2 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 6.283185307179586476925286766559 * u2;
    spare_ = r * std::sin(a);
    has_spare_ = true;
    return r * std::cos(a);
  }

  // Dirichlet(1,...,1) of dimension n: normalized exponentials.
  std::vector<double> dirichlet_flat(int n) {
    std::vector<double> draw(static_cast<size_t>(n));
    double total = 0.0;
    for (auto& v : draw) {
      double u = uniform();
      while (u <= 0.0) u = uniform();
      v = -std::log(u);
      total += v;
    }
    for (auto& v : draw) v /= total;
    return draw;
  }

 private:
  static uint64_t rotl(uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

  uint64_t state_[4];
  bool has_spare_;
  double spare_;
};

}  // namespace airgnn
