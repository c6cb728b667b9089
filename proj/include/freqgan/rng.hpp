#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace freqgan {

// Deterministic random source. All floating-point draws are derived from the
// raw 64-bit stream with fixed arithmetic (no std::*_distribution), so a given
// seed reproduces the same values bit for bit on every standard library.
class Rng {
 public:
  explicit Rng(uint64_t seed = 0) : engine_(seed) {}

  uint64_t next_u64() { return engine_(); }

  // Uniform in [0, 1), 53-bit resolution.
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Box-Muller; the spare value is cached so draws come in deterministic order.
  double normal() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    double u1 = uniform();
    double u2 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    double r = std::sqrt(-2.0 * std::log(u1));
    double a = 2.0 * M_PI * u2;
    spare_ = r * std::sin(a);
    has_spare_ = true;
    return r * std::cos(a);
  }

  // Uniform integer in [0, n). Modulo bias is irrelevant at the sizes used here.
  uint64_t below(uint64_t n) { return next_u64() % n; }

  uint64_t state_seed() const { return reseed_value_; }

  void reseed(uint64_t seed) {
    engine_.seed(seed);
    reseed_value_ = seed;
    has_spare_ = false;
  }

 private:
  std::mt19937_64 engine_;
  uint64_t reseed_value_ = 0;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace freqgan
