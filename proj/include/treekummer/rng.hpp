#pragma once

#include <cstdint>
#include <random>

namespace treekummer {

// Deterministic random stream.
//
// The engine is std::mt19937_64 (its output sequence is fixed by the
// standard), and all variate transformations are implemented here, so a
// given seed produces the same draws on every platform. std::*_distribution
// adaptors are deliberately avoided: their algorithms are
// implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : seed_(seed), engine_(seed) {}

  std::uint64_t seed() const { return seed_; }

  // Uniform on the open interval (0,1); never returns 0 or 1.
  double uniform() {
    return (static_cast<double>(engine_() >> 11) + 0.5) * kInv53;
  }

  // Standard normal via the Marsaglia polar method.
  double normal() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    double u, v, s;
    do {
      u = 2.0 * uniform() - 1.0;
      v = 2.0 * uniform() - 1.0;
      s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    const double f = std::sqrt(-2.0 * std::log(s) / s);
    spare_ = v * f;
    has_spare_ = true;
    return u * f;
  }

  // Gamma(shape, rate) via Marsaglia-Tsang, with the power boost for
  // shape < 1.
  double gamma(double shape, double rate);

  // Exponential with the given rate.
  double exponential(double rate) { return -std::log(uniform()) / rate; }

  // Uniform integer in [0, bound); bound must be <= 2^32 or so for the
  // multiply trick to stay unbiased enough (we only use it for shuffles).
  std::uint64_t below(std::uint64_t bound) {
    return static_cast<std::uint64_t>(uniform() * static_cast<double>(bound));
  }

  // Independent child stream. Distinct indices give decorrelated streams;
  // the derivation is pure so the parent stream is not advanced.
  Rng substream(std::uint64_t index) const {
    return Rng(splitmix64(seed_ ^ splitmix64(index + 0x9E3779B97F4A7C15ULL)));
  }

  // Child stream seeded from the engine output; advances the parent, so
  // successive spawns are decorrelated from each other.
  Rng spawn() { return Rng(splitmix64(engine_())); }

  std::uint64_t next_u64() { return engine_(); }

  static std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
  }

 private:
  static constexpr double kInv53 = 1.0 / 9007199254740992.0;  // 2^-53

  std::uint64_t seed_;
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace treekummer
