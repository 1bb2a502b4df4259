#pragma once

#include <cstdint>
#include <random>

namespace rlab {

// Derives an independent stream seed from (seed, stream). splitmix64 finalizer;
// the mapping is fixed so outputs never depend on how work is scheduled.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream);

// Deterministic RNG. mt19937_64 is fully specified by the standard and the
// uniform/normal draws below avoid std::*_distribution, whose outputs are
// implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform in [0, 1), 53-bit resolution.
  double uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  // Standard normal via Box-Muller.
  double normal();

 private:
  std::mt19937_64 engine_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace rlab
