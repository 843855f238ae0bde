#pragma once

#include <complex>
#include <cstdint>
#include <random>

namespace slocc3 {

// Frozen PRNG contract: all randomness in the toolkit flows through this
// class so that a given seed produces the same stream on every platform.
//
//   * engine:   std::mt19937_64 (bit-exact per the C++ standard)
//   * uniform:  (next_u64() >> 11) * 2^-53, giving doubles in [0, 1)
//   * gaussian: Box-Muller on two uniforms (never std::normal_distribution,
//               whose output is implementation-defined)
//
// Changing any of these is a breaking change to every seeded report.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next_u64() { return gen_(); }

  // Uniform double in [0, 1).
  double uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Uniform integer in [0, n). n is tiny everywhere in this codebase
  // (party picks, class picks), so plain modulo is fine.
  int uniform_int(int n) { return static_cast<int>(next_u64() % static_cast<std::uint64_t>(n)); }

  // Standard normal via Box-Muller; the spare value is cached.
  double gaussian();

  std::complex<double> complex_gaussian() {
    const double re = gaussian();
    const double im = gaussian();
    return {re, im};
  }

 private:
  std::mt19937_64 gen_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

// SplitMix64 step; used to derive independent per-trial seeds from a master
// seed so that Monte-Carlo runs partition deterministically across workers.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

}  // namespace slocc3
