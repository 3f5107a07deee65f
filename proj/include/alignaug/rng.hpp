#pragma once

#include <cstdint>
#include <random>

namespace alignaug {

// One splitmix64 step; advances `state` and returns the mixed output.
std::uint64_t splitmix64(std::uint64_t& state);

// Derives an independent stream seed from (base, k1, k2, k3). Every
// parallel task seeds its own generator from a stable key tuple, so results
// do not depend on scheduling or worker count.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t k1,
                          std::uint64_t k2 = 0, std::uint64_t k3 = 0);

// Deterministic generator. mt19937_64 output is fully specified by the
// standard, and the uniform/normal mappings below avoid the
// implementation-defined std:: distributions, so identical seeds produce
// identical streams on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform on (0,1), never exactly 0 or 1.
  double uniform() {
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
  }

  // Standard normal (Box-Muller, one spare cached).
  double normal();

  // Uniform integer in [0, n); n must be positive.
  std::uint64_t below(std::uint64_t n);

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace alignaug
