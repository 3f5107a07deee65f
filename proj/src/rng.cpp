#include "alignaug/rng.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace alignaug {

std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t k1,
                          std::uint64_t k2, std::uint64_t k3) {
  std::uint64_t s = base;
  std::uint64_t out = splitmix64(s);
  s ^= k1;
  out = splitmix64(s);
  s ^= k2;
  out = splitmix64(s);
  s ^= k3;
  out = splitmix64(s);
  return out;
}

double Rng::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  const double u1 = uniform();
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double a = 2.0 * std::numbers::pi_v<double> * u2;
  spare_ = r * std::sin(a);
  has_spare_ = true;
  return r * std::cos(a);
}

std::uint64_t Rng::below(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("Rng::below: n must be positive");
  return next_u64() % n;
}

}  // namespace alignaug
