#include "curv2k/rng.hpp"

#include <cmath>

namespace curv2k {

namespace {
constexpr std::uint64_t kGoldenGamma = 0x9E3779B97F4A7C15ull;
}

std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

CounterRng CounterRng::fork(std::uint64_t seed, std::uint64_t stream) {
  return CounterRng(mix64(seed + (stream + 1) * kGoldenGamma));
}

std::uint64_t CounterRng::next_u64() { return mix64(seed_ + (++counter_) * kGoldenGamma); }

double CounterRng::next_double() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double CounterRng::next_gaussian() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  // Box-Muller; u clamped away from 0 so log stays finite.
  double u = next_double();
  if (u < 0x1.0p-53) u = 0x1.0p-53;
  const double v = next_double();
  const double radius = std::sqrt(-2.0 * std::log(u));
  const double angle = 2.0 * M_PI * v;
  spare_ = radius * std::sin(angle);
  have_spare_ = true;
  return radius * std::cos(angle);
}

}  // namespace curv2k
