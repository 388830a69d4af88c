#pragma once

#include <cstdint>

namespace curv2k {

/// splitmix64 finalizer (Steele/Lea/Flood constants, see README).
std::uint64_t mix64(std::uint64_t z);

/// Counter-based 64-bit generator: value i of stream `seed` is
/// mix64(seed + i * 0x9E3779B97F4A7C15). Streams are reproducible
/// across platforms and safe to fork per work item.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed) : seed_(seed) {}

  /// Independent substream derived from (seed, stream index).
  static CounterRng fork(std::uint64_t seed, std::uint64_t stream);

  std::uint64_t next_u64();

  /// Uniform in [0, 1), 53-bit mantissa.
  double next_double();

  /// Standard normal via Box-Muller; pairs are cached.
  double next_gaussian();

 private:
  std::uint64_t seed_;
  std::uint64_t counter_ = 0;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace curv2k
