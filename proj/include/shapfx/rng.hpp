#pragma once

#include <cstdint>

namespace shapfx {

/// SplitMix64 finalizer: bijective 64-bit avalanche mix.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z += 0x9E3779B97F4A7C15ull;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

/// Counter-based random stream: draw i of stream (seed, id) is
/// mix64(key + i*increment) with key derived from (seed, id). Streams are
/// stateless functions of their key, so any number of them can be split off
/// a seed and consumed in any interleaving without coupling.
class RngStream {
 public:
  RngStream(std::uint64_t seed, std::uint64_t stream_id) noexcept
      : key_(mix64(mix64(seed) ^ (stream_id * 0xD1B54A32D192ED03ull))) {}

  std::uint64_t next_u64() noexcept { return mix64(key_ + (counter_++) * 0x9E3779B97F4A7C15ull); }

  /// Uniform on the open interval (0, 1); never returns an endpoint, so it is
  /// safe to push through quantile functions and logs.
  double next_unit() noexcept {
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
  }

  /// Standard normal by inverse-CDF transform (one uniform per variate, which
  /// keeps draw counts predictable across code paths).
  double next_gaussian() noexcept;

  std::uint64_t counter() const noexcept { return counter_; }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

/// Inverse of the standard normal CDF on (0, 1). Rational initial guess
/// refined by one Halley step against erfc; absolute error below 1e-14.
double inverse_normal_cdf(double p);

/// Standard normal CDF.
double normal_cdf(double x);

}  // namespace shapfx
