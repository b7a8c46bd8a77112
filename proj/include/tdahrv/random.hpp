#pragma once

#include <cstdint>
#include <limits>

namespace tdahrv {

/// PCG-XSH-RR 64/32 (O'Neill's pcg32): 64-bit state, 32-bit output.
/// Same sequence on every platform for a given seed, unlike the standard
/// library distributions.
class Pcg32 {
 public:
  using result_type = std::uint32_t;

  explicit Pcg32(std::uint64_t seed, std::uint64_t stream = 54u);

  result_type operator()();

  /// Uniform integer in [0, bound), bound > 0, without modulo bias.
  std::uint32_t bounded(std::uint32_t bound);

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform();

  /// Standard normal variate (Box–Muller, no cached second value).
  double normal();

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

 private:
  std::uint64_t state_ = 0;
  std::uint64_t inc_ = 0;
};

}  // namespace tdahrv
