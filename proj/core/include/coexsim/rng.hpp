#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>

namespace coexsim {

// Derives an independent stream seed from a root seed and a path of words
// (e.g. {purpose, lambda_index}). Splitmix64-style mixing; distinct paths
// give statistically unrelated seeds.
std::uint64_t derive_seed(std::uint64_t root, std::initializer_list<std::uint64_t> path);

// Stream purposes used by the harness.
inline constexpr std::uint64_t kStreamArrivals = 0xA221;
inline constexpr std::uint64_t kStreamChannel = 0xC4A7;

// A seeded random stream with the exact samplers the simulator needs.
// Poisson sampling uses CDF inversion (chop-down), which is exact for the
// small rates used here; rates above the exp() underflow range are split
// recursively so the result is still an exact Poisson draw.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) : gen_(seed) {}

  // Uniform on [0, 1).
  double uniform01() {
    return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
  }

  // Unit-mean exponential variate.
  double exponential() { return -std::log1p(-uniform01()); }

  // Exact Poisson(lambda) draw. Throws std::invalid_argument on negative or
  // non-finite lambda.
  int poisson(double lambda);

  std::uint64_t next_u64() { return gen_(); }

 private:
  std::mt19937_64 gen_;
};

}  // namespace coexsim
