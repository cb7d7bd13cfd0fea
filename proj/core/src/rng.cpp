#include "coexsim/rng.hpp"

#include <cmath>
#include <stdexcept>

namespace coexsim {

namespace {

constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

std::uint64_t mix64(std::uint64_t z) {
  z ^= z >> 30;
  z *= 0xbf58476d1ce4e5b9ULL;
  z ^= z >> 27;
  z *= 0x94d049bb133111ebULL;
  z ^= z >> 31;
  return z;
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t root, std::initializer_list<std::uint64_t> path) {
  std::uint64_t h = mix64(root + kGolden);
  for (std::uint64_t w : path) {
    h = mix64(h ^ mix64(w + kGolden));
  }
  return h;
}

int RandomStream::poisson(double lambda) {
  if (!(lambda >= 0.0) || !std::isfinite(lambda)) {
    throw std::invalid_argument("poisson: lambda must be finite and >= 0");
  }
  if (lambda == 0.0) return 0;
  // Split large rates so exp(-lambda) stays representable.
  if (lambda > 500.0) {
    double half = lambda / 2.0;
    return poisson(half) + poisson(lambda - half);
  }
  double u = uniform01();
  double p = std::exp(-lambda);
  double cum = p;
  int k = 0;
  while (u > cum) {
    ++k;
    p *= lambda / k;
    cum += p;
    if (p <= 0.0) break;  // cum saturated; u was in the truncated tail
  }
  return k;
}

}  // namespace coexsim
