#include "coexsim/urllc_queue.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace coexsim {

int sample_arrivals(RandomStream& rng, double lambda) {
  if (!(lambda >= 0.0) || !std::isfinite(lambda)) {
    throw std::invalid_argument("sample_arrivals: lambda must be finite and >= 0");
  }
  return rng.poisson(lambda);
}

DequeueResult UrllcQueue::dequeue_best_effort(int n_s, std::int64_t tau) {
  DequeueResult result;
  result.served = std::min(length(), n_s);
  result.waits.reserve(result.served);
  for (int i = 0; i < result.served; ++i) {
    result.waits.push_back(tau - pending_.front());
    pending_.pop_front();
  }
  return result;
}

void UrllcQueue::enqueue_arrivals(int count, std::int64_t tau) {
  for (int i = 0; i < count; ++i) pending_.push_back(tau);
}

}  // namespace coexsim
