#pragma once

#include <cstdint>
#include <deque>
#include <vector>

#include "coexsim/rng.hpp"

namespace coexsim {

// Number of packets arriving in one mini-slot, Poisson(lambda).
// Throws std::invalid_argument for negative or non-finite lambda.
int sample_arrivals(RandomStream& rng, double lambda);

struct DequeueResult {
  int served = 0;
  // Queueing latency of each served packet: dequeue mini-slot minus arrival
  // mini-slot, in FIFO removal order.
  std::vector<std::int64_t> waits;
};

// FIFO of pending URLLC packets at the base station. Each entry is the
// arrival mini-slot index of one packet.
class UrllcQueue {
 public:
  int length() const { return static_cast<int>(pending_.size()); }
  bool empty() const { return pending_.empty(); }

  // Serves min(length, n_s) packets, oldest first.
  DequeueResult dequeue_best_effort(int n_s, std::int64_t tau);

  // Appends `count` fresh arrivals stamped with the current mini-slot.
  void enqueue_arrivals(int count, std::int64_t tau);

  std::int64_t arrival_time_at(int pos) const { return pending_[pos]; }

 private:
  std::deque<std::int64_t> pending_;
};

}  // namespace coexsim
