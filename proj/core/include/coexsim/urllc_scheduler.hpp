#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "coexsim/channel.hpp"

namespace coexsim {

// Per-RB proportional-fair metrics for one slot, with the ascending ranking
// the greedy preemptor consumes. Only RBs owned by an eMBB user are listed.
struct RbMetricTable {
  std::vector<int> rbs;        // RB indices covered by this table
  std::vector<double> metric;  // metric of rbs[j], finite and >= 0
  std::vector<int> rank_of;    // rank r -> RB index with the r-th smallest metric

  int size() const { return static_cast<int>(rbs.size()); }
  // Rank position of each RB index (-1 for RBs not in the table).
  std::vector<int> rank_positions(int n_s) const;
};

// Mini-slot state fed to the preemption policy: the slot-level metric vector
// plus the current URLLC queue length.
struct SchedulerState {
  const RbMetricTable* table = nullptr;
  int queue_len = 0;
};

// Preemption decision for one mini-slot, one flag per sub-band.
struct PreemptDecision {
  std::vector<std::uint8_t> alpha;
  int count = 0;  // number of flags set
};

// Exponentially aged successful-throughput history. Returns 0 at t=0,
// otherwise (1-eta)*s_prev + eta*r. Throws std::invalid_argument when eta
// is outside (0,1).
double update_history(double s_prev, double r, double eta, int t);

// Builds the metric table: metric = log2(1+gamma[owner])/history[owner] per
// owned RB, ranked ascending with ties broken by ascending RB index.
// owner[k] < 0 marks RBs excluded from the table (e.g. reserved sub-bands).
// Throws if any referenced history entry is <= 0 (callers floor at s_min).
RbMetricTable compute_metrics(const ChannelState& gamma, std::span<const int> owner,
                              std::span<const double> history);

// Greedy policy: preempt the min(queue_len, n_s) lowest-ranked RBs.
PreemptDecision preempt(const SchedulerState& state, int n_s);

// The `count` lowest-ranked RB indices, in rank order.
std::span<const int> lowest_ranked(const RbMetricTable& table, int count);

}  // namespace coexsim
