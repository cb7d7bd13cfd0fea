#pragma once

#include <span>
#include <vector>

#include "coexsim/pmf.hpp"

namespace coexsim {

// Finite-horizon analysis of the URLLC queue chain L' = max(L - N_s, 0) + G,
// G ~ Poisson(lambda), over the M mini-slots of one slot. Everything here is
// exact up to the arrival-pmf tail truncation.

// Poisson(lambda) pmf truncated at the smallest support with tail mass below
// tail_eps, then renormalized. Throws for lambda < 0 or tail_eps outside
// (0, 1e-6].
Pmf poisson_pmf(double lambda, double tail_eps);

// Point mass at the queue length observed at the slot boundary.
Pmf init_pmf_known(int l0);

// One step of the queue chain: returns the pmf of max(L - n_s, 0) + G for
// L ~ p, G ~ a.
Pmf advance_queue_pmf(const Pmf& p, const Pmf& a, int n_s);

// Distribution of departures D = min(L, n_s) for L ~ p. Support 0..n_s.
Pmf departure_pmf(const Pmf& p, int n_s);

// Departure pmfs q_tau for tau = 0..m-1, starting from a known queue length.
std::vector<Pmf> departure_pmf_sequence(int l0, const Pmf& a, int n_s, int m);

// Exact pmf of the slot-total preemption count of a set of rank positions:
// T = sum over the m mini-slots of |{k in ranks : k < D_tau}|, via forward
// dynamic programming over the joint (queue length, accumulated count) state.
// For a singleton {k} this is the pmf of the per-rank count Y_[k]. Support
// 0..m*|ranks|. Throws for empty ranks.
Pmf rankset_preemption_pmf(int l0, double lambda, int n_s, int m,
                           std::span<const int> ranks, double tail_eps);

// Per-rank preemption-count pmfs for all ranks 0..n_s-1.
struct PreemptionPattern {
  std::vector<Pmf> by_rank;
};

PreemptionPattern predict_preemption_pattern(int l0, double lambda, int n_s, int m,
                                             double tail_eps);

// E[Y_[k]] computed by the independent route sum_tau P(D_tau > k) from the
// distribution recursion. Cross-checks the rank-set DP.
double expected_rank_preemptions_by_recursion(int l0, double lambda, int n_s, int m,
                                              int rank, double tail_eps);

}  // namespace coexsim
