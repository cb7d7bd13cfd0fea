#pragma once

#include <cmath>
#include <span>
#include <vector>

#include "coexsim/rng.hpp"

namespace coexsim {

// Per-slot SNR realization for every (eMBB user, sub-band) pair, linear scale.
// Constant within a slot; re-sampled at slot boundaries.
struct ChannelState {
  int n_users = 0;
  int n_subbands = 0;
  std::vector<double> gamma;  // row-major [user][subband], linear SNR > 0

  double at(int user, int subband) const {
    return gamma[static_cast<std::size_t>(user) * n_subbands + subband];
  }
  double& at(int user, int subband) {
    return gamma[static_cast<std::size_t>(user) * n_subbands + subband];
  }
};

inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

// Draws one slot's channel matrix: mean SNR (per user, dB) scaled by i.i.d.
// unit-mean exponential fading (block Rayleigh power). With fading disabled
// the matrix is the per-user mean exactly and no variates are consumed.
ChannelState sample_slot_channel(RandomStream& rng, int n_users, int n_subbands,
                                 std::span<const double> mean_snr_db, bool fading = true);

// Information-carrying capacity of one resource block (one sub-band over one
// slot): n_ss * t_s * min(log2(1+gamma), bits_per_symbol_cap). The cap models
// the highest MCS. Throws std::domain_error for non-positive gamma.
double rb_capacity_bits(double gamma, int n_ss, int t_s, double bits_per_symbol_cap);

}  // namespace coexsim
