#include "coexsim/channel.hpp"

#include <cmath>
#include <stdexcept>

namespace coexsim {

ChannelState sample_slot_channel(RandomStream& rng, int n_users, int n_subbands,
                                 std::span<const double> mean_snr_db, bool fading) {
  if (n_users < 1 || n_subbands < 1) {
    throw std::invalid_argument("sample_slot_channel: need at least one user and sub-band");
  }
  if (static_cast<int>(mean_snr_db.size()) != n_users) {
    throw std::invalid_argument("sample_slot_channel: mean_snr_db size mismatch");
  }
  ChannelState st;
  st.n_users = n_users;
  st.n_subbands = n_subbands;
  st.gamma.resize(static_cast<std::size_t>(n_users) * n_subbands);
  for (int i = 0; i < n_users; ++i) {
    double mean_lin = db_to_linear(mean_snr_db[i]);
    for (int k = 0; k < n_subbands; ++k) {
      st.at(i, k) = fading ? mean_lin * rng.exponential() : mean_lin;
    }
  }
  return st;
}

double rb_capacity_bits(double gamma, int n_ss, int t_s, double bits_per_symbol_cap) {
  if (!(gamma > 0.0)) {
    throw std::domain_error("rb_capacity_bits: gamma must be > 0");
  }
  double per_symbol = std::min(std::log2(1.0 + gamma), bits_per_symbol_cap);
  return static_cast<double>(n_ss) * t_s * per_symbol;
}

}  // namespace coexsim
