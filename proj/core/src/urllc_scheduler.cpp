#include "coexsim/urllc_scheduler.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace coexsim {

std::vector<int> RbMetricTable::rank_positions(int n_s) const {
  std::vector<int> pos(n_s, -1);
  for (int r = 0; r < static_cast<int>(rank_of.size()); ++r) pos[rank_of[r]] = r;
  return pos;
}

double update_history(double s_prev, double r, double eta, int t) {
  if (!(eta > 0.0 && eta < 1.0)) {
    throw std::invalid_argument("update_history: eta must lie in (0,1)");
  }
  if (t == 0) return 0.0;
  return (1.0 - eta) * s_prev + eta * r;
}

RbMetricTable compute_metrics(const ChannelState& gamma, std::span<const int> owner,
                              std::span<const double> history) {
  RbMetricTable table;
  for (int k = 0; k < static_cast<int>(owner.size()); ++k) {
    int i = owner[k];
    if (i < 0) continue;
    if (!(history[i] > 0.0)) {
      throw std::invalid_argument("compute_metrics: history must be > 0 (apply the s_min floor)");
    }
    table.rbs.push_back(k);
    table.metric.push_back(std::log2(1.0 + gamma.at(i, k)) / history[i]);
  }
  // Ascending metric, ties broken by ascending RB index. rbs is already in
  // index order, so a stable sort on the metric gives the tie rule.
  std::vector<int> order(table.rbs.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return table.metric[a] < table.metric[b]; });
  table.rank_of.reserve(order.size());
  for (int j : order) table.rank_of.push_back(table.rbs[j]);
  return table;
}

PreemptDecision preempt(const SchedulerState& state, int n_s) {
  if (state.table == nullptr || state.table->size() < n_s) {
    throw std::invalid_argument("preempt: metric table must cover all n_s RBs");
  }
  PreemptDecision decision;
  decision.alpha.assign(n_s, 0);
  decision.count = std::min(state.queue_len, n_s);
  for (int r = 0; r < decision.count; ++r) decision.alpha[state.table->rank_of[r]] = 1;
  return decision;
}

std::span<const int> lowest_ranked(const RbMetricTable& table, int count) {
  return std::span<const int>(table.rank_of.data(), static_cast<std::size_t>(count));
}

}  // namespace coexsim
