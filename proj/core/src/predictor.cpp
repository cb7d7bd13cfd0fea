#include "coexsim/predictor.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace coexsim {

Pmf poisson_pmf(double lambda, double tail_eps) {
  if (!(lambda >= 0.0) || !std::isfinite(lambda)) {
    throw std::invalid_argument("poisson_pmf: lambda must be finite and >= 0");
  }
  if (!(tail_eps > 0.0 && tail_eps <= 1e-6)) {
    throw std::invalid_argument("poisson_pmf: tail_eps must lie in (0, 1e-6]");
  }
  if (lambda == 0.0) return Pmf::point_mass(0);

  std::vector<double> mass;
  double term = std::exp(-lambda);
  double cum = term;
  mass.push_back(term);
  // Smallest support with tail mass < tail_eps.
  while (1.0 - cum >= tail_eps) {
    int n = static_cast<int>(mass.size());
    term *= lambda / n;
    cum += term;
    mass.push_back(term);
  }
  Pmf pmf(std::move(mass));
  pmf.normalize();
  return pmf;
}

Pmf init_pmf_known(int l0) {
  if (l0 < 0) throw std::invalid_argument("init_pmf_known: l0 must be >= 0");
  return Pmf::point_mass(l0);
}

Pmf advance_queue_pmf(const Pmf& p, const Pmf& a, int n_s) {
  // Residual after best-effort service: r_0 = P(L <= n_s), r_j = P(L = n_s+j).
  int res_max = std::max(p.support_max() - n_s, 0);
  std::vector<double> residual(static_cast<std::size_t>(res_max) + 1, 0.0);
  for (int l = 0; l <= std::min(n_s, p.support_max()); ++l) residual[0] += p.at(l);
  for (int j = 1; j <= res_max; ++j) residual[j] = p.at(n_s + j);

  // Next length is residual + arrivals: plain convolution.
  std::vector<double> next(residual.size() + a.size() - 1, 0.0);
  for (std::size_t j = 0; j < residual.size(); ++j) {
    if (residual[j] == 0.0) continue;
    for (int g = 0; g <= a.support_max(); ++g) next[j + g] += residual[j] * a.at(g);
  }
  return Pmf(std::move(next));
}

Pmf departure_pmf(const Pmf& p, int n_s) {
  std::vector<double> q(static_cast<std::size_t>(n_s) + 1, 0.0);
  for (int n = 0; n < n_s; ++n) q[n] = p.at(n);
  q[n_s] = p.tail_at_least(n_s);
  return Pmf(std::move(q));
}

std::vector<Pmf> departure_pmf_sequence(int l0, const Pmf& a, int n_s, int m) {
  std::vector<Pmf> qs;
  qs.reserve(m);
  Pmf p = init_pmf_known(l0);
  for (int tau = 0; tau < m; ++tau) {
    qs.push_back(departure_pmf(p, n_s));
    if (tau + 1 < m) p = advance_queue_pmf(p, a, n_s);
  }
  return qs;
}

Pmf rankset_preemption_pmf(int l0, double lambda, int n_s, int m,
                           std::span<const int> ranks, double tail_eps) {
  if (ranks.empty()) {
    throw std::invalid_argument("rankset_preemption_pmf: ranks must be nonempty");
  }
  if (l0 < 0 || n_s < 1 || m < 1) {
    throw std::invalid_argument("rankset_preemption_pmf: bad l0/n_s/m");
  }
  for (int k : ranks) {
    if (k < 0 || k >= n_s) {
      throw std::invalid_argument("rankset_preemption_pmf: rank out of range");
    }
  }

  Pmf a = poisson_pmf(lambda, tail_eps);
  const int a_max = a.support_max();
  const std::vector<double>& arr = a.mass();

  // count_inc[d] = |{k in ranks : k < d}| for d = 0..n_s.
  std::vector<int> count_inc(static_cast<std::size_t>(n_s) + 1, 0);
  for (int d = 0; d <= n_s; ++d) {
    int c = 0;
    for (int k : ranks) c += (k < d) ? 1 : 0;
    count_inc[d] = c;
  }

  const int l_max = l0 + m * a_max;            // queue cannot exceed this
  const int c_max = m * static_cast<int>(ranks.size());
  const std::size_t c_stride = static_cast<std::size_t>(c_max) + 1;

  // Joint state probability, flattened [l][c].
  std::vector<double> cur((static_cast<std::size_t>(l_max) + 1) * c_stride, 0.0);
  std::vector<double> nxt(cur.size(), 0.0);
  cur[static_cast<std::size_t>(l0) * c_stride + 0] = 1.0;

  int reach_l = l0;  // max queue length reachable so far
  for (int step = 0; step < m; ++step) {
    std::fill(nxt.begin(), nxt.end(), 0.0);
    int step_c_max = step * static_cast<int>(ranks.size());
    for (int l = 0; l <= reach_l; ++l) {
      int d = std::min(l, n_s);
      int base = l - d;  // = max(l - n_s, 0)
      int inc = count_inc[d];
      const double* row = &cur[static_cast<std::size_t>(l) * c_stride];
      for (int c = 0; c <= step_c_max; ++c) {
        double w = row[c];
        if (w == 0.0) continue;
        std::size_t out = static_cast<std::size_t>(base) * c_stride + (c + inc);
        for (int g = 0; g <= a_max; ++g) {
          nxt[out + static_cast<std::size_t>(g) * c_stride] += w * a.at(g);
        }
      }
    }
    cur.swap(nxt);
    reach_l = std::max(reach_l - n_s, 0) + a_max;
  }

  std::vector<double> mass(c_stride, 0.0);
  for (int l = 0; l <= l_max; ++l) {
    const double* row = &cur[static_cast<std::size_t>(l) * c_stride];
    for (std::size_t c = 0; c < c_stride; ++c) mass[c] += row[c];
  }
  Pmf pmf(std::move(mass));
  pmf.normalize();
  return pmf;
}

PreemptionPattern predict_preemption_pattern(int l0, double lambda, int n_s, int m,
                                             double tail_eps) {
  PreemptionPattern pattern;
  pattern.by_rank.reserve(n_s);
  for (int k = 0; k < n_s; ++k) {
    int rank[1] = {k};
    pattern.by_rank.push_back(rankset_preemption_pmf(l0, lambda, n_s, m, rank, tail_eps));
  }
  return pattern;
}

double expected_rank_preemptions_by_recursion(int l0, double lambda, int n_s, int m,
                                              int rank, double tail_eps) {
  Pmf a = poisson_pmf(lambda, tail_eps);
  double mean = 0.0;
  for (const Pmf& q : departure_pmf_sequence(l0, a, n_s, m)) mean += q.tail_above(rank);
  return mean;
}

}  // namespace coexsim
