#include "coexsim/pmf.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace coexsim {

Pmf::Pmf(std::vector<double> mass) : mass_(std::move(mass)) {
  if (mass_.empty()) throw std::invalid_argument("Pmf: empty mass vector");
  for (double v : mass_) {
    if (!(v >= 0.0) || !std::isfinite(v)) {
      throw std::invalid_argument("Pmf: entries must be finite and >= 0");
    }
  }
}

Pmf Pmf::point_mass(int value) {
  if (value < 0) throw std::invalid_argument("Pmf::point_mass: negative value");
  std::vector<double> m(static_cast<std::size_t>(value) + 1, 0.0);
  m.back() = 1.0;
  return Pmf(std::move(m));
}

double Pmf::sum() const {
  return std::accumulate(mass_.begin(), mass_.end(), 0.0);
}

double Pmf::mean() const {
  double s = 0.0;
  for (std::size_t n = 0; n < mass_.size(); ++n) s += static_cast<double>(n) * mass_[n];
  return s;
}

double Pmf::tail_above(int y) const {
  double s = 0.0;
  for (int n = std::max(y + 1, 0); n < static_cast<int>(mass_.size()); ++n) s += mass_[n];
  return s;
}

void Pmf::normalize() {
  double s = sum();
  if (s <= 0.0) throw std::domain_error("Pmf::normalize: zero total mass");
  for (double& v : mass_) v /= s;
}

bool Pmf::is_normalized(double tol) const {
  return std::abs(sum() - 1.0) <= tol;
}

double total_variation(const Pmf& p, const Pmf& q) {
  int hi = std::max(p.support_max(), q.support_max());
  double d = 0.0;
  for (int n = 0; n <= hi; ++n) d += std::abs(p.at(n) - q.at(n));
  return 0.5 * d;
}

}  // namespace coexsim
