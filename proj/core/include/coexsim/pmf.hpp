#pragma once

#include <cstddef>
#include <vector>

namespace coexsim {

// Probability mass function on {0, 1, ..., support_max()}.
class Pmf {
 public:
  Pmf() = default;
  explicit Pmf(std::vector<double> mass);

  static Pmf point_mass(int value);

  int support_max() const { return static_cast<int>(mass_.size()) - 1; }
  std::size_t size() const { return mass_.size(); }

  // Mass at n; zero outside the stored support.
  double at(int n) const {
    return (n >= 0 && n < static_cast<int>(mass_.size())) ? mass_[n] : 0.0;
  }
  double operator[](int n) const { return at(n); }
  const std::vector<double>& mass() const { return mass_; }

  double sum() const;
  double mean() const;
  // P(X > y).
  double tail_above(int y) const;
  // P(X >= y).
  double tail_at_least(int y) const { return tail_above(y - 1); }

  void normalize();
  bool is_normalized(double tol = 1e-9) const;

 private:
  std::vector<double> mass_{1.0};
};

// Total variation distance, 0.5 * sum |p - q| over the joint support.
double total_variation(const Pmf& p, const Pmf& q);

}  // namespace coexsim
