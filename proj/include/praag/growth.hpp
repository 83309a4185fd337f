#ifndef PRAAG_GROWTH_HPP
#define PRAAG_GROWTH_HPP

#include <vector>

namespace praag {

struct LinearFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r2 = 1.0;
  std::size_t points = 0;
};

/// Ordinary least squares y = slope*x + intercept.
LinearFit least_squares(const std::vector<double>& x, const std::vector<double>& y);

/// k-th forward finite difference sequence.
std::vector<long long> finite_difference(std::vector<long long> seq, int order);

/// True iff the order-th finite differences of seq vanish identically.
bool finite_differences_vanish(const std::vector<long long>& seq, int order);

}  // namespace praag

#endif
