#pragma once

#include <array>
#include <cstdint>

namespace fpt {

// Result of one Monte Carlo estimate. branch_means splits the mean into the
// interior/diffusive part, the exit-payoff part and the correction part
// (components absent from an estimator are zero).
struct EstimateSummary {
  std::uint64_t n_samples = 0;
  double mean = 0.0;
  double std_error = 0.0;
  std::array<double, 3> branch_means{0.0, 0.0, 0.0};
  double max_abs_weight = 0.0;
  double wall_seconds = 0.0;
};

}  // namespace fpt
