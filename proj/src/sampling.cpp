#include "fpt/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fpt {

RandomGrid sample_grid(double T, double lambda, const SampleStream& stream) {
  if (!(T > 0.0)) throw std::domain_error("sample_grid: T must be > 0");
  if (!(lambda > 0.0)) throw std::domain_error("sample_grid: lambda must be > 0");

  const double m = lambda * T;
  const double u = stream.uniform(Role::GridCount, 0);
  int n = 0;
  double pmf = std::exp(-m), cdf = pmf;
  while (u > cdf) {
    ++n;
    pmf *= m / n;
    cdf += pmf;
    if (pmf == 0.0) break;  // deep Poisson tail exhausted in double precision
  }

  RandomGrid grid;
  grid.horizon = T;
  grid.intensity = lambda;
  grid.times.resize(n + 2);
  grid.times.front() = 0.0;
  for (int i = 0; i < n; ++i)
    grid.times[i + 1] = T * stream.uniform(Role::GridTimes, static_cast<std::uint32_t>(i));
  std::sort(grid.times.begin() + 1, grid.times.begin() + 1 + n);
  grid.times.back() = T;
  return grid;
}

double euler_step(double x, double dt, const CoefficientSet& model, double z) {
  if (!(dt > 0.0)) throw std::domain_error("euler_step: dt must be > 0");
  return x + model.diffusion(x) * std::sqrt(dt) * z;
}

std::vector<double> run_euler(const RandomGrid& grid, double start,
                              const CoefficientSet& model, const SampleStream& stream,
                              Role role, std::uint32_t draw0) {
  std::vector<double> states(grid.times.size());
  states[0] = start;
  for (std::size_t i = 0; i + 1 < grid.times.size(); ++i) {
    const double dt = grid.times[i + 1] - grid.times[i];
    const double z = stream.normal(role, draw0 + static_cast<std::uint32_t>(i));
    states[i + 1] = dt > 0.0 ? euler_step(states[i], dt, model, z) : states[i];
  }
  return states;
}

double sample_frozen_exit(const FrozenParams& p, double x, double z) {
  const double u = p.barrier - x;
  if (u <= 0.0) return 0.0;
  return u * u / (p.variance * z * z);
}

BridgeOutcome bridge_survival_bernoulli(const FrozenParams& p, double t, double x,
                                        double z, double u) {
  return u < bridge_survival(p, t, x, z) ? BridgeOutcome::Survive : BridgeOutcome::Cross;
}

}  // namespace fpt
