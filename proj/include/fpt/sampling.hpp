#pragma once

// Poisson random grids, driftless Euler transitions frozen at the left node,
// and exact sampling of the proxy exit time. Everything is a pure function of
// the stream plus explicit draw indices, so samples replay bit-exactly.

#include <vector>

#include "fpt/coefficients.hpp"
#include "fpt/kernels.hpp"
#include "fpt/rng.hpp"

namespace fpt {

struct RandomGrid {
  double horizon = 0.0;    // T
  double intensity = 0.0;  // lambda
  // 0 = zeta_0 < zeta_1 < ... < zeta_N < zeta_{N+1} = T
  std::vector<double> times;

  int jump_count() const { return static_cast<int>(times.size()) - 2; }
};

// N ~ Poisson(lambda T) by CDF inversion (one uniform), jump times as sorted
// uniforms on [0, T].
RandomGrid sample_grid(double T, double lambda, const SampleStream& stream);

// One driftless Euler transition: x + sigma(x) sqrt(dt) z.
double euler_step(double x, double dt, const CoefficientSet& model, double z);

// States of the frozen Euler scheme on all grid nodes (size N + 2, last state
// at the horizon). Normals come from `role` draws starting at `draw0`.
std::vector<double> run_euler(const RandomGrid& grid, double start,
                              const CoefficientSet& model, const SampleStream& stream,
                              Role role = Role::Euler, std::uint32_t draw0 = 0);

// Exit time of the proxy started at x: (L-x)^2 / (a z^2) with z standard
// normal; matches the survival function exactly. Returns 0 for x >= L.
double sample_frozen_exit(const FrozenParams& p, double x, double z);

enum class BridgeOutcome { Survive, Cross };

// Bernoulli(Lambda_t(x, z)) decision, for baselines that need an actual
// crossing rather than a weight.
BridgeOutcome bridge_survival_bernoulli(const FrozenParams& p, double t, double x,
                                        double z, double u);

}  // namespace fpt
