#include "fpt/weights_backward.hpp"

#include <cmath>

#include "fpt/kernels.hpp"
#include "fpt/weights_forward.hpp"

namespace fpt {

double mu_hat(int order, double t, double x, double z, double a_z, double barrier) {
  // d_x qbar^z(x,z)/qbar is d_z qbar with the spatial roles swapped.
  switch (order) {
    case 1:
      return mu1(t, z, x, a_z, barrier);
    case 2:
      return mu2(t, z, x, a_z, barrier);
    default:
      throw std::domain_error("mu_hat: order must be 1 or 2");
  }
}

double mu_hat_lambda(int order, double t, double x, double z, double a_z, double barrier) {
  switch (order) {
    case 1:
      return mu1_lambda(t, z, x, a_z, barrier);
    case 2:
      return mu2_lambda(t, z, x, a_z, barrier);
    default:
      throw std::domain_error("mu_hat_lambda: order must be 1 or 2");
  }
}

double vartheta(double t, double z, double x, const BackwardWeightContext& ctx) {
  const CoefficientSet& m = *ctx.model;
  const double a_z = m.a(z);
  return 0.5 * (m.a(x) - a_z) * mu_hat(2, t, x, z, a_z, m.barrier) +
         m.drift(x) * mu_hat(1, t, x, z, a_z, m.barrier);
}

double vartheta_hat(double t, double z, double x, const BackwardWeightContext& ctx) {
  const CoefficientSet& m = *ctx.model;
  if (x >= m.barrier || z >= m.barrier) return 0.0;
  const double a_z = m.a(z);
  return 0.5 * (m.a(x) - a_z) * mu_hat_lambda(2, t, x, z, a_z, m.barrier) +
         m.drift(x) * mu_hat_lambda(1, t, x, z, a_z, m.barrier);
}

double hbar(int order, double variance_time, double u) {
  switch (order) {
    case 1:
      return u / variance_time - 1.0 / u;
    case 2:
      return u * u / (variance_time * variance_time) - 3.0 / variance_time;
    default:
      throw std::domain_error("hbar: order must be 1 or 2");
  }
}

double exit_weight(double s, double x, const BackwardWeightContext& ctx) {
  if (!(s > 0.0)) throw std::domain_error("exit_weight: s must be > 0");
  const CoefficientSet& m = *ctx.model;
  const double v = ctx.a_barrier * s;
  const double u = m.barrier - x;
  return 0.5 * (m.a(x) - ctx.a_barrier) * hbar(2, v, u) + m.drift(x) * hbar(1, v, u);
}

double exit_weight_density(double s, double x, const BackwardWeightContext& ctx) {
  const CoefficientSet& m = *ctx.model;
  if (x >= m.barrier) return 0.0;
  const FrozenParams pL(ctx.a_barrier, m.barrier);
  return 0.5 * (m.a(x) - ctx.a_barrier) * exit_time_density_dx(2, pL, x, s) +
         m.drift(x) * exit_time_density_dx(1, pL, x, s);
}

double ratio_weight(int i, double dt, double prev_state, double next_state,
                    const BackwardWeightContext& ctx) {
  const CoefficientSet& m = *ctx.model;
  if (prev_state >= m.barrier || next_state >= m.barrier) return 0.0;
  const FrozenParams p_next(m.a(next_state), m.barrier);
  const FrozenParams p_prev(m.a(prev_state), m.barrier);
  const double num = killed_density(p_next, dt, prev_state, next_state);
  const double den = killed_density(p_prev, dt, prev_state, next_state);
  if (den == 0.0) return 0.0;
  double r = num / den;
  if (i >= 1) r *= vartheta_hat(dt, next_state, prev_state, ctx);
  return r;
}

}  // namespace fpt
