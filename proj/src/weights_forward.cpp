#include "fpt/weights_forward.hpp"

#include <cmath>

#include "fpt/kernels.hpp"

namespace fpt {

namespace {

inline void check_t(double t) {
  if (!(t > 0.0)) throw std::domain_error("forward weights: time must be > 0");
}

}  // namespace

double mu1(double t, double x, double z, double a_x, double barrier) {
  check_t(t);
  const double v = a_x * t;
  const double rho = 2.0 * (barrier - x) * (barrier - z) / v;
  return -(z - x) / v - 2.0 * (barrier - x) / v / std::expm1(rho);
}

double mu2(double t, double x, double z, double a_x, double barrier) {
  check_t(t);
  const double v = a_x * t;
  const double rho = 2.0 * (barrier - x) * (barrier - z) / v;
  return hermite_factor(2, v, z - x) -
         4.0 * (barrier - x) * (barrier - z) / (v * v) / std::expm1(rho);
}

double mu1_lambda(double t, double x, double z, double a_x, double barrier) {
  check_t(t);
  if (x >= barrier || z >= barrier) return 0.0;
  const double v = a_x * t;
  const double rho = 2.0 * (barrier - x) * (barrier - z) / v;
  const double lam = -std::expm1(-rho);
  return hermite_factor(1, v, z - x) * lam - 2.0 * (barrier - x) / v * std::exp(-rho);
}

double mu2_lambda(double t, double x, double z, double a_x, double barrier) {
  check_t(t);
  if (x >= barrier || z >= barrier) return 0.0;
  const double v = a_x * t;
  const double rho = 2.0 * (barrier - x) * (barrier - z) / v;
  const double lam = -std::expm1(-rho);
  return hermite_factor(2, v, z - x) * lam -
         4.0 * (barrier - x) * (barrier - z) / (v * v) * std::exp(-rho);
}

double theta(double t, double x, double z, const ForwardWeightContext& ctx) {
  check_t(t);
  const CoefficientSet& m = *ctx.model;
  if (x >= m.barrier) return 0.0;
  const double a_x = m.a(x);
  return (0.5 * m.diff_sq_deriv2(z) - m.drift_deriv(z)) +
         (m.diff_sq_deriv(z) - m.drift(z)) * mu1(t, x, z, a_x, m.barrier) +
         0.5 * (m.a(z) - a_x) * mu2(t, x, z, a_x, m.barrier);
}

double theta_bar(double t, double x, double z, const ForwardWeightContext& ctx) {
  check_t(t);
  const CoefficientSet& m = *ctx.model;
  if (x >= m.barrier || z >= m.barrier) return 0.0;
  const double a_x = m.a(x);
  const double lam = bridge_survival(FrozenParams(a_x, m.barrier), t, x, z);
  return (0.5 * m.diff_sq_deriv2(z) - m.drift_deriv(z)) * lam +
         (m.diff_sq_deriv(z) - m.drift(z)) * mu1_lambda(t, x, z, a_x, m.barrier) +
         0.5 * (m.a(z) - a_x) * mu2_lambda(t, x, z, a_x, m.barrier);
}

double sbar(double t, double x, double z, const ForwardWeightContext& ctx) {
  const CoefficientSet& m = *ctx.model;
  if (x >= m.barrier || z >= m.barrier) return 0.0;
  return theta_bar(t, x, z, ctx) * gauss(m.a(x) * t, z - x);
}

double boundary_kernel_K(double t, double x, const ForwardWeightContext& ctx) {
  const CoefficientSet& m = *ctx.model;
  if (x >= m.barrier) return 0.0;
  const double a_x = m.a(x);
  return (m.a(m.barrier) - a_x) / a_x *
         exit_time_density(FrozenParams(a_x, m.barrier), x, t);
}

double boundary_correction_ratio(double x, const ForwardWeightContext& ctx) {
  const CoefficientSet& m = *ctx.model;
  const double a_x = m.a(x);
  return (m.a(m.barrier) - a_x) / a_x;
}

}  // namespace fpt
