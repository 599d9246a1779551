#pragma once

// Scalar kernels of the driftless constant-coefficient proxy process killed at
// an upper barrier: Gaussian density, Hermite factors, the killed transition
// kernel, the barrier hitting-time density/survival, and the Brownian-bridge
// no-crossing probability. All formulas are closed-form; the implementations
// care about one thing beyond the formulas: never cancel catastrophically near
// the barrier. The killed kernel is therefore always evaluated in the
// factorized form  qbar = gauss * bridge_survival  (difference-of-Gaussians is
// avoided), and exponentials that would underflow return exact zero.

#include <stdexcept>

namespace fpt {

// Frozen-coefficient parameters: variance a(y) of the proxy process and the
// barrier level L. Every kernel evaluated with a state at or above the
// barrier is exactly zero.
struct FrozenParams {
  double variance;  // a(y) > 0
  double barrier;   // L

  FrozenParams(double a, double L) : variance(a), barrier(L) {
    if (!(a > 0.0)) throw std::domain_error("FrozenParams: variance must be > 0");
  }
};

// g(v, y) = (2 pi v)^{-1/2} exp(-y^2 / (2 v)); v is the variance-time product.
double gauss(double variance_time, double displacement);

// H_1(v, y) = -y/v,  H_2(v, y) = y^2/v^2 - 1/v  (log-derivative factors of g).
double hermite_factor(int order, double variance_time, double displacement);

// qbar_t(x, z): sub-probability transition density of the proxy started at x,
// killed at the barrier, evaluated at z. Zero for x >= L or z >= L.
double killed_density(const FrozenParams& p, double t, double x, double z);

// d/dz qbar_t(x, z), left-continuous at the barrier.
double killed_density_dz(const FrozenParams& p, double t, double x, double z);

// d^order/dx^order qbar_t(x, z) for order in {1, 2}, left-continuous at L.
double killed_density_dx(int order, const FrozenParams& p, double t, double x, double z);

// d/dt qbar_t(x, z) via the heat identity  d_t qbar = (a/2) d^2_x qbar.
double killed_density_dt(const FrozenParams& p, double t, double x, double z);

// f_tau(x, s) = (L-x) / (sqrt(2 pi a) s^{3/2}) exp(-(L-x)^2 / (2 a s)):
// density of the barrier hitting time of the proxy started at x. Zero for x >= L.
double exit_time_density(const FrozenParams& p, double x, double s);

// d^order/dx^order f_tau(x, s) for order in {1, 2}, in product-expanded form
// that stays finite as x -> L.
double exit_time_density_dx(int order, const FrozenParams& p, double x, double s);

// P(tau > t) = erf((L-x) / sqrt(2 a t)); in [0, 1], zero at x >= L.
double exit_time_survival(const FrozenParams& p, double x, double t);

// Lambda_t(x, z) = 1 - exp(-2 (L-x)(L-z) / (a t)): probability that the bridge
// of the proxy pinned at (x, z) stays below the barrier. Evaluated with expm1;
// zero when either endpoint is at or above the barrier.
double bridge_survival(const FrozenParams& p, double t, double x, double z);

namespace detail {
// Largest magnitude Gaussian exponent before exp underflows to subnormals;
// beyond it kernels return exact 0.
inline constexpr double kExpFloor = 745.0;
}  // namespace detail

}  // namespace fpt
