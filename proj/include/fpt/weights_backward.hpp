#pragma once

// Backward parametrix weights. Valid for H2 models: only b itself and the
// Holder regularity of a enter, never derivatives of the coefficients.
//
// Argument conventions mirror the kernels they differentiate:
//   mu_hat(order, t, x, z, a_z, L)   = d^order_x qbar^z_t(x, z) / qbar^z_t(x, z)
//   vartheta(t, z, x)                = (a(x)-a(z))/2 mu_hat2 + b(x) mu_hat1,
// i.e. the freeze point is the first spatial argument of vartheta and the
// derivatives act on the second. vartheta_hat multiplies by the bridge factor
// Lambda with the freeze variance a(z) and is evaluated in the stable joint
// form (see weights_forward.hpp).

#include "fpt/coefficients.hpp"

namespace fpt {

struct BackwardWeightContext {
  const CoefficientSet* model;
  double a_barrier;  // a(L), cached

  explicit BackwardWeightContext(const CoefficientSet& m)
      : model(&m), a_barrier(m.a(m.barrier)) {
    m.check_consistent();
  }
};

// Raw log-derivative factors of qbar frozen at z; singular at x = L.
double mu_hat(int order, double t, double x, double z, double a_z, double barrier);
// Joint products mu_hat * Lambda (freeze variance a_z); finite up to x = L-.
double mu_hat_lambda(int order, double t, double x, double z, double a_z, double barrier);

// vartheta_t(z, x), coefficients frozen at z.
double vartheta(double t, double z, double x, const BackwardWeightContext& ctx);
// vartheta_hat = vartheta * Lambda; zero when either argument >= L.
double vartheta_hat(double t, double z, double x, const BackwardWeightContext& ctx);

// Hbar_1(v, u) = u/v - 1/u and Hbar_2(v, u) = u^2/v^2 - 3/v: log-derivative
// factors of the exit-time density in its spatial argument.
double hbar(int order, double variance_time, double u);

// Exit-time weight vartheta_tilde_L(x, s) = (a(x)-a(L))/2 Hbar_2 + b(x) Hbar_1
// with variance a(L) s. Singular at x = L: use the product form below there.
double exit_weight(double s, double x, const BackwardWeightContext& ctx);

// vartheta_tilde_L(x, s) * f_tau^L(x, s), expanded so it is finite and zero at
// x >= L. This is the K-branch kernel value.
double exit_weight_density(double s, double x, const BackwardWeightContext& ctx);

// Importance ratio weights along the K-branch path (prev -> next over dt):
//   i = 0:   qbar^{next}(prev, next) / qbar^{prev}(prev, next)
//   i >= 1:  vartheta_hat(next, prev) * same ratio.
// Returns 0 when either state is at or above the barrier.
double ratio_weight(int i, double dt, double prev_state, double next_state,
                    const BackwardWeightContext& ctx);

}  // namespace fpt
