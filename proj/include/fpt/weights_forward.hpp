#pragma once

// Forward parametrix weights. The difference kernel of the expansion factors
// as Sbar_t(x,z) = theta_t(x,z) qbar_t(x,z); estimators only ever consume the
// killed form theta_bar = theta * Lambda. The raw log-derivative factors mu1,
// mu2 blow up as z -> L, but their products with Lambda satisfy the exact
// algebraic identity Lambda / (e^rho - 1) = e^{-rho} (rho the bridge
// exponent), so the joint forms below are evaluated without any cancellation
// or series switching and stay finite up to the barrier.

#include "fpt/coefficients.hpp"

namespace fpt {

// mu1 = d_z log qbar_t(x, z), freeze variance a_x. Singular at z = L.
double mu1(double t, double x, double z, double a_x, double barrier);
// mu2 = d^2_z qbar / qbar, freeze variance a_x. Singular at z = L.
double mu2(double t, double x, double z, double a_x, double barrier);

// Stable joint products mu1 * Lambda and mu2 * Lambda; zero for x or z >= L,
// finite limits as z -> L- (mu1*Lambda -> -2(L-x)/(a_x t)).
double mu1_lambda(double t, double x, double z, double a_x, double barrier);
double mu2_lambda(double t, double x, double z, double a_x, double barrier);

struct ForwardWeightContext {
  const CoefficientSet* model;

  explicit ForwardWeightContext(const CoefficientSet& m) : model(&m) {
    m.check_consistent();
    if (m.regularity != RegularityClass::H1 || !m.has_h1_data())
      throw std::invalid_argument("ForwardWeightContext: H1 model with derivatives required");
  }
};

// theta_t(x,z) = (a''(z)/2 - b'(z)) + (a'(z) - b(z)) mu1 + (a(z) - a(x))/2 mu2.
double theta(double t, double x, double z, const ForwardWeightContext& ctx);

// theta_bar = theta * Lambda, the per-step estimator weight. Identically zero
// for z >= L or x >= L and for driftless constant-coefficient models.
double theta_bar(double t, double x, double z, const ForwardWeightContext& ctx);

// Sbar_t(x,z) = theta_bar * gauss(a(x) t, z - x) (difference kernel).
double sbar(double t, double x, double z, const ForwardWeightContext& ctx);

// Kbar_t(x, L) = ((a(L) - a(x)) / a(x)) f_tau^x(x, t); boundary kernel.
double boundary_kernel_K(double t, double x, const ForwardWeightContext& ctx);

// (a(L) - a(x)) / a(x); the correction-branch ratio.
double boundary_correction_ratio(double x, const ForwardWeightContext& ctx);

}  // namespace fpt
