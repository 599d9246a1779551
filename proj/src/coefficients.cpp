#include "fpt/coefficients.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fpt {

void CoefficientSet::check_consistent() const {
  if (!drift || !diffusion)
    throw std::invalid_argument("CoefficientSet: drift and diffusion required");
  if (!(ellipticity_lower > 0.0) || ellipticity_upper < ellipticity_lower)
    throw std::invalid_argument("CoefficientSet: ellipticity bounds invalid");
  if (regularity == RegularityClass::H1 && !has_h1_data())
    throw std::invalid_argument(
        "CoefficientSet: H1 model requires drift_deriv, diff_sq_deriv, diff_sq_deriv2");
  if (!(holder_exponent > 0.0) || holder_exponent > 1.0)
    throw std::invalid_argument("CoefficientSet: holder_exponent must be in (0,1]");
}

CoefficientSet constant_bm(double drift, double sigma, double barrier) {
  if (!(sigma > 0.0)) throw std::invalid_argument("constant_bm: sigma must be > 0");
  CoefficientSet m;
  m.drift = [drift](double) { return drift; };
  m.diffusion = [sigma](double) { return sigma; };
  m.drift_deriv = [](double) { return 0.0; };
  m.diff_sq_deriv = [](double) { return 0.0; };
  m.diff_sq_deriv2 = [](double) { return 0.0; };
  m.ellipticity_lower = m.ellipticity_upper = sigma * sigma;
  m.barrier = barrier;
  m.regularity = RegularityClass::H1;
  m.holder_exponent = 1.0;
  m.name = "constant_bm";
  return m;
}

CoefficientSet smooth_bounded_drift(double b0, double b1, double sigma, double barrier) {
  if (!(sigma > 0.0)) throw std::invalid_argument("smooth_bounded_drift: sigma must be > 0");
  CoefficientSet m;
  m.drift = [b0, b1](double x) { return b0 + b1 * std::tanh(x); };
  m.drift_deriv = [b1](double x) {
    const double th = std::tanh(x);
    return b1 * (1.0 - th * th);
  };
  m.diffusion = [sigma](double) { return sigma; };
  m.diff_sq_deriv = [](double) { return 0.0; };
  m.diff_sq_deriv2 = [](double) { return 0.0; };
  m.ellipticity_lower = m.ellipticity_upper = sigma * sigma;
  m.barrier = barrier;
  m.regularity = RegularityClass::H1;
  m.holder_exponent = 1.0;
  m.name = "smooth_bounded_drift";
  return m;
}

CoefficientSet tanh_diffusion(double base, double amp, double barrier, double drift) {
  if (!(base > std::fabs(amp)))
    throw std::invalid_argument("tanh_diffusion: need base > |amp| for ellipticity");
  CoefficientSet m;
  m.drift = [drift](double) { return drift; };
  m.drift_deriv = [](double) { return 0.0; };
  m.diffusion = [base, amp](double x) { return std::sqrt(base + amp * std::tanh(x)); };
  m.diff_sq_deriv = [amp](double x) {
    const double th = std::tanh(x);
    return amp * (1.0 - th * th);
  };
  m.diff_sq_deriv2 = [amp](double x) {
    const double th = std::tanh(x);
    return -2.0 * amp * th * (1.0 - th * th);
  };
  m.ellipticity_lower = base - std::fabs(amp);
  m.ellipticity_upper = base + std::fabs(amp);
  m.barrier = barrier;
  m.regularity = RegularityClass::H1;
  m.holder_exponent = 1.0;
  m.name = "tanh_diffusion";
  return m;
}

CoefficientSet step_drift(double lo, double hi, double threshold, double sigma, double barrier) {
  if (!(sigma > 0.0)) throw std::invalid_argument("step_drift: sigma must be > 0");
  CoefficientSet m;
  m.drift = [lo, hi, threshold](double x) { return x < threshold ? lo : hi; };
  m.diffusion = [sigma](double) { return sigma; };
  m.ellipticity_lower = m.ellipticity_upper = sigma * sigma;
  m.barrier = barrier;
  m.regularity = RegularityClass::H2;
  m.holder_exponent = 1.0;
  m.name = "step_drift";
  return m;
}

ValidationReport validate(const CoefficientSet& model, double x_lo, double x_hi, int n_points) {
  model.check_consistent();
  ValidationReport rep;
  if (n_points < 2) throw std::invalid_argument("validate: n_points must be >= 2");
  x_hi = std::min(x_hi, model.barrier);  // coefficients matter on (-inf, L] only
  if (!(x_hi > x_lo)) throw std::invalid_argument("validate: empty grid");

  const double h = (x_hi - x_lo) / (n_points - 1);
  const double fd = std::max(1e-6, h * 1e-3);
  rep.a_min = rep.a_max = model.a(x_lo);
  double prev_x = x_lo, prev_a = rep.a_min;
  const double eta = model.holder_exponent;
  const double tol = 1e-6 * std::max(1.0, model.ellipticity_upper);

  for (int i = 0; i < n_points; ++i) {
    const double x = x_lo + i * h;
    const double ax = model.a(x);
    rep.a_min = std::min(rep.a_min, ax);
    rep.a_max = std::max(rep.a_max, ax);
    rep.sup_abs_drift = std::max(rep.sup_abs_drift, std::fabs(model.drift(x)));
    if ((ax < model.ellipticity_lower - tol || ax > model.ellipticity_upper + tol) &&
        !rep.offending_x) {
      rep.offending_x = x;
    }
    if (i > 0) {
      const double dq = std::fabs(ax - prev_a) / std::pow(std::fabs(x - prev_x), eta);
      rep.holder_quotient = std::max(rep.holder_quotient, dq);
    }
    if (model.has_h1_data()) {
      const auto rel_err = [](double got, double want) {
        return std::fabs(got - want) / std::max(1.0, std::fabs(want));
      };
      const double bp_fd = (model.drift(x + fd) - model.drift(x - fd)) / (2.0 * fd);
      rep.max_drift_deriv_err = std::max(rep.max_drift_deriv_err, rel_err(model.drift_deriv(x), bp_fd));
      const double ap_fd = (model.a(x + fd) - model.a(x - fd)) / (2.0 * fd);
      rep.max_a_deriv_err = std::max(rep.max_a_deriv_err, rel_err(model.diff_sq_deriv(x), ap_fd));
      const double app_fd = (model.a(x + fd) - 2.0 * model.a(x) + model.a(x - fd)) / (fd * fd);
      rep.max_a_deriv2_err = std::max(rep.max_a_deriv2_err, rel_err(model.diff_sq_deriv2(x), app_fd));
    }
    prev_x = x;
    prev_a = ax;
  }

  if (rep.offending_x) {
    rep.pass = false;
    rep.message = "ellipticity bounds violated at x = " + std::to_string(*rep.offending_x);
    return rep;
  }
  const double deriv_tol = 1e-4;
  if (model.has_h1_data() &&
      (rep.max_drift_deriv_err > deriv_tol || rep.max_a_deriv_err > deriv_tol ||
       rep.max_a_deriv2_err > deriv_tol)) {
    rep.pass = false;
    rep.message = "declared derivatives disagree with finite differences";
    return rep;
  }
  rep.pass = true;
  rep.message = "ok";
  return rep;
}

}  // namespace fpt
