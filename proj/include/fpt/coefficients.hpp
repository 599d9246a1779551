#pragma once

// SDE coefficient models dX = b(X) dt + sigma(X) dW with an upper barrier L.
// H1 models (smooth: b in C^1, a = sigma^2 in C^2, derivatives supplied) are
// accepted by forward and backward estimators; H2 models (b bounded
// measurable, a Holder) only by backward ones. Coefficients are used only on
// (-infty, L]; validation grids stop at the barrier.

#include <functional>
#include <optional>
#include <string>

namespace fpt {

enum class RegularityClass { H1, H2 };

struct CoefficientSet {
  std::function<double(double)> drift;      // b
  std::function<double(double)> diffusion;  // sigma
  // Required for H1, empty for H2-only models.
  std::function<double(double)> drift_deriv;     // b'
  std::function<double(double)> diff_sq_deriv;   // a'
  std::function<double(double)> diff_sq_deriv2;  // a''
  double ellipticity_lower = 0.0;  // lower bound on a
  double ellipticity_upper = 0.0;  // upper bound on a
  double barrier = 0.0;            // L
  RegularityClass regularity = RegularityClass::H2;
  double holder_exponent = 1.0;  // eta of a, metadata only (truncation bounds)
  std::string name;

  double a(double x) const {
    const double s = diffusion(x);
    return s * s;
  }
  bool has_h1_data() const {
    return static_cast<bool>(drift_deriv) && static_cast<bool>(diff_sq_deriv) &&
           static_cast<bool>(diff_sq_deriv2);
  }
  // Throws std::invalid_argument if regularity/derivative requirements clash.
  void check_consistent() const;
};

// Built-in analytic models.
CoefficientSet constant_bm(double drift, double sigma, double barrier);
// b(x) = b0 + b1 tanh(x), sigma constant.
CoefficientSet smooth_bounded_drift(double b0, double b1, double sigma, double barrier);
// a(x) = base + amp tanh(x) (0 <= amp < base), optional constant drift.
CoefficientSet tanh_diffusion(double base, double amp, double barrier, double drift = 0.0);
// b(x) = lo for x < threshold, hi otherwise; sigma constant. H2 only.
CoefficientSet step_drift(double lo, double hi, double threshold, double sigma, double barrier);

struct ValidationReport {
  bool pass = false;
  double a_min = 0.0, a_max = 0.0;
  double sup_abs_drift = 0.0;
  double max_drift_deriv_err = 0.0;    // relative FD mismatch of b'
  double max_a_deriv_err = 0.0;        // relative FD mismatch of a'
  double max_a_deriv2_err = 0.0;       // relative FD mismatch of a''
  double holder_quotient = 0.0;        // max |a(x)-a(y)|/|x-y|^eta over the grid
  std::optional<double> offending_x;   // first ellipticity violation
  std::string message;
};

// Scans [x_lo, x_hi] (x_hi clamped to the barrier) on n_points; rejects
// ellipticity violations and reports finite-difference checks of the declared
// derivatives at relative tolerance 1e-4.
ValidationReport validate(const CoefficientSet& model, double x_lo, double x_hi,
                          int n_points = 2048);

}  // namespace fpt
