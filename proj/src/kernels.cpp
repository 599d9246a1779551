#include "fpt/kernels.hpp"

#include <cmath>

namespace fpt {

namespace {

constexpr double kInvSqrt2Pi = 0.3989422804014326779399461;

inline void check_time(double t, const char* what) {
  if (!(t > 0.0)) throw std::domain_error(std::string(what) + ": time must be > 0");
}

}  // namespace

double gauss(double variance_time, double displacement) {
  check_time(variance_time, "gauss");
  const double e = displacement * displacement / (2.0 * variance_time);
  if (e > detail::kExpFloor) return 0.0;
  return kInvSqrt2Pi / std::sqrt(variance_time) * std::exp(-e);
}

double hermite_factor(int order, double variance_time, double displacement) {
  check_time(variance_time, "hermite_factor");
  switch (order) {
    case 1:
      return -displacement / variance_time;
    case 2:
      return displacement * displacement / (variance_time * variance_time) -
             1.0 / variance_time;
    default:
      throw std::domain_error("hermite_factor: order must be 1 or 2");
  }
}

double bridge_survival(const FrozenParams& p, double t, double x, double z) {
  check_time(t, "bridge_survival");
  const double L = p.barrier;
  if (x >= L || z >= L) return 0.0;
  const double rho = 2.0 * (L - x) * (L - z) / (p.variance * t);
  return -std::expm1(-rho);
}

double killed_density(const FrozenParams& p, double t, double x, double z) {
  check_time(t, "killed_density");
  if (x >= p.barrier || z >= p.barrier) return 0.0;
  return gauss(p.variance * t, z - x) * bridge_survival(p, t, x, z);
}

double killed_density_dz(const FrozenParams& p, double t, double x, double z) {
  check_time(t, "killed_density_dz");
  const double L = p.barrier;
  if (x > L || z > L) return 0.0;
  const double v = p.variance * t;
  return -(z - x) / v * gauss(v, z - x) +
         (z + x - 2.0 * L) / v * gauss(v, 2.0 * L - x - z);
}

double killed_density_dx(int order, const FrozenParams& p, double t, double x, double z) {
  check_time(t, "killed_density_dx");
  const double L = p.barrier;
  if (x > L || z > L) return 0.0;
  const double v = p.variance * t;
  const double refl = 2.0 * L - x - z;
  switch (order) {
    case 1:
      return (z - x) / v * gauss(v, z - x) - refl / v * gauss(v, refl);
    case 2:
      return hermite_factor(2, v, z - x) * gauss(v, z - x) -
             hermite_factor(2, v, refl) * gauss(v, refl);
    default:
      throw std::domain_error("killed_density_dx: order must be 1 or 2");
  }
}

double killed_density_dt(const FrozenParams& p, double t, double x, double z) {
  return 0.5 * p.variance * killed_density_dx(2, p, t, x, z);
}

double exit_time_density(const FrozenParams& p, double x, double s) {
  check_time(s, "exit_time_density");
  const double u = p.barrier - x;
  if (u <= 0.0) return 0.0;
  const double e = u * u / (2.0 * p.variance * s);
  if (e > detail::kExpFloor) return 0.0;
  return u / std::sqrt(2.0 * M_PI * p.variance) / (s * std::sqrt(s)) * std::exp(-e);
}

double exit_time_density_dx(int order, const FrozenParams& p, double x, double s) {
  check_time(s, "exit_time_density_dx");
  const double u = p.barrier - x;
  if (u < 0.0) return 0.0;
  const double v = p.variance * s;
  const double gv = gauss(v, u);
  // f = (u/s) g(v, u); the Hbar factors are multiplied through so the result
  // stays finite at u = 0.
  switch (order) {
    case 1:
      return (u * u / (v * s) - 1.0 / s) * gv;
    case 2:
      return (u * u * u / (v * v * s) - 3.0 * u / (v * s)) * gv;
    default:
      throw std::domain_error("exit_time_density_dx: order must be 1 or 2");
  }
}

double exit_time_survival(const FrozenParams& p, double x, double t) {
  check_time(t, "exit_time_survival");
  const double u = p.barrier - x;
  if (u <= 0.0) return 0.0;
  return std::erf(u / std::sqrt(2.0 * p.variance * t));
}

}  // namespace fpt
