#include "rpdo/cutoff.hpp"

namespace rpdo {

namespace {

inline double bump(double t) { return t > 0.0 ? std::exp(-1.0 / t) : 0.0; }

inline double bump_deriv(double t) {
  return t > 0.0 ? std::exp(-1.0 / t) / (t * t) : 0.0;
}

}  // namespace

double smooth_step(double t) {
  if (t <= 0.0) return 0.0;
  if (t >= 1.0) return 1.0;
  const double a = bump(t), b = bump(1.0 - t);
  return a / (a + b);
}

double smooth_step_deriv(double t) {
  if (t <= 0.0 || t >= 1.0) return 0.0;
  const double a = bump(t), b = bump(1.0 - t);
  const double da = bump_deriv(t), db = -bump_deriv(1.0 - t);
  const double s = a + b;
  return (da * s - a * (da + db)) / (s * s);
}

double cutoff_chi(double t) { return 1.0 - smooth_step(std::abs(t) - 1.0); }

double cutoff_dchi(double t) {
  const double sign = t < 0.0 ? -1.0 : 1.0;
  return -sign * smooth_step_deriv(std::abs(t) - 1.0);
}

double cutoff_phi(double t) { return cutoff_chi(t) - cutoff_chi(2.0 * t); }

double cutoff_dphi(double t) { return cutoff_dchi(t) - 2.0 * cutoff_dchi(2.0 * t); }

double DyadicCutoff::chi(double t) const { return cutoff_chi(t); }
double DyadicCutoff::phi(double t) const { return cutoff_phi(t); }
double DyadicCutoff::dchi(double t) const { return cutoff_dchi(t); }
double DyadicCutoff::dphi(double t) const { return cutoff_dphi(t); }

DyadicCutoff make_cutoff() { return DyadicCutoff{}; }

double plateau_bump(double t) {
  const double a = std::abs(t);
  if (a <= 0.5 || a >= 1.5) return 0.0;
  if (a < 0.75) return smooth_step((a - 0.5) * 4.0);
  if (a <= 1.25) return 1.0;
  return 1.0 - smooth_step((a - 1.25) * 4.0);
}

double psi_plateau(double z) { return 2.0 * smooth_step((z + 1.0) / 2.0) - 1.0; }

int max_band(Eigen::Index n) {
  require(is_pow2(n) && n >= 8, "grid size must be a power of two >= 8");
  int l = 0;
  for (Eigen::Index m = n / 4; m > 1; m /= 2) ++l;
  return l;
}

}  // namespace rpdo
