#pragma once

#include <cmath>
#include <stdexcept>

#include <Eigen/Core>

namespace rpdo {

// Smooth step built from b(t) = exp(-1/t): 0 on (-inf,0], 1 on [1,inf).
double smooth_step(double t);
double smooth_step_deriv(double t);

// Radial cutoff pair generating every dyadic band in the project.
//   chi(t) = 1 for |t| <= 1, 0 for |t| >= 2
//   phi(t) = chi(t) - chi(2t), supported in 1/2 <= |t| <= 2
// Closed-form derivatives are provided for the finite-difference oracles.
struct DyadicCutoff {
  double chi(double t) const;
  double phi(double t) const;
  double dchi(double t) const;
  double dphi(double t) const;
};

DyadicCutoff make_cutoff();

double cutoff_chi(double t);
double cutoff_phi(double t);
double cutoff_dchi(double t);
double cutoff_dphi(double t);

// Wide-plateau bump: 1 on 3/4 <= |t| <= 5/4, 0 outside 1/2 <= |t| <= 3/2.
double plateau_bump(double t);

// Odd plateau profile: -1 on (-inf,-1], +1 on [1,inf), smooth between.
double psi_plateau(double z);

// Highest dyadic band resolvable on an n-point axis: log2(n/4).
// Band l >= 1 covers lattice radii in [2^{l-1}, 2^{l+1}]; l = 0 is the
// low block with multiplier chi(|xi|).
int max_band(Eigen::Index n);

inline bool is_pow2(Eigen::Index n) { return n > 0 && (n & (n - 1)) == 0; }

inline void require(bool cond, const char* msg) {
  if (!cond) throw std::invalid_argument(msg);
}

}  // namespace rpdo
