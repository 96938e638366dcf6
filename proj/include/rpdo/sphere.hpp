#pragma once

#include "rpdo/grid.hpp"
#include "rpdo/symbols.hpp"

namespace rpdo {

// Homogeneous-of-degree-zero data: q[x, theta] with theta_j = 2 pi j / m
// on the unit circle, one row per 2D grid point. On S^1 the harmonics
// are plain circular tones; the eigenvalue index is |k|.
struct SphereSymbol {
  Eigen::Index nx = 0;  // spatial samples per axis (dim 2 grid)
  Eigen::Index m = 0;   // angular samples, power of two
  CMatrixRM values;     // (nx*nx) x m

  Eigen::Index rows() const { return values.rows(); }
};

void check_sphere_symbol(const SphereSymbol& q);

SphereSymbol sphere_from_function(
    Eigen::Index nx, Eigen::Index m,
    const std::function<cplx(double, double, double)>& gen);  // (x1,x2,theta)

// psi(<u(x), theta>/delta) rows; the angular counterpart of
// directional_symbol before lifting to the xi lattice.
SphereSymbol directional_sphere_symbol(double delta, const DirectionField& u,
                                       Eigen::Index nx, Eigen::Index m);

// Circular band-pass of one row: tone k weighted by chi(|k|) for
// band = 0, phi(2^{-band} |k|) otherwise.
CArray circular_band_row(const CArray& row, int band);
SphereSymbol circular_band_project(const SphereSymbol& q, int band);

// Trapezoid L^p norm on the circle; p = inf takes the max.
double sphere_lp_norm(const CArray& row, double p);

// L^1 norm plus L^1 norm of the centered-difference theta derivative.
double w11_norm(const CArray& row);

// ||P_m q||_{q_exp} / (2^{m (1/p - 1/q_exp)} ||P_m q||_p), 1 < p < q_exp < inf.
double sphere_bernstein_ratio(const CArray& row, int band, double p,
                              double q_exp);

// sigma(x, xi) = q(x, angle(xi)) phi(|xi| / 2^{k0}) by nearest-angle
// lookup; requires m >= 8 * 2^{k0} so angular aliasing stays below the
// lattice discretization error.
Symbol lift_to_symbol(const SphereSymbol& q, int k0, Eigen::Index n);

}  // namespace rpdo
