#pragma once

#include "rpdo/grid.hpp"

namespace rpdo {

// Band multiplier value at lattice radius r: chi(r) for l = 0 (low
// block), phi(2^{-l} r) for l >= 1.
double band_multiplier(double r, int l);

// Frequency band-pass of a grid function. l = 0 is the low block; the
// low block plus bands 1..max_band(n) reconstruct anything supported in
// |xi| <= n/4. Out-of-range l is rejected.
GridFn project_band(const GridFn& f, int l);

// Band-pass of a length n^dim row tabulated over the xi lattice, acting
// in the variable conjugate to xi (the xi lattice is treated as an
// n-periodic torus; conjugate frequencies are integers in FFT order).
CArray xi_band_project(const CArray& row, int dim, Eigen::Index n, int l);

// Per-band conjugate-space energies of a row, l = 0..max_band(n):
// counting-measure lq norms of xi_band_project.
double row_counting_norm(const CArray& row, double q);

// Inhomogeneous Besov-type quantity
//   ( sum_{l=0}^{lmax} 2^{lsq} ||P_l f||_{L^p}^q )^{1/q}
// with the l = 0 term the low block; q = inf takes the sup.
double besov_quantity(const GridFn& f, double s, double p, double q);

// ||P_l f||_q / (2^{l n (1/p - 1/q)} ||P_l f||_p); 0 when P_l f = 0.
// Requires 1 <= p < q <= inf.
double bernstein_ratio(const GridFn& f, int l, double p, double q);

}  // namespace rpdo
