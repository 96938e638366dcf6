#pragma once

#include <vector>

#include "rpdo/grid.hpp"

namespace rpdo {

// Dyadic-window Hardy-Littlewood maximal function: max over the aligned
// dyadic windows (side 2^{-j} of the torus, j = 0..log2 n) containing
// each point of the window average of |f|. Comparable to the uncentered
// maximal function within a dimensional factor.
GridFn hl_maximal(const GridFn& f);

// Pointwise sup over the low block and all dyadic bands of |P_l f|.
GridFn band_sup(const GridFn& f);

// Log-spaced dilation grid with ratio step <= 1 + 2^{-m-2}.
std::vector<double> log_spaced_u(double lo, double hi, int m);

// sup over sampled u > 0 of |multiplier pass of phi(2^m (1 - xi^2/u^2))|.
// Under-resolved u grids (ratio step > 1 + 2^{-m-2}) are rejected.
GridFn carleson_thin_max(int m, const GridFn& f,
                         const std::vector<double>& u_samples);

// sup over sampled directions of |multiplier pass of
// phi(2^m <u, xi/|xi|>) phi(|xi| / 2^{k0})| on the 2D lattice.
// Requires consecutive angle gaps <= 2^{-m-2}.
GridFn thin_circle_max(int m, const GridFn& f,
                       const std::vector<double>& u_angles, int k0);

struct DominationResult {
  double constant = 0.0;     // min C with lhs <= C * rhs pointwise
  Eigen::Index flagged = 0;  // points with rhs ~ 0 but lhs above tolerance
};

DominationResult domination_check(const GridFn& lhs, const GridFn& rhs);

struct MaximalReport {
  int m = 0;
  double measured_c = 0.0;
  Eigen::Index u_grid_size = 0;
};

}  // namespace rpdo
