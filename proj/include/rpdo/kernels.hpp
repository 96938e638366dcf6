#pragma once

#include <vector>

#include "rpdo/grid.hpp"

namespace rpdo {

// Inverse transform of the cap-by-annulus multiplier
// phi(2^l |xi/|xi| - theta|) phi(|xi| / 2^{k0}) on the 2D lattice
// (vector difference, not angle difference).
struct CapKernel {
  int l = 0;
  double theta = 0.0;
  int k0 = 0;
  GridFn samples;  // dim 2
};

CapKernel cap_kernel(int l, double theta, int k0, Eigen::Index n);

struct ShellEntry {
  int shell = 0;       // dyadic distance shell, lattice units
  int axis = 0;        // 0 = along theta, 1 = transverse
  double max_abs = 0;  // envelope max |K| over the shell
};

struct DecayCertificate {
  double along_exponent = 0.0;
  double transverse_exponent = 0.0;
  double transverse_onset = 0.0;  // lattice units; ~2^l expected
  bool pass = false;
  bool trivial = false;  // kernel below 1e-14 past the first shell
  std::vector<ShellEntry> shells;
};

// Fits dyadic shell envelopes along theta and theta-perp separately and
// checks polynomial decay of order >= n_exp on both axes, with the
// transverse onset at distance ~2^l.
DecayCertificate decay_certificate(const CapKernel& k, int n_exp);

struct L1Table {
  std::vector<std::tuple<int, double, double>> entries;  // (l, theta, ||K||_1)
  double max = 0.0;
  double min = 0.0;
  double ratio = 0.0;
};

L1Table l1_uniformity(const std::vector<int>& l_range,
                      const std::vector<double>& thetas, int k0,
                      Eigen::Index n);

// Normalized angular bumps on a 2^{-l} net of directions: exact
// partition of unity on every nonzero lattice point, overlap <= 3.
struct ConePartition {
  int l = 0;
  std::vector<double> net;  // direction angles theta_m
  // bump(m, k-flat-index) evaluated lazily via direction cosines
  std::function<double(size_t, Eigen::Index)> bump;
  Eigen::Index n = 0;
};

ConePartition cone_partition(int l, Eigen::Index n);

struct ConeSumCheck {
  double ratio = 0.0;
  double lhs = 0.0;
  double rhs = 0.0;
};

// p direction (1 <= p <= 2): || sum_m P_m g_m ||_p / (sum_m ||g_m||_p^p)^{1/p}
// on the supplied per-cone functions.
ConeSumCheck cone_lp_sum_check_p(const ConePartition& cones, int k0,
                                 const std::vector<GridFn>& g_list, double p);

// q direction (2 <= q <= inf): (sum_m ||P_m g||_q^q)^{1/q} / ||g||_q.
ConeSumCheck cone_lp_sum_check_q(const ConePartition& cones, int k0,
                                 const GridFn& g, double q);

}  // namespace rpdo
