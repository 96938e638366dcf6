#pragma once

#include <optional>
#include <vector>

#include "rpdo/sphere.hpp"
#include "rpdo/symbols.hpp"

namespace rpdo {

// One dyadic-band line of a bound quantity; serialized as CSV columns
// l, weight, sup_x_norm, term.
struct BandTableRow {
  int l = 0;
  double weight = 0.0;
  double sup_x_norm = 0.0;
  double term = 0.0;
};

struct BandQuantity {
  double value = 0.0;
  std::vector<BandTableRow> table;
};

// Streaming access to sigma rows over the xi lattice; lets the bound
// evaluators run on tabulated symbols and on structured large-grid
// symbols alike without materializing n x n tables.
struct RowSource {
  int dim = 1;
  Eigen::Index n = 0;
  Eigen::Index nrows = 0;
  std::function<CArray(Eigen::Index)> row;
};

RowSource rows_of(const Symbol& s);
RowSource rows_of(const ModulatedBandSymbol& s, Eigen::Index stride = 1);

// Generic scale-invariant band sum
//   sum_l 2^{l dim s} sup_x || P_l^xi sigma(x,.) ||_{lq(counting)}.
BandQuantity band_quantity(const RowSource& rows, double s, double q);

// s = 1/2, q = 2 (the L^2 -> L^2 bound quantity).
double theorem1_quantity(const Symbol& s);
BandQuantity theorem1_quantity_detail(const RowSource& rows);

// s = 1, q = 1 (the weak (1,1) quantity).
double weak11_quantity(const Symbol& s);
BandQuantity weak11_quantity_detail(const RowSource& rows);

// s = 1/q, lq norms, 1 < q < 2 interpolating the two above.
double lq_quantity(const Symbol& s, double q);

// Per-band Bernstein ratios ||P_l row||_2 / (2^{l dim / 2} ||P_l row||_1),
// sup over rows; the lattice-normalization constant is absorbed by the
// recorded baseline.
std::vector<double> band_bernstein_ratios(const RowSource& rows);

// sup over grid and |xi| >= 2 of |xi|^{|alpha|} |D^alpha sigma| per total
// derivative order 0..alpha_max (centered finite differences, alpha_max <= 3).
std::vector<double> hormander_seminorm(const Symbol& s, int alpha_max);

// sum_l 2^{l (n-1)/p'} sup_x ||P_l^theta q(x,.)||_{L^{p'}(S^1)}, p >= 2.
double homogeneous_quantity(const SphereSymbol& q, double p);
BandQuantity homogeneous_quantity_detail(const SphereSymbol& q, double p);

// Radial profiles rho(x, r) tabulated on the nonnegative lattice radii.
struct RadialProfile {
  Eigen::Index nx = 0;
  Eigen::Index nr = 0;  // power of two
  CMatrixRM values;     // nx rows, nr radii
};

RadialProfile thin_annulus_profile(int m, int k0, Eigen::Index nx,
                                   Eigen::Index nr);

// sum_l 2^{l/2} sup_x ||P_l rho(x,.)||_2 with bands taken on the even
// extension of the radial profile.
double radial_quantity(const RadialProfile& rho);
BandQuantity radial_quantity_detail(const RadialProfile& rho);

struct AlgebraCheck {
  double lhs = 0.0;
  double rhs = 0.0;
  double ratio = 0.0;
};

// lhs = B2(sigma1 sigma2), rhs = B2(sigma1) B2(sigma2).
AlgebraCheck algebra_check(const Symbol& a, const Symbol& b);

// Homogeneous H^{1/2}-type seminorm of a xi row: (sum_b |b| |d_b|^2)^{1/2}
// over the conjugate lattice. Dilation invariant, so disjoint bumps
// contribute independently of their width or position.
double row_h_half_seminorm(const CArray& row, int dim, Eigen::Index n);

// Everything the report files carry for one symbol.
struct BoundReport {
  double b2 = 0.0;
  double b1 = 0.0;
  double bq = 0.0;
  double bq_exponent = 0.0;
  std::vector<double> hormander;
  std::optional<double> homogeneous;
  std::optional<double> radial;
  std::optional<double> empirical_norm;
  std::vector<BandTableRow> b2_table;
  std::vector<BandTableRow> b1_table;
};

BoundReport make_bound_report(const Symbol& s, double q_exponent,
                              std::optional<double> empirical_norm);

}  // namespace rpdo
