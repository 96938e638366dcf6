#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "rpdo/grid.hpp"
#include "rpdo/rng.hpp"

namespace rpdo {

using CMatrixRM =
    Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

struct SymbolTag {
  std::string family;
  std::vector<std::pair<std::string, double>> params;

  double param(const std::string& key, double fallback = 0.0) const;
};

enum class SymbolStructure { Generic, Multiplier, RankOne };

// Tabulated sigma(x, xi) on grid x lattice. Rows are flat x indices,
// columns flat xi indices in FFT order per axis. Tables are immutable
// after construction and safe to share across workers.
struct Symbol {
  int dim = 1;
  Eigen::Index n = 0;
  CMatrixRM values;
  SymbolTag tag;
  SymbolStructure structure = SymbolStructure::Generic;
  CArray x_factor;   // RankOne only
  CArray xi_factor;  // RankOne / Multiplier only

  Eigen::Index rows() const { return values.rows(); }
  Eigen::Index cols() const { return values.cols(); }
};

void check_symbol(const Symbol& s);

// Per-grid-point measurable data steering a gallery family: dilation
// values in the 1D families, unit directions stored as angles in 2D.
struct DirectionField {
  RArray u;
  bool angles = false;
};

DirectionField random_dilation_field(Rng& rng, Eigen::Index count, double lo,
                                     double hi);
DirectionField random_angle_field(Rng& rng, Eigen::Index count);
// Band-limited dilation field (x-modes in |a| <= amax), for rescale runs.
DirectionField cosine_dilation_field(double center, double wobble, long mode,
                                     Eigen::Index count);

Symbol from_function_1d(Eigen::Index n,
                        const std::function<cplx(double, long)>& gen);
Symbol from_function_2d(
    Eigen::Index n,
    const std::function<cplx(double, double, long, long)>& gen);

Symbol multiplier_symbol(int dim, Eigen::Index n,
                         const std::function<cplx(double)>& radial);
Symbol rank_one_symbol(Eigen::Index n, const std::function<cplx(double)>& xf,
                       const std::function<cplx(long)>& xif);

// sigma(2^j x mod 1, 2^{-j} xi) as an exact spectral relabeling:
// x modes shift a -> 2^j a; xi rows stretch (alias-free, even samples
// preserved exactly) or compress (even-sample read). Requires band
// headroom; overflow or non-relabelable content is rejected.
Symbol rescale(const Symbol& s, int j);

// sum_{j=8}^{j_max} j^{-(1/2-delta)} e^{-2 pi i 2^j x} w(2^{-j} xi)
// with w the wide-plateau bump. dim 1; 2^{j_max} <= n/4, j_max >= 8.
Symbol counterexample_symbol(double delta, int j_max, Eigen::Index n);

// f_N = sum_{j=8}^{n_terms} j^{-(1/2+delta)} e^{+2 pi i 2^j x} f0(x);
// the modulation sign is the one that pairs each copy with its band.
GridFn counterexample_testfn(double delta, int n_terms, const GridFn& f0);

// phi(2^m (1 - xi^2/u(x)^2)) phi(xi / 2^{k0}), u in (1/4,4)*2^{k0}.
Symbol carleson_thin_symbol(int m, const DirectionField& u, int k0,
                            Eigen::Index n);

// phi(2^m <u(x), xi/|xi|>) phi(|xi| / 2^{k0}) on the 2D lattice.
Symbol thin_circle_symbol(int m, const DirectionField& u, int k0,
                          Eigen::Index n);

// psi(<u(x), xi/|xi|> / delta) phi(|xi| / 2^{k0}).
Symbol directional_symbol(double delta, const DirectionField& u, int k0,
                          Eigen::Index n);

Symbol product_symbol(const Symbol& a, const Symbol& b);
Symbol exp_symbol(const Symbol& a);

// Band-limited smooth bump on the grid with spectrum in |xi| <= width.
GridFn smooth_profile_fn(Eigen::Index n, long width);

// Large-grid counterexample in packed form: carriers on an equispaced
// frequency comb instead of the dyadic ladder, so sweeps with up to
// ~100 terms fit inside |xi| <= n/4. Disjoint multiplier supports keep
// the band pairing identity exact. Never materializes an n x n table.
struct BandTerm {
  double coeff;
  long carrier;
  double half_width;
};

struct ModulatedBandSymbol {
  Eigen::Index n = 0;
  int first_index = 8;
  std::vector<BandTerm> terms;

  double multiplier(const BandTerm& t, long xi) const;
  CArray row(Eigen::Index i) const;  // sigma(x_i, .) over the lattice
};

ModulatedBandSymbol counterexample_packed(double delta, int n_terms,
                                          Eigen::Index n);
GridFn packed_testfn(const ModulatedBandSymbol& sym, double delta,
                     const GridFn& f0);
GridFn apply_packed(const ModulatedBandSymbol& sym, const GridFn& f);

// Seeded random material for sweeps.
GridFn random_bandlimited(Rng& rng, int dim, Eigen::Index n, int lmin,
                          int lmax);
Symbol random_symbol(Rng& rng, Eigen::Index n, int kind);
constexpr int kRandomSymbolKinds = 4;

}  // namespace rpdo
