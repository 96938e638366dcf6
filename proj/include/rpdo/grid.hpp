#pragma once

#include <complex>
#include <limits>

#include <Eigen/Core>

#include "rpdo/cutoff.hpp"

namespace rpdo {

using cplx = std::complex<double>;
using CArray = Eigen::ArrayXcd;
using RArray = Eigen::ArrayXd;

constexpr double kInf = std::numeric_limits<double>::infinity();

// Complex function sampled on the uniform torus grid [0,1)^dim,
// x_i = i/n per axis. dim 2 stores row-major: index = i1*n + i2.
struct GridFn {
  int dim = 1;
  Eigen::Index n = 0;
  CArray values;

  Eigen::Index size() const { return values.size(); }
};

// Fourier coefficients on the integer lattice {-n/2..n/2-1}^dim.
// Storage is FFT order per axis: slot k holds frequency k for k < n/2,
// k - n otherwise.
struct Spectrum {
  int dim = 1;
  Eigen::Index n = 0;
  CArray coeffs;

  Eigen::Index size() const { return coeffs.size(); }
};

inline long freq_of_index(Eigen::Index k, Eigen::Index n) {
  return k < n / 2 ? static_cast<long>(k) : static_cast<long>(k - n);
}

inline Eigen::Index index_of_freq(long xi, Eigen::Index n) {
  return xi >= 0 ? static_cast<Eigen::Index>(xi)
                 : static_cast<Eigen::Index>(xi + static_cast<long>(n));
}

// |xi| for the lattice point behind flat index k (radial in dim 2).
double lattice_radius(Eigen::Index k, int dim, Eigen::Index n);

GridFn make_grid_fn(int dim, Eigen::Index n);
void check_shape(const GridFn& f);

// coeffs[xi] = n^{-dim} sum_i f(x_i) e^{-2 pi i x_i . xi}. With this
// normalization grid sums stand in for integrals and band-limited
// content transforms exactly.
Spectrum forward_transform(const GridFn& f);
GridFn inverse_transform(const Spectrum& s);

// ((1/n^dim) sum |f|^p)^{1/p}; max for p = inf. Rejects p < 1.
double lp_norm(const GridFn& f, double p);

// (1/n^dim) sum f conj(g). Rejects mismatched shapes.
cplx inner(const GridFn& f, const GridFn& g);

double spectrum_l2(const Spectrum& s);

// FFT helpers shared by the symbol machinery. All are unnormalized:
// forward is sum f e^{-2 pi i jk/n}, backward is sum f e^{+2 pi i jk/n}.
void fft_rows(cplx* data, Eigen::Index nrows, Eigen::Index rowlen, bool forward);
CArray fft_1d(const CArray& in, bool forward);
CArray fft_2d(const CArray& in, Eigen::Index n, bool forward);

}  // namespace rpdo
