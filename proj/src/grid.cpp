#include "rpdo/grid.hpp"

#include <unsupported/Eigen/FFT>

#include "rpdo/parallel.hpp"

namespace rpdo {

namespace {

Eigen::FFT<double>& local_fft() {
  thread_local Eigen::FFT<double> fft;
  return fft;
}

Eigen::Index pow_dim(Eigen::Index n, int dim) { return dim == 1 ? n : n * n; }

}  // namespace

double lattice_radius(Eigen::Index k, int dim, Eigen::Index n) {
  if (dim == 1) return std::abs(static_cast<double>(freq_of_index(k, n)));
  const double a = static_cast<double>(freq_of_index(k / n, n));
  const double b = static_cast<double>(freq_of_index(k % n, n));
  return std::hypot(a, b);
}

GridFn make_grid_fn(int dim, Eigen::Index n) {
  require(dim == 1 || dim == 2, "dim must be 1 or 2");
  require(is_pow2(n), "samples per axis must be a power of two");
  GridFn f;
  f.dim = dim;
  f.n = n;
  f.values = CArray::Zero(pow_dim(n, dim));
  return f;
}

void check_shape(const GridFn& f) {
  require(f.dim == 1 || f.dim == 2, "dim must be 1 or 2");
  require(is_pow2(f.n), "samples per axis must be a power of two");
  require(f.values.size() == pow_dim(f.n, f.dim), "value count != n^dim");
}

CArray fft_1d(const CArray& in, bool forward) {
  const Eigen::Index n = in.size();
  std::vector<cplx> src(in.data(), in.data() + n), dst(n);
  if (forward) {
    local_fft().fwd(dst, src);
  } else {
    local_fft().inv(dst, src);
    CArray out = Eigen::Map<const CArray>(dst.data(), n);
    out *= static_cast<double>(n);
    return out;
  }
  return Eigen::Map<const CArray>(dst.data(), n);
}

void fft_rows(cplx* data, Eigen::Index nrows, Eigen::Index rowlen, bool forward) {
  parallel_for(nrows, [&](Eigen::Index r) {
    std::vector<cplx> src(data + r * rowlen, data + (r + 1) * rowlen);
    std::vector<cplx> dst(static_cast<size_t>(rowlen));
    if (forward) {
      local_fft().fwd(dst, src);
      std::copy(dst.begin(), dst.end(), data + r * rowlen);
    } else {
      local_fft().inv(dst, src);
      const double scale = static_cast<double>(rowlen);
      for (Eigen::Index k = 0; k < rowlen; ++k)
        data[r * rowlen + k] = dst[static_cast<size_t>(k)] * scale;
    }
  });
}

CArray fft_2d(const CArray& in, Eigen::Index n, bool forward) {
  CArray data = in;
  using RM = Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
  fft_rows(data.data(), n, n, forward);
  Eigen::Map<RM>(data.data(), n, n).transposeInPlace();
  fft_rows(data.data(), n, n, forward);
  Eigen::Map<RM>(data.data(), n, n).transposeInPlace();
  return data;
}

Spectrum forward_transform(const GridFn& f) {
  check_shape(f);
  Spectrum s;
  s.dim = f.dim;
  s.n = f.n;
  if (f.dim == 1) {
    s.coeffs = fft_1d(f.values, true) / static_cast<double>(f.n);
  } else {
    s.coeffs = fft_2d(f.values, f.n, true) / static_cast<double>(f.n * f.n);
  }
  return s;
}

GridFn inverse_transform(const Spectrum& s) {
  require(s.dim == 1 || s.dim == 2, "dim must be 1 or 2");
  require(is_pow2(s.n), "samples per axis must be a power of two");
  require(s.coeffs.size() == pow_dim(s.n, s.dim), "coeff count != n^dim");
  GridFn f;
  f.dim = s.dim;
  f.n = s.n;
  f.values = s.dim == 1 ? fft_1d(s.coeffs, false) : fft_2d(s.coeffs, s.n, false);
  return f;
}

double lp_norm(const GridFn& f, double p) {
  check_shape(f);
  require(p >= 1.0, "lp_norm requires p >= 1");
  if (p == kInf) return f.values.abs().maxCoeff();
  const double cell = 1.0 / static_cast<double>(f.values.size());
  if (p == 1.0) return f.values.abs().sum() * cell;
  if (p == 2.0) return std::sqrt(f.values.abs2().sum() * cell);
  return std::pow(f.values.abs().pow(p).sum() * cell, 1.0 / p);
}

cplx inner(const GridFn& f, const GridFn& g) {
  check_shape(f);
  check_shape(g);
  require(f.dim == g.dim && f.n == g.n, "inner: mismatched shapes");
  const double cell = 1.0 / static_cast<double>(f.values.size());
  return (f.values * g.values.conjugate()).sum() * cell;
}

double spectrum_l2(const Spectrum& s) { return std::sqrt(s.coeffs.abs2().sum()); }

}  // namespace rpdo
