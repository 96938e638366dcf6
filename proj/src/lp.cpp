#include "rpdo/lp.hpp"

namespace rpdo {

double band_multiplier(double r, int l) {
  if (l == 0) return cutoff_chi(r);
  return cutoff_phi(std::ldexp(r, -l));
}

GridFn project_band(const GridFn& f, int l) {
  check_shape(f);
  require(l >= 0 && l <= max_band(f.n), "band index out of range");
  Spectrum s = forward_transform(f);
  for (Eigen::Index k = 0; k < s.coeffs.size(); ++k)
    s.coeffs[k] *= band_multiplier(lattice_radius(k, f.dim, f.n), l);
  return inverse_transform(s);
}

CArray xi_band_project(const CArray& row, int dim, Eigen::Index n, int l) {
  require(l >= 0 && l <= max_band(n), "band index out of range");
  CArray hat = dim == 1 ? fft_1d(row, true) : fft_2d(row, n, true);
  for (Eigen::Index k = 0; k < hat.size(); ++k)
    hat[k] *= band_multiplier(lattice_radius(k, dim, n), l);
  CArray out = dim == 1 ? fft_1d(hat, false) : fft_2d(hat, n, false);
  out /= static_cast<double>(hat.size());
  return out;
}

double row_counting_norm(const CArray& row, double q) {
  if (q == kInf) return row.abs().maxCoeff();
  if (q == 1.0) return row.abs().sum();
  if (q == 2.0) return std::sqrt(row.abs2().sum());
  return std::pow(row.abs().pow(q).sum(), 1.0 / q);
}

double besov_quantity(const GridFn& f, double s, double p, double q) {
  check_shape(f);
  require(p >= 1.0 && q >= 1.0, "besov_quantity requires p, q >= 1");
  const int lmax = max_band(f.n);
  double sum = 0.0, sup = 0.0;
  for (int l = 0; l <= lmax; ++l) {
    const double term = std::pow(2.0, l * s) * lp_norm(project_band(f, l), p);
    if (q == kInf) {
      sup = std::max(sup, term);
    } else {
      sum += std::pow(term, q);
    }
  }
  return q == kInf ? sup : std::pow(sum, 1.0 / q);
}

double bernstein_ratio(const GridFn& f, int l, double p, double q) {
  check_shape(f);
  require(p >= 1.0 && q > p, "bernstein_ratio requires 1 <= p < q <= inf");
  GridFn band = project_band(f, l);
  const double denom = lp_norm(band, p);
  if (denom == 0.0) return 0.0;
  const double inv_q = q == kInf ? 0.0 : 1.0 / q;
  const double weight = std::pow(2.0, l * f.dim * (1.0 / p - inv_q));
  return lp_norm(band, q) / (weight * denom);
}

}  // namespace rpdo
