#include "rpdo/sphere.hpp"

#include "rpdo/cutoff.hpp"
#include "rpdo/lp.hpp"
#include "rpdo/parallel.hpp"

namespace rpdo {

void check_sphere_symbol(const SphereSymbol& q) {
  require(is_pow2(q.m) && q.m >= 8, "sphere symbol: m power of two >= 8");
  require(q.nx >= 1, "sphere symbol: nx >= 1");
  require(q.values.rows() == q.nx * q.nx && q.values.cols() == q.m,
          "sphere symbol: table shape != nx^2 x m");
  require(q.values.allFinite(), "sphere symbol: values must be finite");
}

SphereSymbol sphere_from_function(
    Eigen::Index nx, Eigen::Index m,
    const std::function<cplx(double, double, double)>& gen) {
  SphereSymbol q;
  q.nx = nx;
  q.m = m;
  q.values.resize(nx * nx, m);
  parallel_for(nx * nx, [&](Eigen::Index r) {
    const double x1 = static_cast<double>(r / nx) / static_cast<double>(nx);
    const double x2 = static_cast<double>(r % nx) / static_cast<double>(nx);
    for (Eigen::Index j = 0; j < m; ++j)
      q.values(r, j) = gen(x1, x2, 2.0 * M_PI * j / static_cast<double>(m));
  });
  check_sphere_symbol(q);
  return q;
}

SphereSymbol directional_sphere_symbol(double delta, const DirectionField& u,
                                       Eigen::Index nx, Eigen::Index m) {
  require(delta > 0.0, "directional sphere symbol: delta > 0");
  require(u.angles && u.u.size() == nx * nx,
          "directional sphere symbol: angle field of size nx^2");
  SphereSymbol q;
  q.nx = nx;
  q.m = m;
  q.values.resize(nx * nx, m);
  parallel_for(nx * nx, [&](Eigen::Index r) {
    const double c = std::cos(u.u[r]), s = std::sin(u.u[r]);
    for (Eigen::Index j = 0; j < m; ++j) {
      const double theta = 2.0 * M_PI * j / static_cast<double>(m);
      const double dot = c * std::cos(theta) + s * std::sin(theta);
      q.values(r, j) = psi_plateau(dot / delta);
    }
  });
  check_sphere_symbol(q);
  return q;
}

CArray circular_band_row(const CArray& row, int band) {
  const Eigen::Index m = row.size();
  require(band >= 0 && band <= max_band(m), "circular band out of range");
  CArray hat = fft_1d(row, true);
  for (Eigen::Index k = 0; k < m; ++k) {
    const double r = std::abs(static_cast<double>(freq_of_index(k, m)));
    hat[k] *= band_multiplier(r, band);
  }
  CArray out = fft_1d(hat, false);
  out /= static_cast<double>(m);
  return out;
}

SphereSymbol circular_band_project(const SphereSymbol& q, int band) {
  check_sphere_symbol(q);
  require(band >= 0 && band <= max_band(q.m), "circular band out of range");
  SphereSymbol out = q;
  parallel_for(q.rows(), [&](Eigen::Index r) {
    CArray row = q.values.row(r).transpose().array();
    out.values.row(r) = circular_band_row(row, band).matrix().transpose();
  });
  return out;
}

double sphere_lp_norm(const CArray& row, double p) {
  require(p >= 1.0, "sphere_lp_norm requires p >= 1");
  if (p == kInf) return row.abs().maxCoeff();
  const double dtheta = 2.0 * M_PI / static_cast<double>(row.size());
  if (p == 1.0) return row.abs().sum() * dtheta;
  if (p == 2.0) return std::sqrt(row.abs2().sum() * dtheta);
  return std::pow(row.abs().pow(p).sum() * dtheta, 1.0 / p);
}

double w11_norm(const CArray& row) {
  const Eigen::Index m = row.size();
  const double dtheta = 2.0 * M_PI / static_cast<double>(m);
  CArray deriv(m);
  for (Eigen::Index j = 0; j < m; ++j) {
    const cplx hi = row[(j + 1) % m], lo = row[(j + m - 1) % m];
    deriv[j] = (hi - lo) / (2.0 * dtheta);
  }
  return sphere_lp_norm(row, 1.0) + sphere_lp_norm(deriv, 1.0);
}

double sphere_bernstein_ratio(const CArray& row, int band, double p,
                              double q_exp) {
  require(p > 1.0 && q_exp > p && q_exp != kInf,
          "sphere bernstein: 1 < p < q < inf");
  CArray banded = circular_band_row(row, band);
  const double denom = sphere_lp_norm(banded, p);
  if (denom == 0.0) return 0.0;
  const double weight = std::pow(2.0, band * (1.0 / p - 1.0 / q_exp));
  return sphere_lp_norm(banded, q_exp) / (weight * denom);
}

Symbol lift_to_symbol(const SphereSymbol& q, int k0, Eigen::Index n) {
  check_sphere_symbol(q);
  require(is_pow2(n) && n >= 16 && n <= 64, "lift: 2D table guard (16 <= n <= 64)");
  require((Eigen::Index(1) << k0) <= n / 16, "lift: 2^k0 <= n/16");
  require(q.m >= 8 * (Eigen::Index(1) << k0), "lift: m too small for k0");
  require(q.nx == n, "lift: sphere x-grid must match the lattice grid");
  Symbol s;
  s.dim = 2;
  s.n = n;
  const Eigen::Index side = n * n;
  s.values.resize(side, side);
  const double scale = std::ldexp(1.0, k0);
  const double mm = static_cast<double>(q.m);
  parallel_for(side, [&](Eigen::Index r) {
    for (Eigen::Index k = 0; k < side; ++k) {
      const double x1 = static_cast<double>(freq_of_index(k / n, n));
      const double x2 = static_cast<double>(freq_of_index(k % n, n));
      const double rad = std::hypot(x1, x2);
      if (rad == 0.0) {
        s.values(r, k) = 0.0;
        continue;
      }
      double frac = std::atan2(x2, x1) / (2.0 * M_PI);
      if (frac < 0.0) frac += 1.0;
      const Eigen::Index j =
          static_cast<Eigen::Index>(std::lround(frac * mm)) % q.m;
      s.values(r, k) = q.values(r, j) * cutoff_phi(rad / scale);
    }
  });
  s.tag.family = "lifted_sphere";
  s.tag.params = {{"k0", static_cast<double>(k0)}};
  return s;
}

}  // namespace rpdo
