#include "rpdo/kernels.hpp"

#include <algorithm>
#include <cmath>

#include "rpdo/cutoff.hpp"
#include "rpdo/parallel.hpp"

namespace rpdo {

namespace {

// Cap-by-annulus multiplier at one lattice point, vector-difference form.
double cap_multiplier(long x1, long x2, double c, double s, int l, int k0) {
  const double rad = std::hypot(static_cast<double>(x1), static_cast<double>(x2));
  if (rad == 0.0) return 0.0;
  const double ann = cutoff_phi(rad / std::ldexp(1.0, k0));
  if (ann == 0.0) return 0.0;
  const double d1 = static_cast<double>(x1) / rad - c;
  const double d2 = static_cast<double>(x2) / rad - s;
  return cutoff_phi(std::ldexp(std::hypot(d1, d2), l)) * ann;
}

double fit_slope(const std::vector<std::pair<double, double>>& pts) {
  if (pts.size() < 2) return 0.0;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const auto& [x, y] : pts) {
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double k = static_cast<double>(pts.size());
  const double denom = k * sxx - sx * sx;
  return denom == 0.0 ? 0.0 : (k * sxy - sx * sy) / denom;
}

}  // namespace

CapKernel cap_kernel(int l, double theta, int k0, Eigen::Index n) {
  require(l >= 0, "cap_kernel: l >= 0");
  require((Eigen::Index(1) << k0) <= n / 16, "cap_kernel: 2^k0 <= n/16");
  require(l <= k0 - 3, "cap_kernel: cap unresolvable, need 2^l <= 2^{k0-3}");
  const double c = std::cos(theta), s = std::sin(theta);
  Spectrum mult;
  mult.dim = 2;
  mult.n = n;
  mult.coeffs = CArray::Zero(n * n);
  const double rmax = std::ldexp(2.0, k0);
  parallel_for(n, [&](Eigen::Index k1) {
    const long x1 = freq_of_index(k1, n);
    if (std::abs(x1) > rmax) return;
    for (Eigen::Index k2 = 0; k2 < n; ++k2) {
      const long x2 = freq_of_index(k2, n);
      if (std::abs(x2) > rmax) continue;
      const double w = cap_multiplier(x1, x2, c, s, l, k0);
      if (w != 0.0) mult.coeffs[k1 * n + k2] = w;
    }
  });
  CapKernel out;
  out.l = l;
  out.theta = theta;
  out.k0 = k0;
  out.samples = inverse_transform(mult);
  return out;
}

DecayCertificate decay_certificate(const CapKernel& kern, int n_exp) {
  check_shape(kern.samples);
  const Eigen::Index n = kern.samples.n;
  const double c = std::cos(kern.theta), s = std::sin(kern.theta);
  int nshells = 0;
  while ((Eigen::Index(1) << (nshells + 1)) <= n / 2) ++nshells;

  std::vector<double> along(nshells, 0.0), trans(nshells, 0.0);
  const double ridge = std::ldexp(1.0, kern.l);
  double peak = 0.0;
  for (Eigen::Index i = 0; i < n * n; ++i) {
    const Eigen::Index i1 = i / n, i2 = i % n;
    const double c1 = static_cast<double>(i1 <= n / 2 ? i1 : i1 - n);
    const double c2 = static_cast<double>(i2 <= n / 2 ? i2 : i2 - n);
    const double dot = c1 * c + c2 * s;
    const double par = std::abs(dot);
    const double sperp = std::hypot(c1 - dot * c, c2 - dot * s);
    const double mag = std::abs(kern.samples.values[i]);
    peak = std::max(peak, mag);
    auto shell_of = [&](double d) {
      if (d < 1.0) return -1;
      const int sh = static_cast<int>(std::floor(std::log2(d)));
      return sh;
    };
    if (sperp <= ridge) {
      const int sh = shell_of(par);
      if (sh >= 0 && sh < nshells) along[sh] = std::max(along[sh], mag);
    }
    if (par <= 2.0) {
      const int sh = shell_of(sperp);
      if (sh >= 0 && sh < nshells) trans[sh] = std::max(trans[sh], mag);
    }
  }

  DecayCertificate cert;
  for (int sh = 0; sh < nshells; ++sh) {
    cert.shells.push_back({sh, 0, along[sh]});
    cert.shells.push_back({sh, 1, trans[sh]});
  }

  const double floor_mag = 1e-14 * std::max(peak, 1e-300);
  auto live = [&](double v) { return v > floor_mag && v > 1e-14; };
  int live_along = 0;
  for (int sh = 1; sh < nshells; ++sh)
    if (live(along[sh])) ++live_along;
  if (live_along < 2) {
    cert.trivial = true;
    cert.pass = true;
    cert.along_exponent = static_cast<double>(n_exp);
    cert.transverse_exponent = static_cast<double>(n_exp);
    cert.transverse_onset = ridge;
    return cert;
  }

  // Along theta: polynomial decay from unit scale.
  std::vector<std::pair<double, double>> pts;
  for (int sh = 0; sh < nshells; ++sh)
    if (live(along[sh])) pts.emplace_back(sh, std::log2(along[sh]));
  cert.along_exponent = -fit_slope(pts);

  // Transverse: envelope is flat out to ~2^l, then decays. Onset = first
  // shell whose envelope drops below half the transverse peak.
  double tpeak = 0.0;
  for (int sh = 0; sh < nshells; ++sh) tpeak = std::max(tpeak, trans[sh]);
  int onset = nshells - 1;
  for (int sh = 0; sh < nshells; ++sh) {
    if (live(trans[sh]) && trans[sh] < 0.5 * tpeak) {
      onset = sh;
      break;
    }
  }
  cert.transverse_onset = std::ldexp(1.0, onset);
  pts.clear();
  for (int sh = std::max(0, onset - 1); sh < nshells; ++sh)
    if (live(trans[sh])) pts.emplace_back(sh, std::log2(trans[sh]));
  cert.transverse_exponent = -fit_slope(pts);

  cert.pass = cert.along_exponent >= static_cast<double>(n_exp) &&
              cert.transverse_exponent >= static_cast<double>(n_exp);
  return cert;
}

L1Table l1_uniformity(const std::vector<int>& l_range,
                      const std::vector<double>& thetas, int k0,
                      Eigen::Index n) {
  require(!l_range.empty() && !thetas.empty(), "l1_uniformity: empty sample set");
  L1Table table;
  table.min = kInf;
  for (int l : l_range) {
    for (double th : thetas) {
      CapKernel k = cap_kernel(l, th, k0, n);
      const double v = lp_norm(k.samples, 1.0);
      table.entries.emplace_back(l, th, v);
      table.max = std::max(table.max, v);
      table.min = std::min(table.min, v);
    }
  }
  table.ratio = table.min > 0.0 ? table.max / table.min : kInf;
  return table;
}

ConePartition cone_partition(int l, Eigen::Index n) {
  require(l >= 0, "cone_partition: l >= 0");
  require((Eigen::Index(1) << l) <= n / 16, "cone_partition: l too large for lattice");
  ConePartition cones;
  cones.l = l;
  cones.n = n;
  const int count = static_cast<int>(std::ceil(2.0 * M_PI * std::ldexp(1.0, l)));
  for (int m = 0; m < count; ++m)
    cones.net.push_back(2.0 * M_PI * m / count);

  const double scale = std::ldexp(2.0, l);  // raw bump: chi(2 * 2^l * |dir - theta_m|)
  auto raw = [scale](double dx, double dy) { return cutoff_chi(scale * std::hypot(dx, dy)); };
  std::vector<double> cs(cones.net.size()), sn(cones.net.size());
  for (size_t m = 0; m < cones.net.size(); ++m) {
    cs[m] = std::cos(cones.net[m]);
    sn[m] = std::sin(cones.net[m]);
  }
  cones.bump = [n, raw, cs, sn](size_t m, Eigen::Index k) {
    const long x1 = freq_of_index(k / n, n), x2 = freq_of_index(k % n, n);
    const double rad = std::hypot(static_cast<double>(x1), static_cast<double>(x2));
    if (rad == 0.0) return 0.0;
    const double d1 = static_cast<double>(x1) / rad;
    const double d2 = static_cast<double>(x2) / rad;
    const double mine = raw(d1 - cs[m], d2 - sn[m]);
    if (mine == 0.0) return 0.0;
    double total = 0.0;
    for (size_t t = 0; t < cs.size(); ++t) total += raw(d1 - cs[t], d2 - sn[t]);
    return mine / total;
  };
  return cones;
}

namespace {

GridFn cone_project(const ConePartition& cones, int k0, size_t m,
                    const Spectrum& gh) {
  const Eigen::Index n = cones.n;
  Spectrum cut;
  cut.dim = 2;
  cut.n = n;
  cut.coeffs = CArray::Zero(n * n);
  const double scale = std::ldexp(1.0, k0);
  for (Eigen::Index k = 0; k < n * n; ++k) {
    if (gh.coeffs[k] == cplx(0.0, 0.0)) continue;
    const double rad = lattice_radius(k, 2, n);
    if (rad == 0.0) continue;
    const double ann = cutoff_phi(rad / scale);
    if (ann == 0.0) continue;
    const double b = cones.bump(m, k);
    if (b != 0.0) cut.coeffs[k] = gh.coeffs[k] * b * ann;
  }
  return inverse_transform(cut);
}

}  // namespace

ConeSumCheck cone_lp_sum_check_p(const ConePartition& cones, int k0,
                                 const std::vector<GridFn>& g_list, double p) {
  require(p >= 1.0 && p <= 2.0, "cone_lp_sum_check_p: 1 <= p <= 2");
  require(g_list.size() == cones.net.size(),
          "cone_lp_sum_check_p: one g per cone");
  GridFn total = make_grid_fn(2, cones.n);
  double rhs_p = 0.0;
  for (size_t m = 0; m < g_list.size(); ++m) {
    Spectrum gh = forward_transform(g_list[m]);
    GridFn piece = cone_project(cones, k0, m, gh);
    total.values += piece.values;
    rhs_p += std::pow(lp_norm(g_list[m], p), p);
  }
  ConeSumCheck out;
  out.lhs = lp_norm(total, p);
  out.rhs = std::pow(rhs_p, 1.0 / p);
  out.ratio = out.rhs > 0.0 ? out.lhs / out.rhs : 0.0;
  return out;
}

ConeSumCheck cone_lp_sum_check_q(const ConePartition& cones, int k0,
                                 const GridFn& g, double q) {
  require(q >= 2.0, "cone_lp_sum_check_q: 2 <= q <= inf");
  Spectrum gh = forward_transform(g);
  double acc = 0.0, worst = 0.0;
  for (size_t m = 0; m < cones.net.size(); ++m) {
    GridFn piece = cone_project(cones, k0, m, gh);
    const double nm = lp_norm(piece, q);
    if (q == kInf) {
      worst = std::max(worst, nm);
    } else {
      acc += std::pow(nm, q);
    }
  }
  ConeSumCheck out;
  out.lhs = q == kInf ? worst : std::pow(acc, 1.0 / q);
  out.rhs = lp_norm(g, q);
  out.ratio = out.rhs > 0.0 ? out.lhs / out.rhs : 0.0;
  return out;
}

}  // namespace rpdo
