#include "rpdo/maximal.hpp"

#include <cmath>

#include "rpdo/cutoff.hpp"
#include "rpdo/lp.hpp"
#include "rpdo/parallel.hpp"

namespace rpdo {

namespace {

int log2_of(Eigen::Index n) {
  int l = 0;
  while ((Eigen::Index(1) << l) < n) ++l;
  return l;
}

}  // namespace

GridFn hl_maximal(const GridFn& f) {
  check_shape(f);
  const Eigen::Index n = f.n;
  const int levels = log2_of(n);
  GridFn out = make_grid_fn(f.dim, n);
  if (f.dim == 1) {
    // avg[j][w] = average of |f| over the aligned window of length n/2^j.
    RArray cur = f.values.abs();
    RArray best = RArray::Constant(n, cur.mean());
    for (int j = levels; j >= 0; --j) {
      const Eigen::Index len = n >> j;
      const Eigen::Index count = n / len;
      RArray avg(count);
      for (Eigen::Index w = 0; w < count; ++w)
        avg[w] = cur.segment(w * len, len).mean();
      for (Eigen::Index i = 0; i < n; ++i)
        best[i] = std::max(best[i], avg[i / len]);
    }
    out.values = best.cast<cplx>();
  } else {
    RArray mag = f.values.abs();
    RArray best = RArray::Constant(n * n, 0.0);
    for (int j = levels; j >= 0; --j) {
      const Eigen::Index len = n >> j;
      const Eigen::Index count = n / len;
      RArray avg(count * count);
      for (Eigen::Index w1 = 0; w1 < count; ++w1)
        for (Eigen::Index w2 = 0; w2 < count; ++w2) {
          double acc = 0.0;
          for (Eigen::Index a = 0; a < len; ++a)
            for (Eigen::Index b = 0; b < len; ++b)
              acc += mag[(w1 * len + a) * n + (w2 * len + b)];
          avg[w1 * count + w2] = acc / static_cast<double>(len * len);
        }
      for (Eigen::Index i = 0; i < n * n; ++i) {
        const Eigen::Index w1 = (i / n) / len, w2 = (i % n) / len;
        best[i] = std::max(best[i], avg[w1 * count + w2]);
      }
    }
    out.values = best.cast<cplx>();
  }
  return out;
}

GridFn band_sup(const GridFn& f) {
  check_shape(f);
  const int lmax = max_band(f.n);
  RArray best = RArray::Zero(f.size());
  for (int l = 0; l <= lmax; ++l) {
    GridFn band = project_band(f, l);
    best = best.max(band.values.abs());
  }
  GridFn out = make_grid_fn(f.dim, f.n);
  out.values = best.cast<cplx>();
  return out;
}

std::vector<double> log_spaced_u(double lo, double hi, int m) {
  require(lo > 0.0 && hi > lo, "log_spaced_u: 0 < lo < hi");
  const double ratio = 1.0 + std::ldexp(1.0, -m - 2) * 0.999;
  std::vector<double> u;
  for (double v = lo; v < hi * ratio; v *= ratio) u.push_back(v);
  return u;
}

GridFn carleson_thin_max(int m, const GridFn& f,
                         const std::vector<double>& u_samples) {
  check_shape(f);
  require(f.dim == 1, "carleson_thin_max is one-dimensional");
  require(m >= 1, "carleson_thin_max: m >= 1");
  require(u_samples.size() >= 2, "carleson_thin_max: need a u grid");
  const double max_ratio = 1.0 + std::ldexp(1.0, -m - 2);
  for (size_t t = 0; t + 1 < u_samples.size(); ++t) {
    require(u_samples[t] > 0.0 && u_samples[t + 1] > u_samples[t],
            "carleson_thin_max: u grid must be increasing and positive");
    if (u_samples[t + 1] / u_samples[t] > max_ratio * (1.0 + 1e-12))
      throw std::invalid_argument("carleson_thin_max: under-resolved u grid");
  }
  const Eigen::Index n = f.n;
  Spectrum fh = forward_transform(f);
  const double pow2m = std::ldexp(1.0, m);
  const size_t count = u_samples.size();
  std::vector<RArray> partial(count);
  parallel_for(static_cast<Eigen::Index>(count), [&](Eigen::Index t) {
    const double u = u_samples[static_cast<size_t>(t)];
    const double u2 = u * u;
    // phi(2^m (1 - xi^2/u^2)) lives on two thin shells around |xi| = u.
    const double lo2 = 1.0 - 2.0 / pow2m, hi2 = 1.0 + 2.0 / pow2m;
    const long lo = lo2 > 0.0 ? static_cast<long>(std::floor(u * std::sqrt(lo2))) : 0;
    const long hi = std::min<long>(static_cast<long>(std::ceil(u * std::sqrt(hi2))),
                                   static_cast<long>(n / 2 - 1));
    Spectrum cut;
    cut.dim = 1;
    cut.n = n;
    cut.coeffs = CArray::Zero(n);
    for (long xi = lo; xi <= hi; ++xi) {
      const double w = cutoff_phi(pow2m * (1.0 - xi * xi / u2));
      if (w == 0.0) continue;
      for (long sgn : {1L, -1L}) {
        if (xi == 0 && sgn < 0) continue;
        const Eigen::Index k = index_of_freq(sgn * xi, n);
        cut.coeffs[k] = fh.coeffs[k] * w;
      }
    }
    partial[static_cast<size_t>(t)] = inverse_transform(cut).values.abs();
  });
  RArray best = RArray::Zero(n);
  for (const auto& p : partial) best = best.max(p);
  GridFn out = make_grid_fn(1, n);
  out.values = best.cast<cplx>();
  return out;
}

GridFn thin_circle_max(int m, const GridFn& f,
                       const std::vector<double>& u_angles, int k0) {
  check_shape(f);
  require(f.dim == 2, "thin_circle_max is two-dimensional");
  require(m >= 0, "thin_circle_max: m >= 0");
  require((Eigen::Index(1) << k0) <= f.n / 4, "thin_circle_max: 2^k0 <= n/4");
  require(u_angles.size() >= 2, "thin_circle_max: need an angle grid");
  // The multiplier is even in u, so a grid covering [0, pi) suffices;
  // consecutive gaps (cyclically mod pi) must resolve the cap width.
  const double max_gap = std::ldexp(1.0, -m - 2);
  for (size_t t = 0; t + 1 < u_angles.size(); ++t) {
    if (u_angles[t + 1] - u_angles[t] > max_gap * (1.0 + 1e-12))
      throw std::invalid_argument("thin_circle_max: under-resolved angle grid");
  }
  const Eigen::Index n = f.n;
  const Eigen::Index side = n * n;
  Spectrum fh = forward_transform(f);
  const double pow2m = std::ldexp(1.0, m);
  const double scale = std::ldexp(1.0, k0);

  // Annulus support of the radial factor: precompute the live indices.
  std::vector<Eigen::Index> live;
  std::vector<double> dir1, dir2, radial;
  for (Eigen::Index k = 0; k < side; ++k) {
    const double x1 = static_cast<double>(freq_of_index(k / n, n));
    const double x2 = static_cast<double>(freq_of_index(k % n, n));
    const double rad = std::hypot(x1, x2);
    if (rad == 0.0) continue;
    const double ann = cutoff_phi(rad / scale);
    if (ann == 0.0 || std::abs(fh.coeffs[k]) == 0.0) continue;
    live.push_back(k);
    dir1.push_back(x1 / rad);
    dir2.push_back(x2 / rad);
    radial.push_back(ann);
  }

  const size_t count = u_angles.size();
  std::vector<RArray> partial(count);
  parallel_for(static_cast<Eigen::Index>(count), [&](Eigen::Index t) {
    const double c = std::cos(u_angles[static_cast<size_t>(t)]);
    const double sn = std::sin(u_angles[static_cast<size_t>(t)]);
    Spectrum cut;
    cut.dim = 2;
    cut.n = n;
    cut.coeffs = CArray::Zero(side);
    for (size_t idx = 0; idx < live.size(); ++idx) {
      const Eigen::Index k = live[idx];
      const double dot = c * dir1[idx] + sn * dir2[idx];
      const double w = cutoff_phi(pow2m * dot) * radial[idx];
      if (w != 0.0) cut.coeffs[k] = fh.coeffs[k] * w;
    }
    partial[static_cast<size_t>(t)] = inverse_transform(cut).values.abs();
  });
  RArray best = RArray::Zero(side);
  for (const auto& p : partial) best = best.max(p);
  GridFn out = make_grid_fn(2, n);
  out.values = best.cast<cplx>();
  return out;
}

DominationResult domination_check(const GridFn& lhs, const GridFn& rhs) {
  check_shape(lhs);
  check_shape(rhs);
  require(lhs.dim == rhs.dim && lhs.n == rhs.n, "domination_check: shape mismatch");
  DominationResult res;
  constexpr double tol = 1e-12;
  for (Eigen::Index i = 0; i < lhs.size(); ++i) {
    const double a = std::abs(lhs.values[i]);
    const double b = std::abs(rhs.values[i]);
    if (b > tol) {
      res.constant = std::max(res.constant, a / b);
    } else if (a > tol) {
      ++res.flagged;
    }
  }
  return res;
}

}  // namespace rpdo
