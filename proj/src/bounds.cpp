#include "rpdo/bounds.hpp"

#include <cmath>

#include "rpdo/cutoff.hpp"
#include "rpdo/lp.hpp"
#include "rpdo/parallel.hpp"

namespace rpdo {

namespace {

using RMatrixXd =
    Eigen::Array<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

// Per-band counting-measure norms of one row, hat computed once.
void band_norms_of_row(const CArray& row, int dim, Eigen::Index n, double q,
                       double* out, int lmax) {
  CArray hat = dim == 1 ? fft_1d(row, true) : fft_2d(row, n, true);
  const Eigen::Index size = hat.size();
  CArray filt(size);
  for (int l = 0; l <= lmax; ++l) {
    for (Eigen::Index k = 0; k < size; ++k)
      filt[k] = hat[k] * band_multiplier(lattice_radius(k, dim, n), l);
    CArray band = dim == 1 ? fft_1d(filt, false) : fft_2d(filt, n, false);
    band /= static_cast<double>(size);
    out[l] = row_counting_norm(band, q);
  }
}

BandQuantity assemble(const std::vector<double>& sup_norms, double s, int dim) {
  BandQuantity out;
  out.table.reserve(sup_norms.size());
  for (size_t l = 0; l < sup_norms.size(); ++l) {
    BandTableRow rowt;
    rowt.l = static_cast<int>(l);
    rowt.weight = std::pow(2.0, static_cast<double>(l) * dim * s);
    rowt.sup_x_norm = sup_norms[l];
    rowt.term = rowt.weight * rowt.sup_x_norm;
    out.value += rowt.term;
    out.table.push_back(rowt);
  }
  return out;
}

}  // namespace

RowSource rows_of(const Symbol& s) {
  check_symbol(s);
  RowSource src;
  src.dim = s.dim;
  src.n = s.n;
  src.nrows = s.rows();
  src.row = [&s](Eigen::Index i) -> CArray {
    return s.values.row(i).transpose().array();
  };
  return src;
}

RowSource rows_of(const ModulatedBandSymbol& s, Eigen::Index stride) {
  require(stride >= 1, "rows_of: stride >= 1");
  RowSource src;
  src.dim = 1;
  src.n = s.n;
  src.nrows = s.n / stride;
  src.row = [&s, stride](Eigen::Index i) -> CArray { return s.row(i * stride); };
  return src;
}

BandQuantity band_quantity(const RowSource& rows, double s, double q) {
  const int lmax = max_band(rows.n);
  RMatrixXd norms(rows.nrows, lmax + 1);
  parallel_for(rows.nrows, [&](Eigen::Index i) {
    CArray row = rows.row(i);
    band_norms_of_row(row, rows.dim, rows.n, q, norms.row(i).data(), lmax);
  });
  std::vector<double> sup(lmax + 1, 0.0);
  for (int l = 0; l <= lmax; ++l) sup[static_cast<size_t>(l)] = norms.col(l).maxCoeff();
  return assemble(sup, s, rows.dim);
}

double theorem1_quantity(const Symbol& s) {
  return band_quantity(rows_of(s), 0.5, 2.0).value;
}

BandQuantity theorem1_quantity_detail(const RowSource& rows) {
  return band_quantity(rows, 0.5, 2.0);
}

double weak11_quantity(const Symbol& s) {
  return band_quantity(rows_of(s), 1.0, 1.0).value;
}

BandQuantity weak11_quantity_detail(const RowSource& rows) {
  return band_quantity(rows, 1.0, 1.0);
}

double lq_quantity(const Symbol& s, double q) {
  require(q > 1.0 && q < 2.0, "lq_quantity: q in (1, 2)");
  return band_quantity(rows_of(s), 1.0 / q, q).value;
}

std::vector<double> band_bernstein_ratios(const RowSource& rows) {
  const int lmax = max_band(rows.n);
  RMatrixXd l1(rows.nrows, lmax + 1), l2(rows.nrows, lmax + 1);
  parallel_for(rows.nrows, [&](Eigen::Index i) {
    CArray row = rows.row(i);
    band_norms_of_row(row, rows.dim, rows.n, 1.0, l1.row(i).data(), lmax);
    band_norms_of_row(row, rows.dim, rows.n, 2.0, l2.row(i).data(), lmax);
  });
  std::vector<double> out(static_cast<size_t>(lmax) + 1, 0.0);
  for (int l = 0; l <= lmax; ++l) {
    const double weight = std::pow(2.0, l * rows.dim * 0.5);
    double best = 0.0;
    for (Eigen::Index i = 0; i < rows.nrows; ++i)
      if (l1(i, l) > 0.0) best = std::max(best, l2(i, l) / (weight * l1(i, l)));
    out[static_cast<size_t>(l)] = best;
  }
  return out;
}

namespace {

// Central-difference stencils, order 0..3.
const std::vector<std::pair<int, double>>& stencil(int order) {
  static const std::vector<std::pair<int, double>> tables[4] = {
      {{0, 1.0}},
      {{-1, -0.5}, {1, 0.5}},
      {{-1, 1.0}, {0, -2.0}, {1, 1.0}},
      {{-2, -0.5}, {-1, 1.0}, {1, -1.0}, {2, 0.5}},
  };
  return tables[order];
}

}  // namespace

std::vector<double> hormander_seminorm(const Symbol& s, int alpha_max) {
  check_symbol(s);
  require(alpha_max >= 0 && alpha_max <= 3,
          "hormander_seminorm: alpha_max in [0, 3]");
  const Eigen::Index n = s.n;
  std::vector<double> out(static_cast<size_t>(alpha_max) + 1, 0.0);
  Eigen::ArrayXXd best =
      Eigen::ArrayXXd::Zero(s.rows(), alpha_max + 1);
  parallel_for(s.rows(), [&](Eigen::Index i) {
    if (s.dim == 1) {
      for (int a = 0; a <= alpha_max; ++a) {
        const auto& st = stencil(a);
        for (long xi = -(static_cast<long>(n) / 2) + 2;
             xi < static_cast<long>(n) / 2 - 2; ++xi) {
          const double rad = std::abs(static_cast<double>(xi));
          if (rad < 2.0) continue;
          cplx d = 0.0;
          for (const auto& [off, c] : st)
            d += c * s.values(i, index_of_freq(xi + off, n));
          best(i, a) = std::max(best(i, a), std::pow(rad, a) * std::abs(d));
        }
      }
    } else {
      for (int a1 = 0; a1 <= alpha_max; ++a1) {
        for (int a2 = 0; a1 + a2 <= alpha_max; ++a2) {
          const int order = a1 + a2;
          const auto& s1 = stencil(a1);
          const auto& s2 = stencil(a2);
          for (long x1 = -(static_cast<long>(n) / 2) + 2;
               x1 < static_cast<long>(n) / 2 - 2; ++x1) {
            for (long x2 = -(static_cast<long>(n) / 2) + 2;
                 x2 < static_cast<long>(n) / 2 - 2; ++x2) {
              const double rad = std::hypot(static_cast<double>(x1),
                                            static_cast<double>(x2));
              if (rad < 2.0) continue;
              cplx d = 0.0;
              for (const auto& [o1, c1] : s1)
                for (const auto& [o2, c2] : s2)
                  d += c1 * c2 *
                       s.values(i, index_of_freq(x1 + o1, n) * n +
                                       index_of_freq(x2 + o2, n));
              best(i, order) =
                  std::max(best(i, order), std::pow(rad, order) * std::abs(d));
            }
          }
        }
      }
    }
  });
  for (int a = 0; a <= alpha_max; ++a)
    out[static_cast<size_t>(a)] = best.col(a).maxCoeff();
  return out;
}

BandQuantity homogeneous_quantity_detail(const SphereSymbol& q, double p) {
  check_sphere_symbol(q);
  require(p >= 2.0, "homogeneous_quantity: p >= 2");
  const double pprime = p == kInf ? 1.0 : p / (p - 1.0);
  const int lmax = max_band(q.m);
  RMatrixXd norms(q.rows(), lmax + 1);
  parallel_for(q.rows(), [&](Eigen::Index r) {
    CArray row = q.values.row(r).transpose().array();
    CArray hat = fft_1d(row, true);
    CArray filt(q.m);
    for (int l = 0; l <= lmax; ++l) {
      for (Eigen::Index k = 0; k < q.m; ++k) {
        const double rad = std::abs(static_cast<double>(freq_of_index(k, q.m)));
        filt[k] = hat[k] * band_multiplier(rad, l);
      }
      CArray band = fft_1d(filt, false);
      band /= static_cast<double>(q.m);
      norms(r, l) = sphere_lp_norm(band, pprime);
    }
  });
  std::vector<double> sup(static_cast<size_t>(lmax) + 1, 0.0);
  for (int l = 0; l <= lmax; ++l) sup[static_cast<size_t>(l)] = norms.col(l).maxCoeff();
  // n = 2: the band weight is 2^{l (n-1)/p'} = 2^{l/p'}.
  return assemble(sup, 1.0 / pprime, 1);
}

double homogeneous_quantity(const SphereSymbol& q, double p) {
  return homogeneous_quantity_detail(q, p).value;
}

RadialProfile thin_annulus_profile(int m, int k0, Eigen::Index nx,
                                   Eigen::Index nr) {
  require(is_pow2(nr) && nr >= 16, "radial profile: nr power of two >= 16");
  require((Eigen::Index(1) << k0) <= nr / 4, "radial profile: 2^k0 <= nr/4");
  RadialProfile rho;
  rho.nx = nx;
  rho.nr = nr;
  rho.values.resize(nx, nr);
  const double r0 = std::ldexp(1.0, k0);
  const double pow2m = std::ldexp(1.0, m);
  for (Eigen::Index i = 0; i < nx; ++i)
    for (Eigen::Index t = 0; t < nr; ++t) {
      const double r = static_cast<double>(t);
      rho.values(i, t) =
          cutoff_phi(pow2m * (1.0 - r * r / (r0 * r0))) * cutoff_phi(r / r0);
    }
  return rho;
}

BandQuantity radial_quantity_detail(const RadialProfile& rho) {
  require(is_pow2(rho.nr) && rho.nr >= 16, "radial profile: nr power of two >= 16");
  const Eigen::Index ext = 2 * rho.nr;
  const int lmax = max_band(ext);
  RMatrixXd norms(rho.nx, lmax + 1);
  parallel_for(rho.nx, [&](Eigen::Index i) {
    CArray row = CArray::Zero(ext);
    for (Eigen::Index t = 0; t < rho.nr; ++t) {
      row[t] = rho.values(i, t);
      if (t > 0) row[ext - t] = rho.values(i, t);
    }
    band_norms_of_row(row, 1, ext, 2.0, norms.row(i).data(), lmax);
  });
  std::vector<double> sup(static_cast<size_t>(lmax) + 1, 0.0);
  for (int l = 0; l <= lmax; ++l) sup[static_cast<size_t>(l)] = norms.col(l).maxCoeff();
  return assemble(sup, 0.5, 1);
}

double radial_quantity(const RadialProfile& rho) {
  return radial_quantity_detail(rho).value;
}

AlgebraCheck algebra_check(const Symbol& a, const Symbol& b) {
  AlgebraCheck out;
  out.lhs = theorem1_quantity(product_symbol(a, b));
  out.rhs = theorem1_quantity(a) * theorem1_quantity(b);
  out.ratio = out.rhs > 0.0 ? out.lhs / out.rhs : 0.0;
  return out;
}

double row_h_half_seminorm(const CArray& row, int dim, Eigen::Index n) {
  CArray hat = dim == 1 ? fft_1d(row, true) : fft_2d(row, n, true);
  hat /= static_cast<double>(hat.size());
  double acc = 0.0;
  for (Eigen::Index k = 0; k < hat.size(); ++k)
    acc += lattice_radius(k, dim, n) * std::norm(hat[k]);
  return std::sqrt(acc);
}

BoundReport make_bound_report(const Symbol& s, double q_exponent,
                              std::optional<double> empirical_norm) {
  BoundReport rep;
  RowSource src = rows_of(s);
  BandQuantity b2 = theorem1_quantity_detail(src);
  BandQuantity b1 = weak11_quantity_detail(src);
  rep.b2 = b2.value;
  rep.b1 = b1.value;
  rep.b2_table = b2.table;
  rep.b1_table = b1.table;
  rep.bq_exponent = q_exponent;
  rep.bq = lq_quantity(s, q_exponent);
  rep.hormander = hormander_seminorm(s, s.dim == 1 ? 3 : 2);
  rep.empirical_norm = empirical_norm;
  return rep;
}

}  // namespace rpdo
