#include "rpdo/symbols.hpp"

#include <algorithm>
#include <cmath>

#include "rpdo/cutoff.hpp"
#include "rpdo/parallel.hpp"

namespace rpdo {

namespace {

constexpr Eigen::Index kMaxSymbolEntries = Eigen::Index(1) << 24;

Eigen::Index pow_dim(Eigen::Index n, int dim) { return dim == 1 ? n : n * n; }

void check_table_size(int dim, Eigen::Index n) {
  require(dim == 1 || dim == 2, "symbol dim must be 1 or 2");
  require(is_pow2(n) && n >= 8, "symbol grid must be a power of two >= 8");
  const Eigen::Index side = pow_dim(n, dim);
  require(side <= kMaxSymbolEntries / side,
          "symbol table exceeds the in-memory size guard");
}

// e^{2 pi i turns}. Reduced mod 1 first; grid phases are dyadic
// rationals, so the reduction is exact and large carriers lose nothing.
cplx unit_phase(double turns) {
  const double a = 2.0 * M_PI * (turns - std::floor(turns));
  return {std::cos(a), std::sin(a)};
}

}  // namespace

double SymbolTag::param(const std::string& key, double fallback) const {
  for (const auto& [k, v] : params)
    if (k == key) return v;
  return fallback;
}

void check_symbol(const Symbol& s) {
  check_table_size(s.dim, s.n);
  const Eigen::Index side = pow_dim(s.n, s.dim);
  require(s.values.rows() == side && s.values.cols() == side,
          "symbol table shape != n^dim x n^dim");
}

DirectionField random_dilation_field(Rng& rng, Eigen::Index count, double lo,
                                     double hi) {
  require(lo > 0.0 && hi > lo, "dilation range must satisfy 0 < lo < hi");
  DirectionField f;
  f.u = RArray(count);
  for (Eigen::Index i = 0; i < count; ++i)
    f.u[i] = std::exp(rng.uniform(std::log(lo), std::log(hi)));
  f.angles = false;
  return f;
}

DirectionField random_angle_field(Rng& rng, Eigen::Index count) {
  DirectionField f;
  f.u = RArray(count);
  for (Eigen::Index i = 0; i < count; ++i)
    f.u[i] = rng.uniform(0.0, 2.0 * M_PI);
  f.angles = true;
  return f;
}

DirectionField cosine_dilation_field(double center, double wobble, long mode,
                                     Eigen::Index count) {
  require(center > 0.0 && wobble >= 0.0 && wobble < 1.0,
          "cosine field needs center > 0 and wobble in [0,1)");
  DirectionField f;
  f.u = RArray(count);
  for (Eigen::Index i = 0; i < count; ++i) {
    const double x = static_cast<double>(i) / static_cast<double>(count);
    f.u[i] = center * (1.0 + wobble * std::cos(2.0 * M_PI * mode * x));
  }
  f.angles = false;
  return f;
}

Symbol from_function_1d(Eigen::Index n,
                        const std::function<cplx(double, long)>& gen) {
  check_table_size(1, n);
  Symbol s;
  s.dim = 1;
  s.n = n;
  s.values.resize(n, n);
  parallel_for(n, [&](Eigen::Index i) {
    const double x = static_cast<double>(i) / static_cast<double>(n);
    for (Eigen::Index k = 0; k < n; ++k)
      s.values(i, k) = gen(x, freq_of_index(k, n));
  });
  s.tag.family = "custom";
  return s;
}

Symbol from_function_2d(
    Eigen::Index n,
    const std::function<cplx(double, double, long, long)>& gen) {
  check_table_size(2, n);
  Symbol s;
  s.dim = 2;
  s.n = n;
  const Eigen::Index side = n * n;
  s.values.resize(side, side);
  parallel_for(side, [&](Eigen::Index r) {
    const double x1 = static_cast<double>(r / n) / static_cast<double>(n);
    const double x2 = static_cast<double>(r % n) / static_cast<double>(n);
    for (Eigen::Index k = 0; k < side; ++k)
      s.values(r, k) = gen(x1, x2, freq_of_index(k / n, n), freq_of_index(k % n, n));
  });
  s.tag.family = "custom";
  return s;
}

Symbol multiplier_symbol(int dim, Eigen::Index n,
                         const std::function<cplx(double)>& radial) {
  check_table_size(dim, n);
  Symbol s;
  s.dim = dim;
  s.n = n;
  const Eigen::Index side = pow_dim(n, dim);
  s.xi_factor = CArray(side);
  for (Eigen::Index k = 0; k < side; ++k)
    s.xi_factor[k] = radial(lattice_radius(k, dim, n));
  s.values.resize(side, side);
  parallel_for(side, [&](Eigen::Index r) {
    s.values.row(r) = s.xi_factor.matrix().transpose();
  });
  s.structure = SymbolStructure::Multiplier;
  s.tag.family = "multiplier";
  return s;
}

Symbol rank_one_symbol(Eigen::Index n, const std::function<cplx(double)>& xf,
                       const std::function<cplx(long)>& xif) {
  check_table_size(1, n);
  Symbol s;
  s.dim = 1;
  s.n = n;
  s.x_factor = CArray(n);
  s.xi_factor = CArray(n);
  for (Eigen::Index i = 0; i < n; ++i)
    s.x_factor[i] = xf(static_cast<double>(i) / static_cast<double>(n));
  for (Eigen::Index k = 0; k < n; ++k) s.xi_factor[k] = xif(freq_of_index(k, n));
  s.values.resize(n, n);
  parallel_for(n, [&](Eigen::Index i) {
    s.values.row(i) = (s.x_factor[i] * s.xi_factor).matrix().transpose();
  });
  s.structure = SymbolStructure::RankOne;
  s.tag.family = "rank_one";
  return s;
}

// --- rescale -------------------------------------------------------------
//
// The table is moved to the (x-mode, xi) representation. x modes relabel
// a -> 2^j a. Each mode's xi profile stretches (j > 0) by writing the
// even output columns from the input and filling odd columns with the
// band-limited midpoints, or compresses (j < 0) by reading even input
// columns. Both directions are inverse to each other on symbols whose
// rows are resolvable at half sampling.

namespace {

constexpr double kActiveTol = 1e-12;

// Alias-free dilation of one xi row: out(2 eta) = row(eta) exactly,
// odd columns band-limited-interpolated.
CArray stretch_row(const CArray& row, int dim, Eigen::Index n) {
  CArray hat = dim == 1 ? fft_1d(row, true) : fft_2d(row, n, true);
  CArray out = CArray::Zero(hat.size());
  const double gain = dim == 1 ? 2.0 : 4.0;
  if (dim == 1) {
    for (long b = -static_cast<long>(n / 4); b < static_cast<long>(n / 4); ++b)
      out[index_of_freq(b, n)] = gain * hat[index_of_freq(2 * b, n)];
  } else {
    for (long b1 = -static_cast<long>(n / 4); b1 < static_cast<long>(n / 4); ++b1)
      for (long b2 = -static_cast<long>(n / 4); b2 < static_cast<long>(n / 4); ++b2)
        out[index_of_freq(b1, n) * n + index_of_freq(b2, n)] =
            gain * hat[index_of_freq(2 * b1, n) * n + index_of_freq(2 * b2, n)];
  }
  CArray res = dim == 1 ? fft_1d(out, false) : fft_2d(out, n, false);
  res /= static_cast<double>(res.size());
  return res;
}

void check_half_resolvable(const CArray& row, int dim, Eigen::Index n) {
  CArray hat = dim == 1 ? fft_1d(row, true) : fft_2d(row, n, true);
  const double top = hat.abs().maxCoeff();
  if (top == 0.0) return;
  for (Eigen::Index k = 0; k < hat.size(); ++k) {
    const bool outer =
        dim == 1 ? std::abs(freq_of_index(k, n)) > n / 4
                 : std::abs(freq_of_index(k / n, n)) > n / 4 ||
                       std::abs(freq_of_index(k % n, n)) > n / 4;
    if (outer && std::abs(hat[k]) > 1e-9 * top)
      throw std::domain_error("rescale: xi rows not resolvable at half sampling");
  }
}

CArray compress_row(const CArray& row, int dim, Eigen::Index n) {
  check_half_resolvable(row, dim, n);
  CArray out = CArray::Zero(row.size());
  if (dim == 1) {
    for (long xi = -static_cast<long>(n / 4); xi < static_cast<long>(n / 4); ++xi)
      out[index_of_freq(xi, n)] = row[index_of_freq(2 * xi, n)];
  } else {
    for (long x1 = -static_cast<long>(n / 4); x1 < static_cast<long>(n / 4); ++x1)
      for (long x2 = -static_cast<long>(n / 4); x2 < static_cast<long>(n / 4); ++x2)
        out[index_of_freq(x1, n) * n + index_of_freq(x2, n)] =
            row[index_of_freq(2 * x1, n) * n + index_of_freq(2 * x2, n)];
  }
  return out;
}

// Unnormalized x-transform of the whole table: M[a, xi].
CMatrixRM to_mode_major(const CMatrixRM& table, int dim, Eigen::Index n) {
  CMatrixRM t = table.transpose();  // [xi, x], x contiguous per row
  const Eigen::Index side = t.cols();
  if (dim == 1) {
    fft_rows(t.data(), t.rows(), side, true);
  } else {
    parallel_for(t.rows(), [&](Eigen::Index r) {
      CArray row = t.row(r).transpose().array();
      CArray hat = fft_2d(row, n, true);
      t.row(r) = hat.matrix().transpose();
    });
  }
  return t.transpose();  // [a, xi]
}

CMatrixRM from_mode_major(const CMatrixRM& modes, int dim, Eigen::Index n) {
  CMatrixRM t = modes.transpose();  // [xi, a]
  const Eigen::Index side = t.cols();
  if (dim == 1) {
    fft_rows(t.data(), t.rows(), side, false);
  } else {
    parallel_for(t.rows(), [&](Eigen::Index r) {
      CArray row = t.row(r).transpose().array();
      CArray back = fft_2d(row, n, false);
      t.row(r) = back.matrix().transpose();
    });
  }
  t /= static_cast<double>(side);
  return t.transpose();
}

long mode_component(Eigen::Index flat, int axis, int dim, Eigen::Index n) {
  if (dim == 1) return freq_of_index(flat, n);
  return axis == 0 ? freq_of_index(flat / n, n) : freq_of_index(flat % n, n);
}

Symbol rescale_once(const Symbol& s, int j) {
  check_symbol(s);
  const int dim = s.dim;
  const Eigen::Index n = s.n;
  const Eigen::Index side = pow_dim(n, dim);
  CMatrixRM modes = to_mode_major(s.values, dim, n);
  const double top = modes.array().abs().maxCoeff();
  Symbol out;
  out.dim = dim;
  out.n = n;
  out.tag = s.tag;
  out.tag.params.emplace_back("rescale", static_cast<double>(j));
  if (top == 0.0) {
    out.values = s.values;
    return out;
  }
  const double tol = kActiveTol * top;

  // Column-support guard: after j = +1 the active bands move up one slot
  // and must stay within [0, max_band].
  if (j > 0) {
    for (Eigen::Index k = 0; k < side; ++k) {
      if (lattice_radius(k, dim, n) > static_cast<double>(n / 8) &&
          s.values.col(k).array().abs().maxCoeff() > tol)
        throw std::domain_error("rescale: band overflow at the top of the lattice");
    }
  }

  CMatrixRM shifted = CMatrixRM::Zero(side, side);
  for (Eigen::Index r = 0; r < side; ++r) {
    if (modes.row(r).array().abs().maxCoeff() <= tol) continue;
    long a1 = mode_component(r, 0, dim, n), a2 = mode_component(r, 1, dim, n);
    Eigen::Index dst;
    if (j > 0) {
      if (std::abs(a1) >= n / 4 || (dim == 2 && std::abs(a2) >= n / 4))
        throw std::domain_error("rescale: x-mode overflow");
      dst = dim == 1 ? index_of_freq(2 * a1, n)
                     : index_of_freq(2 * a1, n) * n + index_of_freq(2 * a2, n);
    } else {
      if (a1 % 2 != 0 || (dim == 2 && a2 % 2 != 0))
        throw std::domain_error("rescale: x content not dyadically divisible");
      dst = dim == 1 ? index_of_freq(a1 / 2, n)
                     : index_of_freq(a1 / 2, n) * n + index_of_freq(a2 / 2, n);
    }
    CArray row = modes.row(r).transpose().array();
    CArray moved = j > 0 ? stretch_row(row, dim, n) : compress_row(row, dim, n);
    shifted.row(dst) = moved.matrix().transpose();
  }
  out.values = from_mode_major(shifted, dim, n);

  if (s.structure == SymbolStructure::Multiplier) {
    out.structure = SymbolStructure::Multiplier;
    out.xi_factor = out.values.row(0).array();
  }
  return out;
}

}  // namespace

Symbol rescale(const Symbol& s, int j) {
  if (j == 0) {
    Symbol copy = s;
    return copy;
  }
  Symbol cur = rescale_once(s, j > 0 ? 1 : -1);
  for (int step = 1; step < std::abs(j); ++step)
    cur = rescale_once(cur, j > 0 ? 1 : -1);
  return cur;
}

// --- gallery -------------------------------------------------------------

Symbol counterexample_symbol(double delta, int j_max, Eigen::Index n) {
  check_table_size(1, n);
  require(delta > 0.0 && delta < 0.5, "counterexample: delta in (0, 1/2)");
  require(j_max >= 8, "counterexample: j_max >= 8");
  require(j_max < 60 && (Eigen::Index(1) << j_max) <= n / 4,
          "counterexample: 2^j_max <= n/4");
  Symbol s;
  s.dim = 1;
  s.n = n;
  s.values = CMatrixRM::Zero(n, n);
  parallel_for(n, [&](Eigen::Index i) {
    const double x = static_cast<double>(i) / static_cast<double>(n);
    for (int j = 8; j <= j_max; ++j) {
      const double coeff = std::pow(static_cast<double>(j), delta - 0.5);
      const cplx mod = coeff * unit_phase(-std::ldexp(1.0, j) * x);
      for (Eigen::Index k = 0; k < n; ++k) {
        const double w = plateau_bump(std::ldexp(
            static_cast<double>(freq_of_index(k, n)), -j));
        if (w != 0.0) s.values(i, k) += mod * w;
      }
    }
  });
  s.tag.family = "counterexample";
  s.tag.params = {{"delta", delta}, {"j_max", static_cast<double>(j_max)}};
  return s;
}

GridFn counterexample_testfn(double delta, int n_terms, const GridFn& f0) {
  check_shape(f0);
  require(f0.dim == 1, "counterexample test function is one-dimensional");
  require(delta > 0.0 && delta < 0.5, "counterexample: delta in (0, 1/2)");
  require(n_terms >= 8, "counterexample: n_terms >= 8");
  const Eigen::Index n = f0.n;
  require(n_terms < 60 && (Eigen::Index(1) << n_terms) <= n / 4,
          "counterexample: 2^n_terms <= n/4");
  Spectrum s0 = forward_transform(f0);
  const double top = s0.coeffs.abs().maxCoeff();
  for (Eigen::Index k = 0; k < n; ++k) {
    if (std::abs(freq_of_index(k, n)) > n / 40 && std::abs(s0.coeffs[k]) > 1e-13 * top)
      throw std::invalid_argument("counterexample: f0 spectrum exceeds |xi| <= n/40");
  }
  GridFn out = make_grid_fn(1, n);
  for (int j = 8; j <= n_terms; ++j) {
    const double coeff = std::pow(static_cast<double>(j), -(0.5 + delta));
    for (Eigen::Index i = 0; i < n; ++i) {
      const double x = static_cast<double>(i) / static_cast<double>(n);
      out.values[i] += coeff * unit_phase(std::ldexp(1.0, j) * x) * f0.values[i];
    }
  }
  return out;
}

Symbol carleson_thin_symbol(int m, const DirectionField& u, int k0,
                            Eigen::Index n) {
  check_table_size(1, n);
  require(m >= 1, "carleson symbol: m >= 1");
  require((Eigen::Index(1) << k0) <= n / 16, "carleson symbol: 2^k0 <= n/16");
  require(u.u.size() == n && !u.angles, "carleson symbol: u field size n, dilations");
  const double scale = std::ldexp(1.0, k0);
  for (Eigen::Index i = 0; i < n; ++i)
    require(u.u[i] > 0.25 * scale && u.u[i] < 4.0 * scale,
            "carleson symbol: u outside (1/4,4)*2^k0");
  Symbol s;
  s.dim = 1;
  s.n = n;
  s.values.resize(n, n);
  const double pow2m = std::ldexp(1.0, m);
  parallel_for(n, [&](Eigen::Index i) {
    const double ui2 = u.u[i] * u.u[i];
    for (Eigen::Index k = 0; k < n; ++k) {
      const double xi = static_cast<double>(freq_of_index(k, n));
      s.values(i, k) = cutoff_phi(pow2m * (1.0 - xi * xi / ui2)) *
                       cutoff_phi(xi / scale);
    }
  });
  s.tag.family = "carleson_thin";
  s.tag.params = {{"m", static_cast<double>(m)}, {"k0", static_cast<double>(k0)}};
  return s;
}

Symbol thin_circle_symbol(int m, const DirectionField& u, int k0,
                          Eigen::Index n) {
  check_table_size(2, n);
  require(m >= 0 && m <= k0, "thin circle symbol: 0 <= m <= k0");
  require((Eigen::Index(1) << k0) <= n / 16, "thin circle symbol: 2^k0 <= n/16");
  require(u.u.size() == n * n && u.angles, "thin circle symbol: angle field of size n^2");
  Symbol s;
  s.dim = 2;
  s.n = n;
  const Eigen::Index side = n * n;
  s.values.resize(side, side);
  const double pow2m = std::ldexp(1.0, m);
  const double scale = std::ldexp(1.0, k0);
  parallel_for(side, [&](Eigen::Index r) {
    const double c = std::cos(u.u[r]), sn = std::sin(u.u[r]);
    for (Eigen::Index k = 0; k < side; ++k) {
      const double x1 = static_cast<double>(freq_of_index(k / n, n));
      const double x2 = static_cast<double>(freq_of_index(k % n, n));
      const double rad = std::hypot(x1, x2);
      if (rad == 0.0) {
        s.values(r, k) = 0.0;
        continue;
      }
      const double dot = (c * x1 + sn * x2) / rad;
      s.values(r, k) = cutoff_phi(pow2m * dot) * cutoff_phi(rad / scale);
    }
  });
  s.tag.family = "thin_circle";
  s.tag.params = {{"m", static_cast<double>(m)}, {"k0", static_cast<double>(k0)}};
  return s;
}

Symbol directional_symbol(double delta, const DirectionField& u, int k0,
                          Eigen::Index n) {
  check_table_size(2, n);
  require(delta > 0.0, "directional symbol: delta > 0");
  require((Eigen::Index(1) << k0) <= n / 16, "directional symbol: 2^k0 <= n/16");
  require(u.u.size() == n * n && u.angles, "directional symbol: angle field of size n^2");
  Symbol s;
  s.dim = 2;
  s.n = n;
  const Eigen::Index side = n * n;
  s.values.resize(side, side);
  const double scale = std::ldexp(1.0, k0);
  parallel_for(side, [&](Eigen::Index r) {
    const double c = std::cos(u.u[r]), sn = std::sin(u.u[r]);
    for (Eigen::Index k = 0; k < side; ++k) {
      const double x1 = static_cast<double>(freq_of_index(k / n, n));
      const double x2 = static_cast<double>(freq_of_index(k % n, n));
      const double rad = std::hypot(x1, x2);
      if (rad == 0.0) {
        s.values(r, k) = 0.0;
        continue;
      }
      const double dot = (c * x1 + sn * x2) / rad;
      s.values(r, k) = psi_plateau(dot / delta) * cutoff_phi(rad / scale);
    }
  });
  s.tag.family = "directional";
  s.tag.params = {{"delta", delta}, {"k0", static_cast<double>(k0)}};
  return s;
}

Symbol product_symbol(const Symbol& a, const Symbol& b) {
  check_symbol(a);
  check_symbol(b);
  require(a.dim == b.dim && a.n == b.n, "product_symbol: shape mismatch");
  Symbol s;
  s.dim = a.dim;
  s.n = a.n;
  s.values = a.values.cwiseProduct(b.values);
  if (a.structure == SymbolStructure::Multiplier &&
      b.structure == SymbolStructure::Multiplier) {
    s.structure = SymbolStructure::Multiplier;
    s.xi_factor = a.xi_factor * b.xi_factor;
  }
  s.tag.family = a.tag.family + "*" + b.tag.family;
  return s;
}

Symbol exp_symbol(const Symbol& a) {
  check_symbol(a);
  Symbol s;
  s.dim = a.dim;
  s.n = a.n;
  s.values = a.values.array().exp().matrix();
  if (a.structure == SymbolStructure::Multiplier) {
    s.structure = SymbolStructure::Multiplier;
    s.xi_factor = a.xi_factor.exp();
  }
  s.tag.family = "exp(" + a.tag.family + ")";
  return s;
}

GridFn smooth_profile_fn(Eigen::Index n, long width) {
  require(width >= 1 && width < n / 2, "smooth_profile_fn: width in [1, n/2)");
  Spectrum s;
  s.dim = 1;
  s.n = n;
  s.coeffs = CArray::Zero(n);
  for (long xi = -width; xi <= width; ++xi)
    s.coeffs[index_of_freq(xi, n)] =
        cutoff_chi(2.0 * static_cast<double>(xi) / static_cast<double>(width));
  GridFn f = inverse_transform(s);
  const double nrm = lp_norm(f, 2.0);
  f.values /= nrm;
  return f;
}

// --- packed counterexample ------------------------------------------------

double ModulatedBandSymbol::multiplier(const BandTerm& t, long xi) const {
  const double d = std::abs(std::abs(static_cast<double>(xi)) -
                            static_cast<double>(t.carrier)) /
                   t.half_width;
  if (d >= 1.0) return 0.0;
  if (d <= 0.5) return 1.0;
  return 1.0 - smooth_step(2.0 * (d - 0.5));
}

CArray ModulatedBandSymbol::row(Eigen::Index i) const {
  CArray r = CArray::Zero(n);
  const double x = static_cast<double>(i) / static_cast<double>(n);
  for (const auto& t : terms) {
    const cplx mod = t.coeff * unit_phase(-static_cast<double>(t.carrier) * x);
    const long w = static_cast<long>(t.half_width) + 1;
    for (long xi = t.carrier - w; xi <= t.carrier + w; ++xi) {
      const double mul = multiplier(t, xi);
      if (mul != 0.0) {
        r[index_of_freq(xi, n)] += mod * mul;
        r[index_of_freq(-xi, n)] += mod * mul;
      }
    }
  }
  return r;
}

ModulatedBandSymbol counterexample_packed(double delta, int n_terms,
                                          Eigen::Index n) {
  require(is_pow2(n) && n >= 1024, "packed counterexample: n power of two >= 1024");
  require(delta > 0.0 && delta < 0.5, "packed counterexample: delta in (0, 1/2)");
  require(n_terms >= 9, "packed counterexample: n_terms >= 9");
  const long count = n_terms - 8 + 1;
  const long spacing = static_cast<long>(n / 4) / (count + 2);
  require(spacing >= 8, "packed counterexample: lattice too small for n_terms");
  ModulatedBandSymbol sym;
  sym.n = n;
  sym.first_index = 8;
  sym.terms.reserve(static_cast<size_t>(count));
  for (int j = 8; j <= n_terms; ++j) {
    BandTerm t;
    t.coeff = std::pow(static_cast<double>(j), delta - 0.5);
    t.carrier = spacing * static_cast<long>(j - 6);
    t.half_width = static_cast<double>(spacing) / 2.0;
    sym.terms.push_back(t);
  }
  return sym;
}

GridFn packed_testfn(const ModulatedBandSymbol& sym, double delta,
                     const GridFn& f0) {
  check_shape(f0);
  require(f0.dim == 1 && f0.n == sym.n, "packed test function: shape mismatch");
  Spectrum s0 = forward_transform(f0);
  const double top = s0.coeffs.abs().maxCoeff();
  const long limit = static_cast<long>(sym.terms.front().half_width / 2.0) - 1;
  for (Eigen::Index k = 0; k < sym.n; ++k)
    if (std::abs(freq_of_index(k, sym.n)) > limit &&
        std::abs(s0.coeffs[k]) > 1e-13 * top)
      throw std::invalid_argument("packed test function: f0 wider than band plateau");
  GridFn out = make_grid_fn(1, sym.n);
  for (size_t t = 0; t < sym.terms.size(); ++t) {
    const double j = static_cast<double>(sym.first_index + static_cast<int>(t));
    const double coeff = std::pow(j, -(0.5 + delta));
    const double carrier = static_cast<double>(sym.terms[t].carrier);
    for (Eigen::Index i = 0; i < sym.n; ++i) {
      const double x = static_cast<double>(i) / static_cast<double>(sym.n);
      out.values[i] += coeff * unit_phase(carrier * x) * f0.values[i];
    }
  }
  return out;
}

GridFn apply_packed(const ModulatedBandSymbol& sym, const GridFn& f) {
  check_shape(f);
  require(f.dim == 1 && f.n == sym.n, "apply_packed: shape mismatch");
  const Eigen::Index n = sym.n;
  Spectrum fh = forward_transform(f);
  GridFn out = make_grid_fn(1, n);
  for (const auto& t : sym.terms) {
    Spectrum piece;
    piece.dim = 1;
    piece.n = n;
    piece.coeffs = CArray::Zero(n);
    bool nonzero = false;
    const long w = static_cast<long>(t.half_width) + 1;
    for (long sign : {1L, -1L}) {
      for (long xi = t.carrier - w; xi <= t.carrier + w; ++xi) {
        const double mul = multiplier(t, xi);
        if (mul == 0.0) continue;
        const Eigen::Index k = index_of_freq(sign * xi, n);
        piece.coeffs[k] = mul * fh.coeffs[k];
        nonzero = nonzero || piece.coeffs[k] != cplx(0.0, 0.0);
      }
    }
    if (!nonzero) continue;
    GridFn band = inverse_transform(piece);
    for (Eigen::Index i = 0; i < n; ++i) {
      const double x = static_cast<double>(i) / static_cast<double>(n);
      out.values[i] +=
          t.coeff * unit_phase(-static_cast<double>(t.carrier) * x) * band.values[i];
    }
  }
  return out;
}

// --- random material -------------------------------------------------------

GridFn random_bandlimited(Rng& rng, int dim, Eigen::Index n, int lmin,
                          int lmax) {
  require(lmin >= 0 && lmax >= lmin && lmax <= max_band(n),
          "random_bandlimited: band range invalid");
  Spectrum s;
  s.dim = dim;
  s.n = n;
  s.coeffs = CArray::Zero(pow_dim(n, dim));
  const double lo = lmin == 0 ? 0.0 : std::ldexp(1.0, lmin - 1);
  const double hi = std::ldexp(1.0, lmax + 1);
  for (Eigen::Index k = 0; k < s.coeffs.size(); ++k) {
    const double r = lattice_radius(k, dim, n);
    if (r >= lo && r <= hi) s.coeffs[k] = rng.complex_gaussian();
  }
  GridFn f = inverse_transform(s);
  const double nrm = lp_norm(f, 2.0);
  if (nrm > 0.0) f.values /= nrm;
  return f;
}

Symbol random_symbol(Rng& rng, Eigen::Index n, int kind) {
  check_table_size(1, n);
  require(n >= 64, "random_symbol: n >= 64");
  const int lmax = max_band(n);
  switch (kind % kRandomSymbolKinds) {
    case 0: {
      std::vector<std::pair<double, cplx>> parts;
      for (int t = 0; t < 3; ++t)
        parts.emplace_back(std::ldexp(1.0, 2 + static_cast<int>(rng.integer(lmax - 3))),
                           rng.complex_gaussian());
      Symbol s = multiplier_symbol(1, n, [parts](double r) {
        cplx v = 0.0;
        for (const auto& [sc, c] : parts) v += c * cutoff_phi(r / sc);
        return v;
      });
      s.tag.family = "random_multiplier";
      return s;
    }
    case 1: {
      GridFn env = random_bandlimited(rng, 1, n, 0, std::min(3, lmax - 1));
      std::vector<std::pair<double, cplx>> parts;
      for (int t = 0; t < 2; ++t)
        parts.emplace_back(std::ldexp(1.0, 2 + static_cast<int>(rng.integer(lmax - 3))),
                           rng.complex_gaussian());
      const CArray envv = env.values;
      Symbol s;
      s.dim = 1;
      s.n = n;
      s.x_factor = envv;
      s.xi_factor = CArray(n);
      for (Eigen::Index k = 0; k < n; ++k) {
        cplx v = 0.0;
        const double r = lattice_radius(k, 1, n);
        for (const auto& [sc, c] : parts) v += c * cutoff_phi(r / sc);
        s.xi_factor[k] = v;
      }
      s.values.resize(n, n);
      for (Eigen::Index i = 0; i < n; ++i)
        s.values.row(i) = (s.x_factor[i] * s.xi_factor).matrix().transpose();
      s.structure = SymbolStructure::RankOne;
      s.tag.family = "random_rank_one";
      return s;
    }
    case 2: {
      struct Piece {
        long carrier;
        double scale;
        cplx coef;
      };
      std::vector<Piece> pieces;
      for (int t = 0; t < 4; ++t) {
        Piece p;
        p.carrier = static_cast<long>(rng.integer(n / 4)) - static_cast<long>(n / 8);
        p.scale = std::ldexp(1.0, 2 + static_cast<int>(rng.integer(lmax - 3)));
        p.coef = rng.complex_gaussian();
        pieces.push_back(p);
      }
      Symbol s = from_function_1d(n, [pieces](double x, long xi) {
        cplx v = 0.0;
        for (const auto& p : pieces)
          v += p.coef * unit_phase(static_cast<double>(p.carrier) * x) *
               cutoff_phi(std::abs(static_cast<double>(xi)) / p.scale);
        return v;
      });
      s.tag.family = "random_modulated";
      return s;
    }
    default: {
      const int k0 = std::max(2, lmax - 4);
      const int m = 1 + static_cast<int>(rng.integer(3));
      DirectionField u = random_dilation_field(
          rng, n, 0.3 * std::ldexp(1.0, k0), 3.5 * std::ldexp(1.0, k0));
      Symbol s = carleson_thin_symbol(m, u, k0, n);
      s.tag.family = "random_carleson";
      return s;
    }
  }
}

}  // namespace rpdo
