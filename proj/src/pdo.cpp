#include "rpdo/pdo.hpp"

#include <Eigen/SVD>

#include "rpdo/cutoff.hpp"
#include "rpdo/parallel.hpp"

namespace rpdo {

namespace {

// Exact lattice twiddles e^{2 pi i m / n}, m = 0..n-1.
CArray twiddle_table(Eigen::Index n) {
  CArray tw(n);
  for (Eigen::Index m = 0; m < n; ++m) {
    const double a = 2.0 * M_PI * static_cast<double>(m) / static_cast<double>(n);
    tw[m] = {std::cos(a), std::sin(a)};
  }
  return tw;
}

// phase(k) = e^{2 pi i <xi(k), x_i>} as a twiddle lookup; the exponent
// <xi, i>/n only matters mod 1.
inline Eigen::Index phase_slot_1d(Eigen::Index k, Eigen::Index i, Eigen::Index n) {
  const long xi = freq_of_index(k, n);
  long m = (xi * static_cast<long>(i)) % static_cast<long>(n);
  if (m < 0) m += static_cast<long>(n);
  return static_cast<Eigen::Index>(m);
}

GridFn multiplier_apply(const CArray& mult, const GridFn& f) {
  Spectrum fh = forward_transform(f);
  fh.coeffs *= mult;
  return inverse_transform(fh);
}

}  // namespace

GridFn apply(const Symbol& s, const GridFn& f) {
  check_symbol(s);
  check_shape(f);
  require(s.dim == f.dim && s.n == f.n, "apply: shape mismatch");
  if (s.structure == SymbolStructure::Multiplier)
    return multiplier_apply(s.xi_factor, f);
  if (s.structure == SymbolStructure::RankOne) {
    GridFn out = multiplier_apply(s.xi_factor, f);
    out.values *= s.x_factor;
    return out;
  }

  const Eigen::Index n = s.n;
  const Eigen::Index side = s.rows();
  Spectrum fh = forward_transform(f);
  GridFn out = make_grid_fn(s.dim, n);
  const CArray tw = twiddle_table(n);
  if (s.dim == 1) {
    parallel_for(side, [&](Eigen::Index i) {
      cplx acc = 0.0;
      for (Eigen::Index k = 0; k < n; ++k)
        acc += s.values(i, k) * fh.coeffs[k] * tw[phase_slot_1d(k, i, n)];
      out.values[i] = acc;
    });
  } else {
    parallel_for(side, [&](Eigen::Index r) {
      const Eigen::Index i1 = r / n, i2 = r % n;
      cplx acc = 0.0;
      for (Eigen::Index k = 0; k < side; ++k) {
        const long xi1 = freq_of_index(k / n, n), xi2 = freq_of_index(k % n, n);
        long m = (xi1 * static_cast<long>(i1) + xi2 * static_cast<long>(i2)) %
                 static_cast<long>(n);
        if (m < 0) m += static_cast<long>(n);
        acc += s.values(r, k) * fh.coeffs[k] * tw[m];
      }
      out.values[r] = acc;
    });
  }
  return out;
}

GridFn apply_adjoint(const Symbol& s, const GridFn& g) {
  check_symbol(s);
  check_shape(g);
  require(s.dim == g.dim && s.n == g.n, "apply_adjoint: shape mismatch");
  if (s.structure == SymbolStructure::Multiplier) {
    Spectrum gh = forward_transform(g);
    gh.coeffs *= s.xi_factor.conjugate();
    return inverse_transform(gh);
  }
  if (s.structure == SymbolStructure::RankOne) {
    GridFn scaled = g;
    scaled.values *= s.x_factor.conjugate();
    Spectrum gh = forward_transform(scaled);
    gh.coeffs *= s.xi_factor.conjugate();
    return inverse_transform(gh);
  }

  const Eigen::Index n = s.n;
  const Eigen::Index side = s.rows();
  const CArray tw = twiddle_table(n);
  Spectrum mixed;
  mixed.dim = s.dim;
  mixed.n = n;
  mixed.coeffs = CArray::Zero(side);
  const double cell = 1.0 / static_cast<double>(side);
  if (s.dim == 1) {
    parallel_for(side, [&](Eigen::Index k) {
      cplx acc = 0.0;
      for (Eigen::Index i = 0; i < n; ++i)
        acc += std::conj(s.values(i, k) * tw[phase_slot_1d(k, i, n)]) * g.values[i];
      mixed.coeffs[k] = acc * cell;
    });
  } else {
    parallel_for(side, [&](Eigen::Index k) {
      const long xi1 = freq_of_index(k / n, n), xi2 = freq_of_index(k % n, n);
      cplx acc = 0.0;
      for (Eigen::Index r = 0; r < side; ++r) {
        const Eigen::Index i1 = r / n, i2 = r % n;
        long m = (xi1 * static_cast<long>(i1) + xi2 * static_cast<long>(i2)) %
                 static_cast<long>(n);
        if (m < 0) m += static_cast<long>(n);
        acc += std::conj(s.values(r, k) * tw[m]) * g.values[r];
      }
      mixed.coeffs[k] = acc * cell;
    });
  }
  return inverse_transform(mixed);
}

DenseOperator dense_matrix(const Symbol& s) {
  check_symbol(s);
  const Eigen::Index side = s.rows();
  require(side <= 4096, "dense_matrix: n^dim <= 4096");
  const Eigen::Index n = s.n;
  DenseOperator op;
  op.size = side;
  op.matrix.resize(side, side);
  op.provenance = s.tag.family;
  // Row i of the matrix is the inverse transform of sigma's row against
  // the shifted twiddles: T[i,j] = n^{-dim} sum_k sigma(i,k) e^{2 pi i
  // <xi(k), x_i - x_j>}.
  const double cell = 1.0 / static_cast<double>(side);
  parallel_for(side, [&](Eigen::Index i) {
    CArray row = s.values.row(i).transpose().array();
    CArray v = s.dim == 1 ? fft_1d(row, false) : fft_2d(row, n, false);
    if (s.dim == 1) {
      for (Eigen::Index j = 0; j < side; ++j) {
        Eigen::Index m = (i - j) % n;
        if (m < 0) m += n;
        op.matrix(i, j) = v[m] * cell;
      }
    } else {
      const Eigen::Index i1 = i / n, i2 = i % n;
      for (Eigen::Index j = 0; j < side; ++j) {
        const Eigen::Index j1 = j / n, j2 = j % n;
        Eigen::Index m1 = (i1 - j1) % n, m2 = (i2 - j2) % n;
        if (m1 < 0) m1 += n;
        if (m2 < 0) m2 += n;
        op.matrix(i, j) = v[m1 * n + m2] * cell;
      }
    }
  });
  return op;
}

NormResult operator_norm(const Symbol& s, NormMethod method, Rng& rng) {
  check_symbol(s);
  NormResult res;
  res.method = method;
  if (method == NormMethod::Dense) {
    DenseOperator op = dense_matrix(s);
    Eigen::BDCSVD<Eigen::MatrixXcd> svd(op.matrix);
    res.value = svd.singularValues()(0);
    res.iterations = 0;
    return res;
  }
  GridFn b = make_grid_fn(s.dim, s.n);
  for (Eigen::Index i = 0; i < b.size(); ++i) b.values[i] = rng.complex_gaussian();
  double nb = lp_norm(b, 2.0);
  b.values /= nb;
  double prev = 0.0;
  res.converged = false;
  for (int it = 1; it <= 500; ++it) {
    GridFn tb = apply(s, b);
    const double est = lp_norm(tb, 2.0);  // ||T b|| with ||b|| = 1
    GridFn next = apply_adjoint(s, tb);
    const double nn = lp_norm(next, 2.0);
    res.iterations = it;
    if (nn == 0.0) {
      res.value = 0.0;
      res.converged = true;
      return res;
    }
    next.values /= nn;
    b = next;
    if (it > 1 && std::abs(est - prev) <= 1e-9 * std::max(est, 1e-300)) {
      res.value = est;
      res.converged = true;
      return res;
    }
    prev = est;
  }
  res.value = prev;
  return res;
}

}  // namespace rpdo
