#pragma once

#include "rpdo/rng.hpp"
#include "rpdo/symbols.hpp"

namespace rpdo {

// (T f)(x_i) = sum_xi sigma(x_i, xi) e^{2 pi i xi . x_i} fhat(xi).
// Generic path is the direct phase sum (exact lattice twiddles);
// x-independent and rank-one symbols take multiplier fast paths.
GridFn apply(const Symbol& s, const GridFn& f);

// True matrix adjoint of the discrete operator with respect to inner();
// satisfies inner(apply(s,f), g) == inner(f, apply_adjoint(s,g)) to
// roundoff.
GridFn apply_adjoint(const Symbol& s, const GridFn& g);

struct DenseOperator {
  Eigen::Index size = 0;  // n^dim
  Eigen::MatrixXcd matrix;
  std::string provenance;
};

// Materializes apply() as a matrix on sample vectors. n^dim <= 4096.
DenseOperator dense_matrix(const Symbol& s);

enum class NormMethod { Power, Dense };

struct NormResult {
  double value = 0.0;
  bool converged = true;
  int iterations = 0;
  NormMethod method = NormMethod::Power;
};

// Largest singular value of the discrete operator. Power iteration runs
// on T*T with Rayleigh stopping (relative change < 1e-9, at most 500
// rounds; non-convergence is flagged, never silently returned). Dense
// uses a full SVD of dense_matrix and obeys its size guard.
NormResult operator_norm(const Symbol& s, NormMethod method, Rng& rng);

}  // namespace rpdo
