#pragma once

#include "sc/dense.hpp"

namespace sc {

/// Eigenvalues ascending; vectors(:,k) is the orthonormal eigenvector paired
/// with values[k]. Sign convention: the largest-magnitude entry of each
/// column is positive, ties resolved by lowest index. Equal eigenvalues are
/// ordered by the sign-fixed first differing vector entry.
struct EigenDecomposition {
  Vector values;
  Matrix vectors;
};

/// Cyclic Jacobi rotations for dense symmetric matrices. Off-diagonal
/// Frobenius tolerance 1e-11 (relative to max(1, |M|_F)), at most 100
/// sweeps; throws NoConvergence past the sweep limit. Deterministic given m.
EigenDecomposition sym_eig(const SymmetricMatrix& m);

}  // namespace sc
