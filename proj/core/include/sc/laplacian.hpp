#pragma once

#include <vector>

#include "sc/dense.hpp"
#include "sc/graph.hpp"

namespace sc {

/// D - W; annihilates constants (row sums are zero).
SymmetricMatrix combinatorial_laplacian(const Graph& g);

/// I - D^{-1/2} W D^{-1/2}. Throws IsolatedVertex when some degree is 0.
SymmetricMatrix normalized_laplacian(const Graph& g);

/// Gamma^{-1/2} (D - W) Gamma^{-1/2} with Gamma = diag(vertex_weights).
/// Coincides with the combinatorial Laplacian when all vertex weights are 1.
SymmetricMatrix doubly_weighted_laplacian(const Graph& g);

/// x^T m x.
double quadratic_form(const SymmetricMatrix& m, const Vector& x);

/// x^T m x / x^T x. Throws ZeroVector on |x| = 0.
double rayleigh_quotient(const SymmetricMatrix& m, const Vector& x);

/// Cut weight of (S, complement) divided by min volume side, with the
/// volume a(S) = sum of full weighted degrees over S. The subset must be a
/// proper nonempty vertex set with a positive min-volume side.
double conductance(const Graph& g, const std::vector<int>& subset);

}  // namespace sc
