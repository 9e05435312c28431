#pragma once

#include <utility>
#include <vector>

#include "sc/coarsen.hpp"
#include "sc/dense.hpp"
#include "sc/graph.hpp"
#include "sc/rng.hpp"

namespace sc {

/// Edge-weight vector in the n(n-1)/2-dimensional space, with a boolean
/// mask marking the coordinates backed by actual graph edges. Weights are
/// nonnegative and exactly 0 off the mask.
struct WeightVector {
  int n = 0;
  Vector w;                 // length n(n-1)/2
  std::vector<bool> mask;   // same length

  static WeightVector from_graph(const Graph& g);

  /// Applies the mask in place (zeroes unmasked coordinates).
  void remask();
};

/// Coordinate of the (a, b) pair (0-based, a < b) in weight space. The
/// enumeration runs down the columns of the strict lower triangle:
/// (1,0), (2,0), ..., (n-1,0), (2,1), (3,1), ...
int weight_index(int n, int a, int b);

/// The Laplacian realization of a weight vector: off-diagonal (i,j) holds
/// -w at the pair's coordinate, the diagonal carries the row sums negated.
SymmetricMatrix lap_from_weights(const WeightVector& wv);

/// Adjoint of the weight-to-Laplacian map: coordinate (i,j) of the result
/// is Y(i,i) + Y(j,j) - 2 Y(i,j), so <Lw, Y> = <w, adj(Y)> for all w.
Vector lap_adjoint(const SymmetricMatrix& y);

/// |Lw - U diag(lambda) U^T|_F^2. U must be orthonormal to 1e-8.
double objective(const WeightVector& wv, const Matrix& u, const Vector& lambda);

/// One projected-gradient step with step 1/(2n), clamped at 0 and re-masked.
WeightVector update_w(const WeightVector& wv, const Matrix& u, const Vector& lambda);

/// Eigenvectors of Lw, columns arranged so that eigenvalue rank matches the
/// rank of the corresponding target entry (ascending pairing).
Matrix update_u(const WeightVector& wv, const Vector& lambda);

struct OptimizerTrace {
  std::vector<double> objectives;   // one entry per iteration, non-increasing
  double initial_objective = 0.0;   // against the random orthonormal start
  double final_residual = 0.0;      // masked projected-gradient fixed-point residual
  int iterations = 0;
  bool converged = false;
  bool max_iter_exceeded = false;
  bool target_first_nonzero = false;  // lambda_target[0] != 0 was supplied
  int dropped_edges = 0;              // optimized weight below 1e-12
};

struct AlignOptions {
  double tol = 1e-9;
  int max_iter = 5000;
};

/// Majorization-minimization alignment of the coarse graph's spectrum to
/// lambda_target by re-weighting its edges (support fixed to the coarse
/// edge set). Returns the re-weighted coarse graph and the trace.
std::pair<Graph, OptimizerTrace> align_spectrum(const CoarseningResult& cr,
                                                const Vector& lambda_target, Rng& rng,
                                                const AlignOptions& opts = {});

}  // namespace sc
