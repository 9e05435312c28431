#pragma once

#include <cstdint>
#include <string>

#include "sc/coarsen.hpp"
#include "sc/graph.hpp"
#include "sc/rng.hpp"

namespace sc {

struct LossReport {
  std::string loss_name;
  double value = 0.0;
  int k = 0;
  std::uint64_t seed = 0;   // conductance loss only
  int skipped_terms = 0;    // zero projections / zero eigenvalues skipped
};

/// (1/k) sum |f_i^T L f_i - (P f_i)^T L^ (P f_i)| over the first k
/// eigenvectors of the combinatorial Laplacian of g.
LossReport quadratic_loss(const Graph& g, const CoarseningResult& cr, int k);

/// Same shape with the normalized Laplacians and proj = D^^{1/2} P D^{-1/2};
/// test vectors from the normalized Laplacian of g.
LossReport normalized_quadratic_loss(const Graph& g, const CoarseningResult& cr, int k);

/// (1/k) sum |R_L(f_i) - R_DW(proj f_i)| with proj = Gamma^{-1/2} (P+)^T.
/// Terms whose projection collapses to zero are skipped and counted.
LossReport rayleigh_loss(const Graph& g, const CoarseningResult& cr, int k);

/// Mean relative eigenvalue error between L of g and the doubly-weighted
/// Laplacian of the coarse graph. The lambda_1 = 0 term is skipped (as is
/// any further zero eigenvalue on disconnected graphs, counted in the
/// report); requires k <= n^.
LossReport eigenerror(const Graph& g, const CoarseningResult& cr, int k);

/// Mean |phi(S_i) - phi(pi(S_i))| over k random vertex subsets of size
/// uniform in [ceil(N/4), floor(N/2)]. Degenerate coarse images are
/// resampled, at most 100 retries per term.
LossReport conductance_loss(const Graph& g, const CoarseningResult& cr, int k, Rng& rng);

/// Relative improvement (l1 - l2) / l1; may be negative. l1 must be > 0.
double improvement(double l1, double l2);

}  // namespace sc
