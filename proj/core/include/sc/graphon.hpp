#pragma once

#include <cstdint>
#include <vector>

#include "sc/dense.hpp"
#include "sc/ign.hpp"
#include "sc/rng.hpp"

namespace sc {

/// Symmetric kernel on [0,1]^2 given by a closed-form model.
class Graphon {
public:
  enum class Kind { Constant, SBM, Lipschitz, PiecewiseLipschitz };

  static Graphon constant(double p);
  /// boundaries are the upper block edges in (0,1], e.g. {0.5, 1.0} for two
  /// equal blocks; probs is the block-probability matrix.
  static Graphon sbm(std::vector<double> boundaries, Matrix probs);
  /// W(u,v) = (u + v + 1) / 4.
  static Graphon lipschitz();
  /// W(u,v) = ((u mod 1/3) + (v mod 1/3) + 1) / 4.
  static Graphon piecewise_lipschitz();

  Kind kind() const { return kind_; }
  double evaluate(double u, double v) const;

private:
  Graphon() = default;
  Kind kind_ = Kind::Constant;
  double p_ = 0.0;
  std::vector<double> boundaries_;
  Matrix probs_;
};

struct SampleScheme {
  enum class Grid { Fixed, Random };
  enum class Observation { EdgeWeight, Bernoulli };
  Grid grid = Grid::Fixed;
  Observation observation = Observation::EdgeWeight;
};

/// Fixed grid u_i = i/n (0-based) or the order statistics of n uniforms.
Vector sample_grid(int n, SampleScheme::Grid grid, Rng& rng);

/// Entries W(u_i, u_j), including the diagonal. EdgeWeight observation only.
SymmetricMatrix sample_weight_matrix(const Graphon& wg, int n, const SampleScheme& scheme,
                                     Rng& rng);

/// 0-1 symmetric matrix with a_ij ~ Bernoulli(W(u_i,u_j)) below the
/// diagonal, mirrored, zero diagonal. Bernoulli observation only.
SymmetricMatrix sample_adjacency(const Graphon& wg, int n, const SampleScheme& scheme, Rng& rng);

/// Neighborhood-smoothing estimate of the edge-probability matrix from a
/// 0-1 adjacency. Deterministic given a; output symmetric in [0,1].
SymmetricMatrix estimate_probabilities(const SymmetricMatrix& a);

/// Fine fixed-grid evaluation of the graphon, used as the reference input.
SymmetricMatrix discretize_graphon(const Graphon& wg, int n_ref);

/// d_{2,inf}(P, Q) = max_i n^{-1/2} |P_i - Q_i|_2.
double d2_inf(const SymmetricMatrix& p, const SymmetricMatrix& q);

enum class ConvergenceMode { EwFixed, EwRandom, EpRaw, EpSmoothed };

struct ConvergencePoint {
  int n = 0;
  int seed = 0;
  double error = 0.0;
};

struct ConvergenceOptions {
  int n_ref = 1024;
  std::uint64_t master_seed = 0;
};

/// For each (n, seed), the 2-norm distance between the IGN's invariant
/// output on the sampled input and on the fine-grid reference.
std::vector<ConvergencePoint> convergence_experiment(const Graphon& wg, const IGNModel& model,
                                                     const std::vector<int>& n_list,
                                                     ConvergenceMode mode, int seeds,
                                                     const ConvergenceOptions& opts = {});

}  // namespace sc
