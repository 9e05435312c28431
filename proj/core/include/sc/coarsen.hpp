#pragma once

#include <utility>
#include <vector>

#include "sc/dense.hpp"
#include "sc/graph.hpp"
#include "sc/rng.hpp"

namespace sc {

/// Surjection pi from original vertices onto supernode ids [0, num_supernodes).
struct VertexMap {
  std::vector<int> assignments;
  int num_supernodes = 0;

  VertexMap() = default;
  VertexMap(std::vector<int> a, int k);

  static VertexMap identity(int n);

  int n() const { return static_cast<int>(assignments.size()); }

  /// Cluster sizes gamma_r = |pi^{-1}(r)|, all >= 1.
  std::vector<int> cluster_sizes() const;
};

struct CoarseningResult {
  VertexMap map;
  Graph coarse;  // vertex_weights carry the merged weights (gamma on originals)
  int levels = 0;
  int unreachable_warnings = 0;  // Baseline only: vertices assigned to a random landmark
};

/// P[r,i] = 1/gamma_r if pi(i) = r, else 0. Rows sum to 1.
Matrix projection_matrix(const VertexMap& map);

/// P+[i,r] = 1 iff pi(i) = r. Satisfies P P+ = I exactly.
Matrix lift_matrix(const VertexMap& map);

/// Contracts clusters: coarse edge (r,s) sums the weights of all crossing
/// edges, intra-cluster edges vanish, vertex weights add.
CoarseningResult induced_coarse_graph(const Graph& g, const VertexMap& map);

enum class CoarsenMethod {
  Baseline,
  HeavyEdge,
  AlgebraicDistance,
  Affinity,
  LocalVarEdge,
  LocalVarNeigh,
};

enum class ScoreMethod { HeavyEdge, AlgebraicDistance, Affinity };
enum class LocalVarVariant { Edge, Neighborhood };

struct ScoreParams {
  int test_vectors = 10;  // Q
  int sweeps = 20;        // Jacobi relaxation sweeps (algebraic distance)
  double omega = 0.5;
};

/// One score per edge of g (index-aligned with g.edges()); larger means
/// contract first. Algebraic distances are negated to fit that contract.
Vector contraction_scores(const Graph& g, ScoreMethod method, Rng& rng,
                          const ScoreParams& params = {});

/// Greedy maximal matching by descending score, ties broken by
/// lexicographic (u, v).
std::vector<std::pair<int, int>> greedy_matching(const Graph& g, const Vector& scores);

/// Candidate contraction sets with their local-variation cost; smaller cost
/// means contract first. Candidates are edges or closed neighborhoods;
/// singletons are excluded. k is the number of Laplacian test vectors.
std::vector<std::pair<std::vector<int>, double>> local_variation_costs(
    const Graph& g, LocalVarVariant variant, int k = 10);

/// Runs contraction levels until the supernode count reaches
/// ceil((1 - ratio) * N). Deterministic given (g, method, ratio, seed).
CoarseningResult coarsen(const Graph& g, CoarsenMethod method, double ratio, Rng& rng);

}  // namespace sc
