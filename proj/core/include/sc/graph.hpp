#pragma once

#include <vector>

#include "sc/dense.hpp"
#include "sc/errors.hpp"

namespace sc {

struct Edge {
  int u;  // u < v
  int v;
  double w;
};

/// Undirected weighted graph with optional per-vertex weights. Vertex
/// weights default to 1 and carry cluster sizes on coarse graphs, so a
/// coarse graph travels with its own Gamma.
///
/// Construction validates: no self-loops, no duplicate edges, all edge and
/// vertex weights strictly positive. Immutable afterwards.
class Graph {
public:
  Graph() = default;
  Graph(int n, std::vector<Edge> edges);
  Graph(int n, std::vector<Edge> edges, Vector vertex_weights);

  int n() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const Vector& vertex_weights() const { return vertex_weights_; }

  /// Dense edge-weight matrix W.
  SymmetricMatrix weight_matrix() const;

  /// Adjacency lists as (neighbor, weight) pairs.
  std::vector<std::vector<std::pair<int, double>>> adjacency() const;

private:
  void validate() const;

  int n_ = 0;
  std::vector<Edge> edges_;
  Vector vertex_weights_;
};

/// Weighted degree of each vertex; isolated vertices yield 0.
Vector degree_vector(const Graph& g);

}  // namespace sc
