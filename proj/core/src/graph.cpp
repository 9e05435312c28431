#include "sc/graph.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace sc {

Graph::Graph(int n, std::vector<Edge> edges)
    : Graph(n, std::move(edges), Vector(static_cast<std::size_t>(n), 1.0)) {}

Graph::Graph(int n, std::vector<Edge> edges, Vector vertex_weights)
    : n_(n), edges_(std::move(edges)), vertex_weights_(std::move(vertex_weights)) {
  for (Edge& e : edges_) {
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) {
    return a.u != b.u ? a.u < b.u : a.v < b.v;
  });
  validate();
}

void Graph::validate() const {
  if (n_ < 0) throw Error("negative vertex count");
  if (static_cast<int>(vertex_weights_.size()) != n_)
    throw DimensionMismatch("vertex_weights length must equal n");
  for (int i = 0; i < n_; ++i) {
    if (!(vertex_weights_[i] > 0.0)) throw NonpositiveVertexWeight(i);
  }
  for (std::size_t k = 0; k < edges_.size(); ++k) {
    const Edge& e = edges_[k];
    if (e.u < 0 || e.v >= n_) throw IndexOutOfRange("edge endpoint out of range");
    if (e.u == e.v) throw Error("self-loop at vertex " + std::to_string(e.u));
    if (!(e.w > 0.0)) throw Error("nonpositive edge weight on (" + std::to_string(e.u) + "," +
                                  std::to_string(e.v) + ")");
    if (k > 0 && edges_[k - 1].u == e.u && edges_[k - 1].v == e.v)
      throw Error("duplicate edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ")");
  }
}

SymmetricMatrix Graph::weight_matrix() const {
  SymmetricMatrix w(n_);
  for (const Edge& e : edges_) w.set(e.u, e.v, e.w);
  return w;
}

std::vector<std::vector<std::pair<int, double>>> Graph::adjacency() const {
  std::vector<std::vector<std::pair<int, double>>> adj(n_);
  for (const Edge& e : edges_) {
    adj[e.u].emplace_back(e.v, e.w);
    adj[e.v].emplace_back(e.u, e.w);
  }
  return adj;
}

Vector degree_vector(const Graph& g) {
  Vector d(g.n(), 0.0);
  for (const Edge& e : g.edges()) {
    d[e.u] += e.w;
    d[e.v] += e.w;
  }
  return d;
}

}  // namespace sc
