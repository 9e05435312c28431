#pragma once

// Shared fixtures and independent oracles for the test suites. Oracles here
// evaluate the defining formulas through explicit dense matrices (P, P+,
// Gamma, D built from scratch) so they stay independent of the library's
// projection/operator code paths.

#include <algorithm>
#include <cmath>
#include <vector>

#include "sc/coarsen.hpp"
#include "sc/dense.hpp"
#include "sc/eigen.hpp"
#include "sc/graph.hpp"
#include "sc/laplacian.hpp"
#include "sc/rng.hpp"

namespace sc::test {

/// Random connected graph: a random spanning tree plus extra edges.
inline Graph random_connected_graph(int n, double extra_edge_prob, Rng& rng,
                                    bool dyadic_weights = false) {
  std::vector<Edge> edges;
  std::vector<char> present(static_cast<std::size_t>(n) * n, 0);
  const auto add = [&](int a, int b, double w) {
    if (a > b) std::swap(a, b);
    if (present[static_cast<std::size_t>(a) * n + b]) return;
    present[static_cast<std::size_t>(a) * n + b] = 1;
    edges.push_back({a, b, w});
  };
  const auto weight = [&]() {
    return dyadic_weights ? rng.uniform_int(1, 128) / 64.0 : rng.uniform(0.1, 2.0);
  };
  for (int v = 1; v < n; ++v) add(static_cast<int>(rng.uniform_int(0, v - 1)), v, weight());
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      if (rng.bernoulli(extra_edge_prob)) add(a, b, weight());
    }
  return Graph(n, std::move(edges));
}

/// Random surjective vertex map onto k supernodes.
inline VertexMap random_map(int n, int k, Rng& rng) {
  std::vector<int> assign(n);
  // Seed each supernode once, then spread the rest uniformly.
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  for (int i = n - 1; i > 0; --i) {
    const int j = static_cast<int>(rng.uniform_int(0, i));
    std::swap(perm[i], perm[j]);
  }
  for (int r = 0; r < k; ++r) assign[perm[r]] = r;
  for (int i = k; i < n; ++i) assign[perm[i]] = static_cast<int>(rng.uniform_int(0, k - 1));
  return VertexMap(std::move(assign), k);
}

inline CoarseningResult random_coarsening(const Graph& g, Rng& rng) {
  const int k = 2 + static_cast<int>(rng.uniform_int(0, std::max(0, g.n() / 2 - 2)));
  return induced_coarse_graph(g, random_map(g.n(), k, rng));
}

/// The six-node toy: two unit triangles joined by the crossing edges (0,3)
/// and (1,4), collapsed to two supernodes of three vertices each.
inline Graph toy_graph() {
  return Graph(6, {{0, 1, 1.0},
                   {0, 2, 1.0},
                   {1, 2, 1.0},
                   {3, 4, 1.0},
                   {3, 5, 1.0},
                   {4, 5, 1.0},
                   {0, 3, 1.0},
                   {1, 4, 1.0}});
}

inline VertexMap toy_map() { return VertexMap({0, 0, 0, 1, 1, 1}, 2); }

inline Matrix diag_matrix(const Vector& d) {
  Matrix m(static_cast<int>(d.size()), static_cast<int>(d.size()));
  for (std::size_t i = 0; i < d.size(); ++i) m(static_cast<int>(i), static_cast<int>(i)) = d[i];
  return m;
}

inline Matrix dense_projection(const VertexMap& map) {
  const auto gamma = map.cluster_sizes();
  Matrix p(map.num_supernodes, map.n());
  for (int i = 0; i < map.n(); ++i) p(map.assignments[i], i) = 1.0 / gamma[map.assignments[i]];
  return p;
}

inline Matrix dense_lift(const VertexMap& map) {
  Matrix p(map.n(), map.num_supernodes);
  for (int i = 0; i < map.n(); ++i) p(i, map.assignments[i]) = 1.0;
  return p;
}

inline double oracle_quadratic_loss(const Graph& g, const CoarseningResult& cr, int k) {
  const SymmetricMatrix l = combinatorial_laplacian(g);
  const SymmetricMatrix lhat = combinatorial_laplacian(cr.coarse);
  const EigenDecomposition eig = sym_eig(l);
  const Matrix p = dense_projection(cr.map);
  double acc = 0.0;
  for (int i = 0; i < k; ++i) {
    const Vector f = eig.vectors.col(i);
    const Vector pf = multiply(p, f);
    const double a = dot(f, multiply(l.as_matrix(), f));
    const double b = dot(pf, multiply(lhat.as_matrix(), pf));
    acc += std::abs(a - b);
  }
  return acc / k;
}

inline double oracle_normalized_quadratic_loss(const Graph& g, const CoarseningResult& cr, int k) {
  const SymmetricMatrix ln = normalized_laplacian(g);
  const SymmetricMatrix lnhat = normalized_laplacian(cr.coarse);
  const EigenDecomposition eig = sym_eig(ln);
  const Vector d = degree_vector(g);
  const Vector dhat = degree_vector(cr.coarse);
  Vector dinv_sqrt(d.size()), dhat_sqrt(dhat.size());
  for (std::size_t i = 0; i < d.size(); ++i) dinv_sqrt[i] = 1.0 / std::sqrt(d[i]);
  for (std::size_t r = 0; r < dhat.size(); ++r) dhat_sqrt[r] = std::sqrt(dhat[r]);
  const Matrix proj = multiply(diag_matrix(dhat_sqrt),
                               multiply(dense_projection(cr.map), diag_matrix(dinv_sqrt)));
  double acc = 0.0;
  for (int i = 0; i < k; ++i) {
    const Vector f = eig.vectors.col(i);
    const Vector pf = multiply(proj, f);
    const double a = dot(f, multiply(ln.as_matrix(), f));
    const double b = dot(pf, multiply(lnhat.as_matrix(), pf));
    acc += std::abs(a - b);
  }
  return acc / k;
}

inline double oracle_rayleigh_loss(const Graph& g, const CoarseningResult& cr, int k) {
  const SymmetricMatrix l = combinatorial_laplacian(g);
  const EigenDecomposition eig = sym_eig(l);
  const auto gamma = cr.map.cluster_sizes();
  Vector gamma_inv_sqrt(gamma.size());
  for (std::size_t r = 0; r < gamma.size(); ++r) gamma_inv_sqrt[r] = 1.0 / std::sqrt(double(gamma[r]));
  const Matrix proj =
      multiply(diag_matrix(gamma_inv_sqrt), dense_lift(cr.map).transposed());
  const SymmetricMatrix lhat = combinatorial_laplacian(cr.coarse);
  const Matrix dw = multiply(diag_matrix(gamma_inv_sqrt),
                             multiply(lhat.as_matrix(), diag_matrix(gamma_inv_sqrt)));
  double acc = 0.0;
  int counted = 0;
  for (int i = 0; i < k; ++i) {
    const Vector f = eig.vectors.col(i);
    const Vector pf = multiply(proj, f);
    const double nf = dot(f, f);
    const double npf = dot(pf, pf);
    if (npf == 0.0) continue;
    const double a = dot(f, multiply(l.as_matrix(), f)) / nf;
    const double b = dot(pf, multiply(dw, pf)) / npf;
    acc += std::abs(a - b);
    ++counted;
  }
  return counted > 0 ? acc / counted : 0.0;
}

/// Conductance from the dense weight matrix, no edge-list shortcuts.
inline double oracle_conductance(const Graph& g, const std::vector<int>& subset) {
  const SymmetricMatrix w = g.weight_matrix();
  std::vector<char> in_s(g.n(), 0);
  for (int v : subset) in_s[v] = 1;
  double cut = 0.0, vol_s = 0.0, vol_rest = 0.0;
  for (int i = 0; i < g.n(); ++i) {
    for (int j = 0; j < g.n(); ++j) {
      if (in_s[i] && !in_s[j]) cut += w(i, j);
      (in_s[i] ? vol_s : vol_rest) += w(i, j);
    }
  }
  return cut / std::min(vol_s, vol_rest);
}

/// Relabels vertices by the permutation and rewrites the map accordingly.
inline std::pair<Graph, VertexMap> permuted_instance(const Graph& g, const VertexMap& map,
                                                     const std::vector<int>& perm) {
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) edges.push_back({perm[e.u], perm[e.v], e.w});
  Vector vw(g.n());
  for (int i = 0; i < g.n(); ++i) vw[perm[i]] = g.vertex_weights()[i];
  std::vector<int> assign(g.n());
  for (int i = 0; i < g.n(); ++i) assign[perm[i]] = map.assignments[i];
  return {Graph(g.n(), std::move(edges), std::move(vw)),
          VertexMap(std::move(assign), map.num_supernodes)};
}

inline std::vector<int> random_permutation(int n, Rng& rng) {
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  for (int i = n - 1; i > 0; --i) {
    const int j = static_cast<int>(rng.uniform_int(0, i));
    std::swap(perm[i], perm[j]);
  }
  return perm;
}

inline Matrix random_matrix(int rows, int cols, Rng& rng) {
  Matrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = rng.normal();
  return m;
}

inline Vector random_vector(int n, Rng& rng) {
  Vector v(n);
  for (int i = 0; i < n; ++i) v[i] = rng.normal();
  return v;
}

}  // namespace sc::test
