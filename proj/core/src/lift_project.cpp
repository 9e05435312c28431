#include "sc/lift_project.hpp"

#include <cmath>

#include "sc/errors.hpp"
#include "sc/laplacian.hpp"

namespace sc {

namespace {

Vector sqrt_cluster_sizes(const VertexMap& map) {
  const std::vector<int> gamma = map.cluster_sizes();
  Vector s(gamma.size());
  for (std::size_t r = 0; r < gamma.size(); ++r) s[r] = std::sqrt(static_cast<double>(gamma[r]));
  return s;
}

void check_dims(const Graph& g, const CoarseningResult& cr) {
  if (cr.map.n() != g.n()) throw DimensionMismatch("coarsening does not match graph");
  if (cr.coarse.n() != cr.map.num_supernodes)
    throw DimensionMismatch("coarse graph does not match vertex map");
}

}  // namespace

SymmetricMatrix coarse_operator(OperatorChoice choice, const Graph& g, const CoarseningResult& cr) {
  check_dims(g, cr);
  switch (choice) {
    case OperatorChoice::CombQuadratic:
      return combinatorial_laplacian(cr.coarse);
    case OperatorChoice::DoublyWeightedRayleigh: {
      // Gamma from the vertex map, independent of stored vertex weights.
      const std::vector<int> gamma = cr.map.cluster_sizes();
      const SymmetricMatrix lhat = combinatorial_laplacian(cr.coarse);
      SymmetricMatrix out(cr.coarse.n());
      for (int i = 0; i < cr.coarse.n(); ++i)
        for (int j = i; j < cr.coarse.n(); ++j)
          out.set(i, j, lhat(i, j) / std::sqrt(static_cast<double>(gamma[i]) * gamma[j]));
      return out;
    }
    case OperatorChoice::NormalizedQuadratic:
      (void)normalized_laplacian(g);  // surfaces IsolatedVertex on the fine graph too
      return normalized_laplacian(cr.coarse);
  }
  throw Error("unknown operator choice");
}

Vector lift(OperatorChoice choice, const Graph& g, const CoarseningResult& cr, const Vector& xhat) {
  check_dims(g, cr);
  if (static_cast<int>(xhat.size()) != cr.coarse.n())
    throw DimensionMismatch("lift input length != coarse size");
  const std::vector<int>& pi = cr.map.assignments;
  Vector x(g.n());
  switch (choice) {
    case OperatorChoice::CombQuadratic: {
      for (int i = 0; i < g.n(); ++i) x[i] = xhat[pi[i]];
      return x;
    }
    case OperatorChoice::DoublyWeightedRayleigh: {
      const Vector s = sqrt_cluster_sizes(cr.map);
      for (int i = 0; i < g.n(); ++i) x[i] = xhat[pi[i]] / s[pi[i]];
      return x;
    }
    case OperatorChoice::NormalizedQuadratic: {
      const Vector d = degree_vector(g);
      const Vector dhat = degree_vector(cr.coarse);
      for (int i = 0; i < g.n(); ++i) {
        if (dhat[pi[i]] <= 0.0) throw IsolatedVertex(pi[i]);
        x[i] = std::sqrt(d[i]) * xhat[pi[i]] / std::sqrt(dhat[pi[i]]);
      }
      return x;
    }
  }
  throw Error("unknown operator choice");
}

Vector project(OperatorChoice choice, const Graph& g, const CoarseningResult& cr, const Vector& x) {
  check_dims(g, cr);
  if (static_cast<int>(x.size()) != g.n())
    throw DimensionMismatch("project input length != graph size");
  const std::vector<int>& pi = cr.map.assignments;
  const std::vector<int> gamma = cr.map.cluster_sizes();
  Vector xhat(cr.coarse.n(), 0.0);
  switch (choice) {
    case OperatorChoice::CombQuadratic: {
      for (int i = 0; i < g.n(); ++i) xhat[pi[i]] += x[i];
      for (int r = 0; r < cr.coarse.n(); ++r) xhat[r] /= gamma[r];
      return xhat;
    }
    case OperatorChoice::DoublyWeightedRayleigh: {
      // Gamma^{-1/2} (P+)^T: plain cluster sums scaled by 1/sqrt(gamma).
      for (int i = 0; i < g.n(); ++i) xhat[pi[i]] += x[i];
      const Vector s = sqrt_cluster_sizes(cr.map);
      for (int r = 0; r < cr.coarse.n(); ++r) xhat[r] /= s[r];
      return xhat;
    }
    case OperatorChoice::NormalizedQuadratic: {
      const Vector d = degree_vector(g);
      const Vector dhat = degree_vector(cr.coarse);
      for (int i = 0; i < g.n(); ++i) {
        if (d[i] <= 0.0) throw IsolatedVertex(i);
        xhat[pi[i]] += x[i] / std::sqrt(d[i]);
      }
      for (int r = 0; r < cr.coarse.n(); ++r) {
        xhat[r] *= std::sqrt(dhat[r]) / gamma[r];
      }
      return xhat;
    }
  }
  throw Error("unknown operator choice");
}

}  // namespace sc
