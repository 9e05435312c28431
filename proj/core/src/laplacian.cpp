#include "sc/laplacian.hpp"

#include <cmath>

#include "sc/errors.hpp"

namespace sc {

SymmetricMatrix combinatorial_laplacian(const Graph& g) {
  SymmetricMatrix l(g.n());
  for (const Edge& e : g.edges()) {
    l.set(e.u, e.v, -e.w);
    l.add(e.u, e.u, e.w);
    l.add(e.v, e.v, e.w);
  }
  return l;
}

SymmetricMatrix normalized_laplacian(const Graph& g) {
  const Vector d = degree_vector(g);
  for (int i = 0; i < g.n(); ++i) {
    if (d[i] <= 0.0) throw IsolatedVertex(i);
  }
  SymmetricMatrix l(g.n());
  for (int i = 0; i < g.n(); ++i) l.set(i, i, 1.0);
  for (const Edge& e : g.edges()) {
    l.set(e.u, e.v, -e.w / std::sqrt(d[e.u] * d[e.v]));
  }
  return l;
}

SymmetricMatrix doubly_weighted_laplacian(const Graph& g) {
  const Vector& gamma = g.vertex_weights();
  for (int i = 0; i < g.n(); ++i) {
    if (!(gamma[i] > 0.0)) throw NonpositiveVertexWeight(i);
  }
  SymmetricMatrix l = combinatorial_laplacian(g);
  SymmetricMatrix out(g.n());
  for (int i = 0; i < g.n(); ++i) {
    for (int j = i; j < g.n(); ++j) {
      out.set(i, j, l(i, j) / std::sqrt(gamma[i] * gamma[j]));
    }
  }
  return out;
}

double quadratic_form(const SymmetricMatrix& m, const Vector& x) {
  if (static_cast<int>(x.size()) != m.n())
    throw DimensionMismatch("quadratic_form: vector length != matrix dimension");
  return dot(x, multiply(m, x));
}

double rayleigh_quotient(const SymmetricMatrix& m, const Vector& x) {
  const double xx = dot(x, x);
  if (xx == 0.0) throw ZeroVector();
  return quadratic_form(m, x) / xx;
}

double conductance(const Graph& g, const std::vector<int>& subset) {
  std::vector<char> in_s(g.n(), 0);
  int count = 0;
  for (int v : subset) {
    if (v < 0 || v >= g.n()) throw IndexOutOfRange("conductance: vertex out of range");
    if (!in_s[v]) {
      in_s[v] = 1;
      ++count;
    }
  }
  if (count == 0 || count == g.n()) throw DegenerateSubset("subset must be proper and nonempty");

  const Vector d = degree_vector(g);
  double cut = 0.0;
  for (const Edge& e : g.edges()) {
    if (in_s[e.u] != in_s[e.v]) cut += e.w;
  }
  double vol_s = 0.0, vol_rest = 0.0;
  for (int i = 0; i < g.n(); ++i) (in_s[i] ? vol_s : vol_rest) += d[i];
  const double denom = std::min(vol_s, vol_rest);
  if (denom <= 0.0) throw DegenerateSubset("zero-volume side");
  return cut / denom;
}

}  // namespace sc
