#include "sc/spectrum_opt.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "sc/eigen.hpp"
#include "sc/errors.hpp"

namespace sc {

int weight_index(int n, int a, int b) {
  if (a > b) std::swap(a, b);
  if (a < 0 || b >= n || a == b) throw IndexOutOfRange("weight_index: bad vertex pair");
  // 1-based column-major lower triangle: k = i - j + (j-1)(2n-j)/2 for the
  // pair (i, j) = (b+1, a+1); shifted to 0-based.
  return b - a - 1 + a * (2 * n - a - 1) / 2;
}

WeightVector WeightVector::from_graph(const Graph& g) {
  WeightVector wv;
  wv.n = g.n();
  const int dim = g.n() * (g.n() - 1) / 2;
  wv.w.assign(dim, 0.0);
  wv.mask.assign(dim, false);
  for (const Edge& e : g.edges()) {
    const int k = weight_index(g.n(), e.u, e.v);
    wv.w[k] = e.w;
    wv.mask[k] = true;
  }
  return wv;
}

void WeightVector::remask() {
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (!mask[k]) w[k] = 0.0;
  }
}

SymmetricMatrix lap_from_weights(const WeightVector& wv) {
  SymmetricMatrix l(wv.n);
  for (int a = 0; a < wv.n; ++a) {
    for (int b = a + 1; b < wv.n; ++b) {
      const double w = wv.w[weight_index(wv.n, a, b)];
      if (w == 0.0) continue;
      l.set(a, b, -w);
      l.add(a, a, w);
      l.add(b, b, w);
    }
  }
  return l;
}

Vector lap_adjoint(const SymmetricMatrix& y) {
  const int n = y.n();
  Vector out(n * (n - 1) / 2);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      out[weight_index(n, a, b)] = y(a, a) + y(b, b) - 2.0 * y(a, b);
  return out;
}

namespace {

Matrix target_gram(const Matrix& u, const Vector& lambda) {
  // U diag(lambda) U^T
  const int n = u.rows();
  Matrix scaled(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) scaled(i, j) = u(i, j) * lambda[j];
  return multiply(scaled, u.transposed());
}

void check_orthonormal(const Matrix& u) {
  const Matrix gram = multiply(u.transposed(), u);
  double defect = 0.0;
  for (int i = 0; i < gram.rows(); ++i)
    for (int j = 0; j < gram.cols(); ++j)
      defect = std::max(defect, std::abs(gram(i, j) - (i == j ? 1.0 : 0.0)));
  if (defect > 1e-8) throw NonOrthonormalU(defect);
}

Vector masked_gradient(const WeightVector& wv, const Matrix& u, const Vector& lambda) {
  const SymmetricMatrix lw = lap_from_weights(wv);
  const Matrix diff = subtract(lw.as_matrix(), target_gram(u, lambda));
  return lap_adjoint(SymmetricMatrix::from(diff));
}

/// (w - grad/(2n)) clamped at 0, then re-masked.
WeightVector projected_step(const WeightVector& wv, const Vector& grad) {
  const double step = 1.0 / (2.0 * wv.n);
  WeightVector next = wv;
  for (std::size_t k = 0; k < next.w.size(); ++k) {
    next.w[k] = std::max(0.0, next.w[k] - step * grad[k]);
  }
  next.remask();
  return next;
}

double step_residual(const WeightVector& wv, const Matrix& u, const Vector& lambda) {
  const WeightVector next = projected_step(wv, masked_gradient(wv, u, lambda));
  double s = 0.0;
  for (std::size_t k = 0; k < wv.w.size(); ++k) {
    const double d = wv.w[k] - next.w[k];
    s += d * d;
  }
  return std::sqrt(s);
}

Matrix random_orthonormal(int n, Rng& rng) {
  // Gram-Schmidt on a standard-normal matrix.
  Matrix a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a(i, j) = rng.normal();
  for (int j = 0; j < n; ++j) {
    for (int prev = 0; prev < j; ++prev) {
      double proj = 0.0;
      for (int i = 0; i < n; ++i) proj += a(i, j) * a(i, prev);
      for (int i = 0; i < n; ++i) a(i, j) -= proj * a(i, prev);
    }
    double nrm = 0.0;
    for (int i = 0; i < n; ++i) nrm += a(i, j) * a(i, j);
    nrm = std::sqrt(nrm);
    if (nrm < 1e-12) {
      // Degenerate draw; fall back to a unit basis column.
      for (int i = 0; i < n; ++i) a(i, j) = (i == j) ? 1.0 : 0.0;
      for (int prev = 0; prev < j; ++prev) {
        double proj = 0.0;
        for (int i = 0; i < n; ++i) proj += a(i, j) * a(i, prev);
        for (int i = 0; i < n; ++i) a(i, j) -= proj * a(i, prev);
      }
      nrm = 0.0;
      for (int i = 0; i < n; ++i) nrm += a(i, j) * a(i, j);
      nrm = std::sqrt(nrm);
    }
    for (int i = 0; i < n; ++i) a(i, j) /= nrm;
  }
  return a;
}

}  // namespace

double objective(const WeightVector& wv, const Matrix& u, const Vector& lambda) {
  if (u.rows() != wv.n || u.cols() != wv.n || static_cast<int>(lambda.size()) != wv.n)
    throw DimensionMismatch("objective: shape mismatch");
  check_orthonormal(u);
  const SymmetricMatrix lw = lap_from_weights(wv);
  const Matrix diff = subtract(lw.as_matrix(), target_gram(u, lambda));
  const double f = frobenius_norm(diff);
  return f * f;
}

WeightVector update_w(const WeightVector& wv, const Matrix& u, const Vector& lambda) {
  return projected_step(wv, masked_gradient(wv, u, lambda));
}

Matrix update_u(const WeightVector& wv, const Vector& lambda) {
  if (static_cast<int>(lambda.size()) != wv.n)
    throw DimensionMismatch("update_u: lambda length != n");
  const EigenDecomposition eig = sym_eig(lap_from_weights(wv));
  // Rank pairing: the j-th smallest target gets the j-th smallest eigenvector.
  std::vector<int> rank(wv.n);
  std::iota(rank.begin(), rank.end(), 0);
  std::stable_sort(rank.begin(), rank.end(),
                   [&](int a, int b) { return lambda[a] < lambda[b]; });
  Matrix u(wv.n, wv.n);
  for (int j = 0; j < wv.n; ++j) {
    const int col = rank[j];  // target position receiving the j-th smallest eigenvalue
    for (int i = 0; i < wv.n; ++i) u(i, col) = eig.vectors(i, j);
  }
  return u;
}

std::pair<Graph, OptimizerTrace> align_spectrum(const CoarseningResult& cr,
                                                const Vector& lambda_target, Rng& rng,
                                                const AlignOptions& opts) {
  const Graph& coarse = cr.coarse;
  if (static_cast<int>(lambda_target.size()) != coarse.n())
    throw DimensionMismatch("lambda_target length != coarse size");
  if (!(opts.tol > 0.0)) throw Error("tol must be positive");

  WeightVector wv = WeightVector::from_graph(coarse);
  OptimizerTrace trace;
  trace.target_first_nonzero =
      std::abs(*std::min_element(lambda_target.begin(), lambda_target.end())) > 1e-12;

  Matrix u = random_orthonormal(coarse.n(), rng);
  trace.initial_objective = objective(wv, u, lambda_target);

  // Alternating minimization: re-align U to the current Laplacian, then run
  // the projected-gradient w phase on that fixed alignment until its descent
  // stalls. Converged once a fresh re-alignment no longer moves the
  // objective and the masked fixed-point residual is down at the tolerance.
  u = update_u(wv, lambda_target);
  int t = 0;
  while (t < opts.max_iter && !trace.converged) {
    double f_local = objective(wv, u, lambda_target);
    bool stalled = false;
    while (t < opts.max_iter) {
      wv = update_w(wv, u, lambda_target);
      ++t;
      const double f = objective(wv, u, lambda_target);
      trace.objectives.push_back(f);
      const double rel = std::abs(f_local - f) / (1.0 + f_local);
      f_local = f;
      if (rel < opts.tol) {
        stalled = true;
        break;
      }
    }
    const Matrix u_next = update_u(wv, lambda_target);
    const double f_next = objective(wv, u_next, lambda_target);
    if (stalled && std::abs(f_local - f_next) / (1.0 + f_local) < opts.tol) {
      trace.final_residual = step_residual(wv, u_next, lambda_target);
      if (trace.final_residual <= 10.0 * opts.tol) trace.converged = true;
    }
    u = u_next;
  }
  trace.iterations = t;
  if (!trace.converged) {
    trace.max_iter_exceeded = true;
    trace.final_residual = step_residual(wv, u, lambda_target);
  }

  // Rebuild the coarse graph on the surviving support.
  std::vector<Edge> edges;
  for (const Edge& e : coarse.edges()) {
    const double w = wv.w[weight_index(wv.n, e.u, e.v)];
    if (w < 1e-12) {
      ++trace.dropped_edges;
      continue;
    }
    edges.push_back({e.u, e.v, w});
  }
  Graph result(coarse.n(), std::move(edges), coarse.vertex_weights());
  return {std::move(result), std::move(trace)};
}

}  // namespace sc
