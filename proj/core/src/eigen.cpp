#include "sc/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "sc/errors.hpp"

namespace sc {

namespace {

double off_diagonal_frobenius(const Matrix& a) {
  double s = 0.0;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = i + 1; j < a.cols(); ++j) s += a(i, j) * a(i, j);
  return std::sqrt(2.0 * s);
}

void fix_sign(Matrix& v, int col) {
  const int n = v.rows();
  int arg = 0;
  double best = -1.0;
  for (int i = 0; i < n; ++i) {
    const double mag = std::abs(v(i, col));
    if (mag > best) {
      best = mag;
      arg = i;
    }
  }
  if (v(arg, col) < 0.0) {
    for (int i = 0; i < n; ++i) v(i, col) = -v(i, col);
  }
}

}  // namespace

EigenDecomposition sym_eig(const SymmetricMatrix& m) {
  const int n = m.n();
  Matrix a = m.as_matrix();
  Matrix v = Matrix::identity(n);

  const double scale = std::max(1.0, frobenius_norm(a));
  const double tol = 1e-11 * scale;
  constexpr int kMaxSweeps = 100;

  bool converged = n < 2 || off_diagonal_frobenius(a) <= tol;
  for (int sweep = 0; sweep < kMaxSweeps && !converged; ++sweep) {
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        // Classic two-sided rotation zeroing a(p,q).
        const double theta = 0.5 * (a(q, q) - a(p, p)) / apq;
        double t = 1.0 / (std::abs(theta) + std::sqrt(1.0 + theta * theta));
        if (theta < 0.0) t = -t;
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        const double tau = s / (1.0 + c);

        const double h = t * apq;
        a(p, p) -= h;
        a(q, q) += h;
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        for (int j = 0; j < n; ++j) {
          if (j == p || j == q) continue;
          const double ajp = a(j, p);
          const double ajq = a(j, q);
          a(j, p) = ajp - s * (ajq + ajp * tau);
          a(p, j) = a(j, p);
          a(j, q) = ajq + s * (ajp - ajq * tau);
          a(q, j) = a(j, q);
        }
        for (int j = 0; j < n; ++j) {
          const double vjp = v(j, p);
          const double vjq = v(j, q);
          v(j, p) = vjp - s * (vjq + vjp * tau);
          v(j, q) = vjq + s * (vjp - vjq * tau);
        }
      }
    }
    converged = off_diagonal_frobenius(a) <= tol;
  }
  if (!converged) throw NoConvergence("Jacobi sweep limit reached");

  for (int k = 0; k < n; ++k) fix_sign(v, k);

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int x, int y) {
    if (a(x, x) != a(y, y)) return a(x, x) < a(y, y);
    // Equal values: order by the sign-fixed first differing entry, larger
    // first (keeps the zero matrix's eigenbasis at the identity).
    for (int i = 0; i < n; ++i) {
      if (v(i, x) != v(i, y)) return v(i, x) > v(i, y);
    }
    return false;
  });

  EigenDecomposition out;
  out.values.resize(n);
  out.vectors = Matrix(n, n);
  for (int k = 0; k < n; ++k) {
    out.values[k] = a(order[k], order[k]);
    for (int i = 0; i < n; ++i) out.vectors(i, k) = v(i, order[k]);
  }
  return out;
}

}  // namespace sc
