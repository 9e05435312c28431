#include "sc/losses.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "sc/eigen.hpp"
#include "sc/errors.hpp"
#include "sc/laplacian.hpp"
#include "sc/lift_project.hpp"

namespace sc {

namespace {

void check_k(int k, int limit) {
  if (k < 1 || k > limit) throw KTooLarge("k must lie in [1, " + std::to_string(limit) + "]");
}

}  // namespace

LossReport quadratic_loss(const Graph& g, const CoarseningResult& cr, int k) {
  check_k(k, g.n());
  const SymmetricMatrix l = combinatorial_laplacian(g);
  const SymmetricMatrix lhat = coarse_operator(OperatorChoice::CombQuadratic, g, cr);
  const EigenDecomposition eig = sym_eig(l);

  double acc = 0.0;
  for (int i = 0; i < k; ++i) {
    const Vector f = eig.vectors.col(i);
    const Vector pf = project(OperatorChoice::CombQuadratic, g, cr, f);
    acc += std::abs(quadratic_form(l, f) - quadratic_form(lhat, pf));
  }
  return {"quad", acc / k, k, 0, 0};
}

LossReport normalized_quadratic_loss(const Graph& g, const CoarseningResult& cr, int k) {
  check_k(k, g.n());
  const SymmetricMatrix ln = normalized_laplacian(g);
  const SymmetricMatrix lnhat = coarse_operator(OperatorChoice::NormalizedQuadratic, g, cr);
  const EigenDecomposition eig = sym_eig(ln);

  double acc = 0.0;
  for (int i = 0; i < k; ++i) {
    const Vector f = eig.vectors.col(i);
    const Vector pf = project(OperatorChoice::NormalizedQuadratic, g, cr, f);
    acc += std::abs(quadratic_form(ln, f) - quadratic_form(lnhat, pf));
  }
  return {"nquad", acc / k, k, 0, 0};
}

LossReport rayleigh_loss(const Graph& g, const CoarseningResult& cr, int k) {
  check_k(k, g.n());
  const SymmetricMatrix l = combinatorial_laplacian(g);
  const SymmetricMatrix dw = coarse_operator(OperatorChoice::DoublyWeightedRayleigh, g, cr);
  const EigenDecomposition eig = sym_eig(l);

  double acc = 0.0;
  int counted = 0;
  int skipped = 0;
  for (int i = 0; i < k; ++i) {
    const Vector f = eig.vectors.col(i);
    const Vector pf = project(OperatorChoice::DoublyWeightedRayleigh, g, cr, f);
    if (norm2(pf) == 0.0) {
      ++skipped;
      continue;
    }
    acc += std::abs(rayleigh_quotient(l, f) - rayleigh_quotient(dw, pf));
    ++counted;
  }
  return {"ray", counted > 0 ? acc / counted : 0.0, k, 0, skipped};
}

LossReport eigenerror(const Graph& g, const CoarseningResult& cr, int k) {
  check_k(k, cr.coarse.n());
  const EigenDecomposition fine = sym_eig(combinatorial_laplacian(g));
  const EigenDecomposition coarse = sym_eig(doubly_weighted_laplacian(cr.coarse));

  double acc = 0.0;
  int counted = 0;
  int skipped = 0;
  // lambda_1 = 0 makes the relative error undefined; the term is dropped,
  // as is any further zero eigenvalue (disconnected input).
  for (int i = 1; i < k; ++i) {
    const double lam = fine.values[i];
    if (lam <= 0.0) {
      ++skipped;
      continue;
    }
    acc += std::abs(coarse.values[i] - lam) / lam;
    ++counted;
  }
  return {"eig", counted > 0 ? acc / counted : 0.0, k, 0, skipped};
}

LossReport conductance_loss(const Graph& g, const CoarseningResult& cr, int k, Rng& rng) {
  if (k < 1) throw KTooLarge("k must be >= 1");
  if (g.n() < 4) throw DegenerateSubset("conductance loss needs at least 4 vertices");

  const int lo = (g.n() + 3) / 4;
  const int hi = g.n() / 2;
  const std::uint64_t seed = rng.seed();

  double acc = 0.0;
  for (int t = 0; t < k; ++t) {
    bool done = false;
    for (int attempt = 0; attempt < 100 && !done; ++attempt) {
      const int size = static_cast<int>(rng.uniform_int(lo, hi));
      // Partial Fisher-Yates draw of `size` distinct vertices.
      std::vector<int> perm(g.n());
      std::iota(perm.begin(), perm.end(), 0);
      for (int i = 0; i < size; ++i) {
        const int j = static_cast<int>(rng.uniform_int(i, g.n() - 1));
        std::swap(perm[i], perm[j]);
      }
      std::vector<int> subset(perm.begin(), perm.begin() + size);

      std::vector<char> mark(cr.coarse.n(), 0);
      for (int v : subset) mark[cr.map.assignments[v]] = 1;
      std::vector<int> image;
      for (int r = 0; r < cr.coarse.n(); ++r) {
        if (mark[r]) image.push_back(r);
      }
      if (static_cast<int>(image.size()) == cr.coarse.n()) continue;  // collapsed to everything

      try {
        const double phi = conductance(g, subset);
        const double phi_hat = conductance(cr.coarse, image);
        acc += std::abs(phi - phi_hat);
        done = true;
      } catch (const DegenerateSubset&) {
        // zero-volume side; resample
      }
    }
    if (!done) throw ResampleExhausted("conductance subset resampling exhausted");
  }
  return {"cond", acc / k, k, seed, 0};
}

double improvement(double l1, double l2) {
  if (!(l1 > 0.0)) throw NonpositiveBaseline();
  return (l1 - l2) / l1;
}

}  // namespace sc
