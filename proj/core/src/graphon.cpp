#include "sc/graphon.hpp"

#include <algorithm>
#include <cmath>

#include "sc/errors.hpp"

namespace sc {

Graphon Graphon::constant(double p) {
  if (p < 0.0 || p > 1.0) throw OutOfDomain("constant graphon needs p in [0,1]");
  Graphon g;
  g.kind_ = Kind::Constant;
  g.p_ = p;
  return g;
}

Graphon Graphon::sbm(std::vector<double> boundaries, Matrix probs) {
  const int b = static_cast<int>(boundaries.size());
  if (b < 1 || probs.rows() != b || probs.cols() != b)
    throw DimensionMismatch("sbm: boundaries and probability matrix disagree");
  if (std::abs(boundaries.back() - 1.0) > 1e-12) throw OutOfDomain("sbm: last boundary must be 1");
  for (int i = 0; i < b; ++i)
    for (int j = 0; j < b; ++j) {
      if (probs(i, j) < 0.0 || probs(i, j) > 1.0) throw OutOfDomain("sbm: probabilities in [0,1]");
      if (probs(i, j) != probs(j, i)) throw OutOfDomain("sbm: probability matrix must be symmetric");
    }
  Graphon g;
  g.kind_ = Kind::SBM;
  g.boundaries_ = std::move(boundaries);
  g.probs_ = std::move(probs);
  return g;
}

Graphon Graphon::lipschitz() {
  Graphon g;
  g.kind_ = Kind::Lipschitz;
  return g;
}

Graphon Graphon::piecewise_lipschitz() {
  Graphon g;
  g.kind_ = Kind::PiecewiseLipschitz;
  return g;
}

double Graphon::evaluate(double u, double v) const {
  if (u < 0.0 || u > 1.0 || v < 0.0 || v > 1.0)
    throw OutOfDomain("graphon arguments must lie in [0,1]");
  switch (kind_) {
    case Kind::Constant:
      return p_;
    case Kind::SBM: {
      const auto block = [&](double t) {
        const int b = static_cast<int>(boundaries_.size());
        for (int i = 0; i < b; ++i) {
          if (t < boundaries_[i]) return i;
        }
        return b - 1;
      };
      return probs_(block(u), block(v));
    }
    case Kind::Lipschitz:
      return (u + v + 1.0) / 4.0;
    case Kind::PiecewiseLipschitz: {
      const double mu = std::fmod(u, 1.0 / 3.0);
      const double mv = std::fmod(v, 1.0 / 3.0);
      return (mu + mv + 1.0) / 4.0;
    }
  }
  throw Error("unknown graphon kind");
}

Vector sample_grid(int n, SampleScheme::Grid grid, Rng& rng) {
  if (n < 1) throw TooSmall("sample_grid: n must be >= 1");
  Vector u(n);
  if (grid == SampleScheme::Grid::Fixed) {
    for (int i = 0; i < n; ++i) u[i] = static_cast<double>(i) / n;
  } else {
    for (int i = 0; i < n; ++i) u[i] = rng.uniform01();
    std::sort(u.begin(), u.end());
  }
  return u;
}

SymmetricMatrix sample_weight_matrix(const Graphon& wg, int n, const SampleScheme& scheme,
                                     Rng& rng) {
  if (scheme.observation != SampleScheme::Observation::EdgeWeight)
    throw SchemeMismatch("sample_weight_matrix needs an EdgeWeight scheme");
  const Vector u = sample_grid(n, scheme.grid, rng);
  SymmetricMatrix a(n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) a.set(i, j, wg.evaluate(u[i], u[j]));
  return a;
}

SymmetricMatrix sample_adjacency(const Graphon& wg, int n, const SampleScheme& scheme, Rng& rng) {
  if (scheme.observation != SampleScheme::Observation::Bernoulli)
    throw SchemeMismatch("sample_adjacency needs a Bernoulli scheme");
  const Vector u = sample_grid(n, scheme.grid, rng);
  SymmetricMatrix a(n);
  for (int i = 1; i < n; ++i)
    for (int j = 0; j < i; ++j)
      a.set(i, j, rng.bernoulli(wg.evaluate(u[i], u[j])) ? 1.0 : 0.0);
  return a;
}

SymmetricMatrix estimate_probabilities(const SymmetricMatrix& a) {
  const int n = a.n();
  if (n < 4) throw TooSmall("estimate_probabilities: n must be >= 4");
  for (int i = 0; i < n; ++i) {
    if (a(i, i) != 0.0) throw OutOfDomain("estimate_probabilities: diagonal must be zero");
    for (int j = 0; j < n; ++j) {
      if (a(i, j) != 0.0 && a(i, j) != 1.0)
        throw OutOfDomain("estimate_probabilities: entries must be 0/1");
    }
  }

  // d2(i,j) = max_{k != i,j} |<A_i - A_j, A_k>| / n, via B = A A.
  const Matrix b = multiply(a.as_matrix(), a.as_matrix());
  Matrix d2(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      double best = 0.0;
      for (int k = 0; k < n; ++k) {
        if (k == i || k == j) continue;
        best = std::max(best, std::abs(b(i, k) - b(j, k)));
      }
      d2(i, j) = best / n;
      d2(j, i) = d2(i, j);
    }
  }

  // h-quantile neighborhoods, h = sqrt(log n / n).
  const double h = std::sqrt(std::log(static_cast<double>(n)) / n);
  std::vector<std::vector<int>> neigh(n);
  for (int i = 0; i < n; ++i) {
    Vector dists;
    dists.reserve(n - 1);
    for (int k = 0; k < n; ++k) {
      if (k != i) dists.push_back(d2(i, k));
    }
    Vector sorted = dists;
    std::sort(sorted.begin(), sorted.end());
    const int pos = std::min<int>(static_cast<int>(std::floor(h * (n - 1))),
                                  static_cast<int>(sorted.size()) - 1);
    const double q = sorted[pos];
    for (int k = 0; k < n; ++k) {
      if (k != i && d2(i, k) <= q) neigh[i].push_back(k);
    }
  }

  Matrix est(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      // Self pairs are excluded from the means: a(i,i) is structurally zero
      // and would bias every neighborhood average downward.
      double row_side = 0.0;  // mean over j' in N(j) of a(i, j')
      int row_count = 0;
      for (int jp : neigh[j]) {
        if (jp == i) continue;
        row_side += a(i, jp);
        ++row_count;
      }
      row_side = row_count > 0 ? row_side / row_count : a(i, j);
      double col_side = 0.0;  // mean over i' in N(i) of a(i', j)
      int col_count = 0;
      for (int ip : neigh[i]) {
        if (ip == j) continue;
        col_side += a(ip, j);
        ++col_count;
      }
      col_side = col_count > 0 ? col_side / col_count : a(i, j);
      est(i, j) = 0.5 * (row_side + col_side);
    }
  }
  SymmetricMatrix out = SymmetricMatrix::from(est);
  SymmetricMatrix clamped(n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) clamped.set(i, j, std::clamp(out(i, j), 0.0, 1.0));
  return clamped;
}

SymmetricMatrix discretize_graphon(const Graphon& wg, int n_ref) {
  if (n_ref < 2) throw TooSmall("discretize_graphon: n_ref must be >= 2");
  SymmetricMatrix a(n_ref);
  for (int i = 0; i < n_ref; ++i) {
    const double ui = static_cast<double>(i) / n_ref;
    for (int j = i; j < n_ref; ++j) a.set(i, j, wg.evaluate(ui, static_cast<double>(j) / n_ref));
  }
  return a;
}

double d2_inf(const SymmetricMatrix& p, const SymmetricMatrix& q) {
  if (p.n() != q.n()) throw DimensionMismatch("d2_inf: size mismatch");
  const int n = p.n();
  double worst = 0.0;
  for (int i = 0; i < n; ++i) {
    double s = 0.0;
    for (int j = 0; j < n; ++j) {
      const double d = p(i, j) - q(i, j);
      s += d * d;
    }
    worst = std::max(worst, std::sqrt(s / n));
  }
  return worst;
}

std::vector<ConvergencePoint> convergence_experiment(const Graphon& wg, const IGNModel& model,
                                                     const std::vector<int>& n_list,
                                                     ConvergenceMode mode, int seeds,
                                                     const ConvergenceOptions& opts) {
  const Vector ref_out = ign_forward(model, {discretize_graphon(wg, opts.n_ref).as_matrix()});

  std::vector<ConvergencePoint> out;
  for (int n : n_list) {
    for (int s = 0; s < seeds; ++s) {
      // One independent stream per (mode, n, seed) cell.
      Rng rng(opts.master_seed ^ (static_cast<std::uint64_t>(mode) << 48) ^
              (static_cast<std::uint64_t>(n) << 24) ^ static_cast<std::uint64_t>(s));
      SymmetricMatrix input(n);
      switch (mode) {
        case ConvergenceMode::EwFixed:
          input = sample_weight_matrix(
              wg, n, {SampleScheme::Grid::Fixed, SampleScheme::Observation::EdgeWeight}, rng);
          break;
        case ConvergenceMode::EwRandom:
          input = sample_weight_matrix(
              wg, n, {SampleScheme::Grid::Random, SampleScheme::Observation::EdgeWeight}, rng);
          break;
        case ConvergenceMode::EpRaw:
          input = sample_adjacency(
              wg, n, {SampleScheme::Grid::Random, SampleScheme::Observation::Bernoulli}, rng);
          break;
        case ConvergenceMode::EpSmoothed:
          input = estimate_probabilities(sample_adjacency(
              wg, n, {SampleScheme::Grid::Random, SampleScheme::Observation::Bernoulli}, rng));
          break;
      }
      const Vector y = ign_forward(model, {input.as_matrix()});
      double err = 0.0;
      for (std::size_t i = 0; i < y.size(); ++i) {
        const double d = y[i] - ref_out[i];
        err += d * d;
      }
      out.push_back({n, s, std::sqrt(err)});
    }
  }
  return out;
}

}  // namespace sc
