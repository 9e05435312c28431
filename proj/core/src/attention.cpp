#include "sc/attention.hpp"

#include <cmath>

#include "sc/errors.hpp"
#include "sc/rng.hpp"

namespace sc {

FeatureMap FeatureMap::performer(int m, int d_prime, std::uint64_t seed) {
  if (m < 1) throw ShapeMismatch("performer needs m >= 1");
  FeatureMap f;
  f.kind_ = Kind::Performer;
  f.m_ = m;
  f.directions_ = Matrix(m, d_prime);
  Rng rng(seed);
  for (int k = 0; k < m; ++k)
    for (int j = 0; j < d_prime; ++j) f.directions_(k, j) = rng.normal();
  return f;
}

FeatureMap FeatureMap::linear_transformer() {
  FeatureMap f;
  f.kind_ = Kind::LinearTransformer;
  return f;
}

int FeatureMap::out_dim(int d_prime) const {
  return kind_ == Kind::Performer ? m_ : d_prime;
}

Vector FeatureMap::apply(const Vector& x) const {
  if (kind_ == Kind::LinearTransformer) {
    Vector out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
      // elu(x) + 1: x + 1 for x >= 0, e^x otherwise; positive for finite x.
      out[i] = x[i] >= 0.0 ? x[i] + 1.0 : std::exp(x[i]);
    }
    return out;
  }
  if (directions_.cols() != static_cast<int>(x.size()))
    throw ShapeMismatch("feature map input length != direction dimension");
  const double prefactor = std::exp(-0.5 * dot(x, x)) / std::sqrt(static_cast<double>(m_));
  Vector out(m_);
  for (int k = 0; k < m_; ++k) {
    double s = 0.0;
    for (std::size_t j = 0; j < x.size(); ++j) s += directions_(k, j) * x[j];
    out[k] = prefactor * std::exp(s);
  }
  return out;
}

namespace {

void check_shapes(const Matrix& x, const AttentionParams& p) {
  if (p.wq.rows() != x.cols() || p.wk.rows() != x.cols() || p.wv.rows() != x.cols())
    throw ShapeMismatch("attention projections do not match feature dimension");
  if (p.wq.cols() != p.wk.cols()) throw ShapeMismatch("Wq and Wk must share output dimension");
  if (p.wv.cols() != p.wv.rows()) throw ShapeMismatch("Wv must be d x d");
}

Vector row(const Matrix& m, int i) {
  Vector v(m.cols());
  for (int j = 0; j < m.cols(); ++j) v[j] = m(i, j);
  return v;
}

}  // namespace

Matrix full_attention(const Matrix& x, const AttentionParams& p) {
  check_shapes(x, p);
  const Matrix q = multiply(x, p.wq);
  const Matrix k = multiply(x, p.wk);
  const Matrix v = multiply(x, p.wv);
  const int n = x.rows();
  Matrix out(n, v.cols());
  for (int i = 0; i < n; ++i) {
    Vector scores(n);
    double peak = -1e300;
    for (int j = 0; j < n; ++j) {
      double s = 0.0;
      for (int c = 0; c < q.cols(); ++c) s += q(i, c) * k(j, c);
      scores[j] = s;
      peak = std::max(peak, s);
    }
    double z = 0.0;
    for (int j = 0; j < n; ++j) {
      scores[j] = std::exp(scores[j] - peak);
      z += scores[j];
    }
    for (int j = 0; j < n; ++j) {
      const double wgt = scores[j] / z;
      for (int c = 0; c < v.cols(); ++c) out(i, c) += wgt * v(j, c);
    }
  }
  return out;
}

VnState vn_aggregate(const Matrix& x, const AttentionParams& p, const FeatureMap& phi) {
  check_shapes(x, p);
  const Matrix k = multiply(x, p.wk);
  const Matrix v = multiply(x, p.wv);
  const int m = phi.out_dim(k.cols());
  VnState vn;
  vn.s1.assign(m, 0.0);
  vn.s2 = Matrix(m, v.cols());
  for (int j = 0; j < x.rows(); ++j) {
    const Vector fk = phi.apply(row(k, j));
    for (int a = 0; a < m; ++a) {
      vn.s1[a] += fk[a];
      for (int c = 0; c < v.cols(); ++c) vn.s2(a, c) += fk[a] * v(j, c);
    }
  }
  return vn;
}

Vector gn_update(const Vector& x_i, const VnState& vn, const AttentionParams& p,
                 const FeatureMap& phi) {
  Vector q(p.wq.cols(), 0.0);
  if (static_cast<int>(x_i.size()) != p.wq.rows())
    throw ShapeMismatch("gn_update: node feature length != d");
  for (int c = 0; c < p.wq.cols(); ++c) {
    double s = 0.0;
    for (std::size_t j = 0; j < x_i.size(); ++j) s += x_i[j] * p.wq(j, c);
    q[c] = s;
  }
  const Vector fq = phi.apply(q);
  const double denom = dot(fq, vn.s1);
  Vector out(vn.s2.cols(), 0.0);
  for (int a = 0; a < static_cast<int>(fq.size()); ++a)
    for (int c = 0; c < vn.s2.cols(); ++c) out[c] += fq[a] * vn.s2(a, c);
  for (double& v : out) v /= denom;
  return out;
}

Matrix linear_attention(const Matrix& x, const AttentionParams& p, const FeatureMap& phi) {
  const VnState vn = vn_aggregate(x, p, phi);
  Matrix out(x.rows(), p.wv.cols());
  for (int i = 0; i < x.rows(); ++i) {
    const Vector yi = gn_update(row(x, i), vn, p, phi);
    for (int c = 0; c < out.cols(); ++c) out(i, c) = yi[c];
  }
  return out;
}

Matrix deepsets_layer(const Matrix& x, const Matrix& a, const Matrix& b, const Vector& c) {
  if (a.rows() != x.cols() || b.rows() != x.cols() || a.cols() != b.cols() ||
      static_cast<int>(c.size()) != a.cols())
    throw ShapeMismatch("deepsets_layer: weight shapes do not match");
  const int n = x.rows();
  Matrix out = multiply(x, a);
  Vector mean(x.cols(), 0.0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < x.cols(); ++j) mean[j] += x(i, j);
  for (double& v : mean) v /= n;
  Vector mean_b(b.cols(), 0.0);
  for (int j = 0; j < b.rows(); ++j)
    for (int o = 0; o < b.cols(); ++o) mean_b[o] += mean[j] * b(j, o);
  for (int i = 0; i < n; ++i)
    for (int o = 0; o < out.cols(); ++o) out(i, o) += mean_b[o] + c[o];
  return out;
}

Matrix mpnn_vn_deepsets(const Matrix& x, const Matrix& a, const Matrix& b, const Vector& c) {
  if (a.rows() != x.cols() || b.rows() != x.cols() || a.cols() != b.cols() ||
      static_cast<int>(c.size()) != a.cols())
    throw ShapeMismatch("mpnn_vn_deepsets: weight shapes do not match");
  const int n = x.rows();

  // Layer 1: the VN aggregates the feature mean; each node stores X A.
  Vector vn_feature(x.cols(), 0.0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < x.cols(); ++j) vn_feature[j] += x(i, j);
  for (double& v : vn_feature) v /= n;
  Matrix node_state = multiply(x, a);

  // Layer 2: the VN broadcasts; each node adds mean^T B + c.
  Vector broadcast(b.cols(), 0.0);
  for (int j = 0; j < b.rows(); ++j)
    for (int o = 0; o < b.cols(); ++o) broadcast[o] += vn_feature[j] * b(j, o);
  for (int i = 0; i < n; ++i)
    for (int o = 0; o < node_state.cols(); ++o) node_state(i, o) += broadcast[o] + c[o];
  return node_state;
}

}  // namespace sc
