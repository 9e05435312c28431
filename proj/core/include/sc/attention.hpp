#pragma once

#include <cstdint>

#include "sc/dense.hpp"

namespace sc {

/// Query/key projections are d x d', the value projection d x d. Rows of X
/// are node features.
struct AttentionParams {
  Matrix wq, wk, wv;
};

/// Positive feature map for linear attention. Performer draws m frozen
/// standard-normal directions at construction; LinearTransformer is
/// elu(x) + 1 entrywise.
class FeatureMap {
public:
  enum class Kind { Performer, LinearTransformer };

  static FeatureMap performer(int m, int d_prime, std::uint64_t seed);
  static FeatureMap linear_transformer();

  Kind kind() const { return kind_; }
  /// Output dimension for an input of length d_prime.
  int out_dim(int d_prime) const;
  /// phi(x); strictly positive entries for finite x.
  Vector apply(const Vector& x) const;

private:
  FeatureMap() = default;
  Kind kind_ = Kind::LinearTransformer;
  int m_ = 0;
  Matrix directions_;  // m x d'
};

/// softmax(X Wq (X Wk)^T) X Wv.
Matrix full_attention(const Matrix& x, const AttentionParams& p);

/// Linear attention in the associated form:
/// row i = (phi(q_i)^T sum_j phi(k_j) (x) v_j) / (phi(q_i)^T sum_k phi(k_k)).
Matrix linear_attention(const Matrix& x, const AttentionParams& p, const FeatureMap& phi);

/// Virtual-node state: the two sums the VN aggregates in one pass.
struct VnState {
  Vector s1;  // sum_j phi(k_j), length m
  Matrix s2;  // sum_j phi(k_j) (x) v_j, m x d
};

VnState vn_aggregate(const Matrix& x, const AttentionParams& p, const FeatureMap& phi);

/// Node update from the VN state; composing with vn_aggregate reproduces
/// linear_attention row by row.
Vector gn_update(const Vector& x_i, const VnState& vn, const AttentionParams& p,
                 const FeatureMap& phi);

/// X A + (1/n) 1 1^T X B + 1 c^T.
Matrix deepsets_layer(const Matrix& x, const Matrix& a, const Matrix& b, const Vector& c);

/// The explicit two-phase schedule (layer 1: VN stores the column means,
/// nodes store X A; layer 2: nodes add mean^T B + c). Equals deepsets_layer
/// exactly.
Matrix mpnn_vn_deepsets(const Matrix& x, const Matrix& a, const Matrix& b, const Vector& c);

}  // namespace sc
