#pragma once

#include <cstdint>
#include <vector>

#include "sc/dense.hpp"

namespace sc {

/// Partition of {1..k}: disjoint nonempty blocks covering the set, each
/// block sorted, blocks ordered by minimum element.
using Partition = std::vector<std::vector<int>>;

/// Number of set partitions of {1..k}; 0 <= k <= 10.
std::uint64_t bell(int k);

/// All partitions of {1..k} in restricted-growth-string order; the length
/// equals bell(k).
std::vector<Partition> enumerate_partitions(int k);

/// (|diag|_2 / sqrt(n), |A|_F / n).
struct PartitionNorm2 {
  double diag_part = 0.0;
  double matrix_part = 0.0;
};

PartitionNorm2 partition_norm_2(const Matrix& a);

/// The 15 normalized linear permutation-equivariant maps R^{n x n} -> R^{n x n},
/// indexed 1..15 in table-row order.
Matrix le_op_2to2(int index, const Matrix& a);

/// The 5 maps R^n -> R^{n x n}, indexed 1..5.
Matrix le_op_1to2(int index, const Vector& x);

/// The 5 maps R^{n x n} -> R^n, indexed 1..5.
Vector le_op_2to1(int index, const Matrix& a);

/// Partition label of each basis element (documentation alongside the
/// canonical table-row index).
Partition le_op_2to2_partition(int index);
Partition le_op_1to2_partition(int index);
Partition le_op_2to1_partition(int index);

/// Untrained multi-layer 2-IGN: alternating linear-equivariant layers (15
/// basis ops mixed per channel pair, bias spanned by the identity and
/// all-ones patterns) and rectifiers, closed by an invariant head reading
/// (global mean, diagonal mean) per channel.
struct IGNModel {
  int layers = 0;
  std::vector<int> widths;  // d_0 .. d_T
  int d_out = 0;
  // coeffs[t][op][ci][co], ops indexed 0..14
  std::vector<std::vector<std::vector<std::vector<double>>>> coeffs;
  // bias[t][pattern][co], pattern 0 = identity, 1 = all-ones
  std::vector<std::vector<std::vector<double>>> bias;
  // head[f][o], f over 2*d_T features (global mean, diag mean per channel)
  std::vector<std::vector<double>> head;

  /// Coefficients ~ Normal(0, 1/(15 d_in)), biases 0, head ~ Normal(0, 1/(2 d_T)).
  static IGNModel random(int layers, int hidden, int d_in, int d_out, std::uint64_t seed);
};

/// Forward pass on an n x n x d0 input (one Matrix per channel). Output is
/// invariant under simultaneous row/column permutation.
Vector ign_forward(const IGNModel& model, const std::vector<Matrix>& input);

}  // namespace sc
