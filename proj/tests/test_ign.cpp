#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "sc/errors.hpp"
#include "sc/ign.hpp"
#include "support.hpp"

using namespace sc;

namespace {

Matrix permute_rows_cols(const Matrix& a, const std::vector<int>& perm) {
  Matrix out(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) out(perm[i], perm[j]) = a(i, j);
  return out;
}

/// Reference composition of one LE layer straight from the basis ops.
std::vector<Matrix> naive_layer(const IGNModel& model, int t, const std::vector<Matrix>& in) {
  const int n = in[0].rows();
  const int co = model.widths[t + 1];
  std::vector<Matrix> out(co, Matrix(n, n));
  for (int b = 0; b < co; ++b) {
    for (int a = 0; a < static_cast<int>(in.size()); ++a) {
      for (int op = 0; op < 15; ++op) {
        const double coef = model.coeffs[t][op][a][b];
        if (coef == 0.0) continue;
        const Matrix term = le_op_2to2(op + 1, in[a]);
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < n; ++j) out[b](i, j) += coef * term(i, j);
      }
    }
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) out[b](i, j) += model.bias[t][1][b];
      out[b](i, i) += model.bias[t][0][b];
    }
    for (double& v : out[b].data()) v = std::max(0.0, v);
  }
  return out;
}

Vector naive_forward(const IGNModel& model, std::vector<Matrix> cur) {
  for (int t = 0; t < model.layers; ++t) cur = naive_layer(model, t, cur);
  const int d_t = model.widths[model.layers];
  Vector feats(2 * d_t);
  const int n = cur[0].rows();
  for (int a = 0; a < d_t; ++a) {
    double gm = 0.0, dm = 0.0;
    for (int i = 0; i < n; ++i) {
      dm += cur[a](i, i);
      for (int j = 0; j < n; ++j) gm += cur[a](i, j);
    }
    feats[2 * a] = gm / (static_cast<double>(n) * n);
    feats[2 * a + 1] = dm / n;
  }
  Vector out(model.d_out, 0.0);
  for (int f = 0; f < 2 * d_t; ++f)
    for (int o = 0; o < model.d_out; ++o) out[o] += model.head[f][o] * feats[f];
  return out;
}

}  // namespace

TEST_CASE("bell numbers and partition enumeration") {
  const std::uint64_t expected[] = {1, 1, 2, 5, 15, 52};
  for (int k = 0; k <= 5; ++k) {
    CHECK(bell(k) == expected[k]);
    CHECK(enumerate_partitions(k).size() == bell(k));
  }
  CHECK(bell(10) == 115975);
  CHECK_THROWS_AS((void)bell(11), KTooLarge);
  CHECK_THROWS_AS((void)enumerate_partitions(-1), KTooLarge);

  const auto p1 = enumerate_partitions(1);
  REQUIRE(p1.size() == 1);
  CHECK(p1[0] == Partition{{1}});

  // The five partitions of [3].
  const auto p3 = enumerate_partitions(3);
  const std::vector<Partition> wanted = {
      {{1, 2}, {3}}, {{1}, {2, 3}}, {{1, 3}, {2}}, {{1}, {2}, {3}}, {{1, 2, 3}}};
  for (const auto& w : wanted) CHECK(std::count(p3.begin(), p3.end(), w) == 1);

  // Canonical form: blocks sorted by minimum element.
  for (const auto& p : enumerate_partitions(5)) {
    for (std::size_t b = 1; b < p.size(); ++b) CHECK(p[b - 1].front() < p[b].front());
    for (const auto& block : p) CHECK(std::is_sorted(block.begin(), block.end()));
  }
}

TEST_CASE("partition norm") {
  CHECK(partition_norm_2(Matrix(3, 3)).diag_part == 0.0);
  CHECK(partition_norm_2(Matrix(3, 3)).matrix_part == 0.0);

  const PartitionNorm2 eye = partition_norm_2(Matrix::identity(4));
  CHECK(eye.diag_part == doctest::Approx(1.0));
  CHECK(eye.matrix_part == doctest::Approx(0.5));

  Matrix ones(4, 4, 1.0);
  const PartitionNorm2 on = partition_norm_2(ones);
  CHECK(on.diag_part == doctest::Approx(1.0));
  CHECK(on.matrix_part == doctest::Approx(1.0));
}

TEST_CASE("selected basis ops") {
  Rng rng(3);
  const Matrix a = test::random_matrix(5, 5, rng);
  CHECK(max_abs_diff(le_op_2to2(1, a), a) == 0.0);

  Matrix ones(6, 6, 1.0);
  CHECK(max_abs_diff(le_op_2to2(4, ones), ones) <= 1e-15);

  const Matrix global = le_op_2to2(10, a);
  double total = 0.0;
  for (double v : a.data()) total += v;
  for (double v : global.data()) CHECK(v == doctest::Approx(total / 25.0));

  CHECK_THROWS_AS((void)le_op_2to2(0, a), IndexOutOfRange);
  CHECK_THROWS_AS((void)le_op_2to2(16, a), IndexOutOfRange);
  CHECK_THROWS_AS((void)le_op_1to2(6, Vector(4, 1.0)), IndexOutOfRange);
  CHECK_THROWS_AS((void)le_op_2to1(6, a), IndexOutOfRange);

  // Stored partition labels stay consistent with the table dimensions.
  for (int i = 1; i <= 15; ++i) {
    int total_elems = 0;
    for (const auto& block : le_op_2to2_partition(i)) total_elems += block.size();
    CHECK(total_elems == 4);
  }
  for (int i = 1; i <= 5; ++i) {
    int total_elems = 0;
    for (const auto& block : le_op_1to2_partition(i)) total_elems += block.size();
    CHECK(total_elems == 3);
  }
}

TEST_CASE("ops against their explicit matrix formulas") {
  Rng rng(5);
  const int n = 7;
  const Matrix a = test::random_matrix(n, n, rng);
  Matrix one_col(n, 1, 1.0);
  const Matrix row_sums = multiply(a, one_col);           // A 1
  const Matrix col_sums = multiply(a.transposed(), one_col);

  // op 4: (1/n) A 1 1^T
  const Matrix op4 = le_op_2to2(4, a);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) CHECK(op4(i, j) == doctest::Approx(row_sums(i, 0) / n).epsilon(1e-14));
  // op 5: (1/n) 1 (A 1)^T
  const Matrix op5 = le_op_2to2(5, a);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) CHECK(op5(i, j) == doctest::Approx(row_sums(j, 0) / n).epsilon(1e-14));
  // op 9: (1/n) Diag(A^T 1)
  const Matrix op9 = le_op_2to2(9, a);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      CHECK(op9(i, j) == doctest::Approx(i == j ? col_sums(i, 0) / n : 0.0).epsilon(1e-14));
  // op 14: Diag*(A) 1^T
  const Matrix op14 = le_op_2to2(14, a);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) CHECK(op14(i, j) == a(i, i));

  // 1->2 / 2->1 spot checks
  const Vector x = test::random_vector(n, rng);
  const Matrix d = le_op_1to2(1, x);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) CHECK(d(i, j) == (i == j ? x[i] : 0.0));
  const Vector rm = le_op_2to1(2, a);
  for (int i = 0; i < n; ++i) CHECK(rm[i] == doctest::Approx(row_sums(i, 0) / n).epsilon(1e-14));
}

TEST_CASE("equivariance of every basis op") {
  Rng rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 3 + static_cast<int>(rng.uniform_int(0, 9));
    const Matrix a = test::random_matrix(n, n, rng);
    const Vector x = test::random_vector(n, rng);
    const auto perm = test::random_permutation(n, rng);
    const Matrix pa = permute_rows_cols(a, perm);

    for (int op = 1; op <= 15; ++op) {
      const Matrix lhs = le_op_2to2(op, pa);
      const Matrix rhs = permute_rows_cols(le_op_2to2(op, a), perm);
      CHECK(max_abs_diff(lhs, rhs) <= 1e-12);
    }
    Vector px(n);
    for (int i = 0; i < n; ++i) px[perm[i]] = x[i];
    for (int op = 1; op <= 5; ++op) {
      CHECK(max_abs_diff(le_op_1to2(op, px), permute_rows_cols(le_op_1to2(op, x), perm)) <= 1e-12);
      const Vector lhs = le_op_2to1(op, pa);
      const Vector rhs = le_op_2to1(op, a);
      for (int i = 0; i < n; ++i) CHECK(std::abs(lhs[perm[i]] - rhs[i]) <= 1e-12);
    }
  }
}

TEST_CASE("linearity of the basis ops") {
  Rng rng(11);
  const int n = 6;
  const Matrix a = test::random_matrix(n, n, rng);
  const Matrix b = test::random_matrix(n, n, rng);
  const double c = -2.75;
  Matrix combo(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) combo(i, j) = a(i, j) + c * b(i, j);
  for (int op = 1; op <= 15; ++op) {
    const Matrix lhs = le_op_2to2(op, combo);
    const Matrix ta = le_op_2to2(op, a);
    const Matrix tb = le_op_2to2(op, b);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        CHECK(std::abs(lhs(i, j) - (ta(i, j) + c * tb(i, j))) <= 1e-12);
  }
}

TEST_CASE("partition-norm stability of the basis ops") {
  Rng rng(13);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 3 + static_cast<int>(rng.uniform_int(0, 9));
    const Matrix a = test::random_matrix(n, n, rng);
    const PartitionNorm2 in = partition_norm_2(a);
    const double eps = std::max(in.diag_part, in.matrix_part);
    for (int op = 1; op <= 15; ++op) {
      const PartitionNorm2 out = partition_norm_2(le_op_2to2(op, a));
      CHECK(out.diag_part <= eps + 1e-12);
      CHECK(out.matrix_part <= eps + 1e-12);
    }

    // 1->2: input norm |x|/sqrt(n) bounds both output components.
    const Vector x = test::random_vector(n, rng);
    const double xnorm = norm2(x) / std::sqrt(static_cast<double>(n));
    for (int op = 1; op <= 5; ++op) {
      const PartitionNorm2 out = partition_norm_2(le_op_1to2(op, x));
      CHECK(out.diag_part <= xnorm + 1e-12);
      CHECK(out.matrix_part <= xnorm + 1e-12);
    }
    // 2->1: output norm |y|/sqrt(n) bounded by the input ball.
    for (int op = 1; op <= 5; ++op) {
      const Vector y = le_op_2to1(op, a);
      CHECK(norm2(y) / std::sqrt(static_cast<double>(n)) <= eps + 1e-12);
    }
  }
}

TEST_CASE("ign_forward") {
  // All-zero model maps everything to zero.
  IGNModel zero = IGNModel::random(2, 3, 1, 4, 1);
  for (auto& layer : zero.coeffs)
    for (auto& op : layer)
      for (auto& row : op) std::fill(row.begin(), row.end(), 0.0);
  Rng rng(17);
  const Matrix input = test::random_matrix(6, 6, rng);
  for (double v : ign_forward(zero, {input})) CHECK(v == 0.0);

  // Single identity-op layer with a mean head picks out the global mean.
  IGNModel mean_model;
  mean_model.layers = 1;
  mean_model.widths = {1, 1};
  mean_model.d_out = 1;
  mean_model.coeffs.assign(
      1, std::vector<std::vector<std::vector<double>>>(15, {{0.0}}));
  mean_model.coeffs[0][0][0][0] = 1.0;  // op 1, identity
  mean_model.bias.assign(1, {{0.0}, {0.0}});
  mean_model.head = {{1.0}, {0.0}};
  Matrix nonneg(5, 5);
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) nonneg(i, j) = std::abs(input(i, j));
  double mean = 0.0;
  for (double v : nonneg.data()) mean += v;
  mean /= 25.0;
  const Vector out = ign_forward(mean_model, {nonneg});
  CHECK(out[0] == doctest::Approx(mean).epsilon(1e-12));

  CHECK_THROWS_AS((void)ign_forward(mean_model, {nonneg, nonneg}), ChannelMismatch);
}

TEST_CASE("fast layer equals the naive basis composition") {
  Rng rng(19);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 3 + static_cast<int>(rng.uniform_int(0, 7));
    const IGNModel model = IGNModel::random(3, 5, 2, 3, 100 + trial);
    const std::vector<Matrix> input = {test::random_matrix(n, n, rng),
                                       test::random_matrix(n, n, rng)};
    const Vector fast = ign_forward(model, input);
    const Vector slow = naive_forward(model, input);
    for (std::size_t i = 0; i < fast.size(); ++i)
      CHECK(fast[i] == doctest::Approx(slow[i]).epsilon(1e-12));
  }
}

TEST_CASE("ign_forward is permutation invariant") {
  Rng rng(23);
  const IGNModel model = IGNModel::random(4, 6, 1, 5, 42);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 4 + static_cast<int>(rng.uniform_int(0, 10));
    const Matrix a = test::random_matrix(n, n, rng);
    const auto perm = test::random_permutation(n, rng);
    const Vector base = ign_forward(model, {a});
    const Vector permuted = ign_forward(model, {permute_rows_cols(a, perm)});
    for (std::size_t i = 0; i < base.size(); ++i)
      CHECK(std::abs(base[i] - permuted[i]) <= 1e-10);
  }
}

TEST_CASE("forward output moves continuously with the input") {
  Rng rng(29);
  const IGNModel model = IGNModel::random(3, 8, 1, 4, 7);
  const int n = 12;
  const Matrix a = test::random_matrix(n, n, rng);
  const Vector base = ign_forward(model, {a});
  double worst_ratio = 0.0;
  for (double eps : {1e-3, 1e-5, 1e-7}) {
    Matrix b = a;
    for (double& v : b.data()) v += eps * rng.normal();
    const Vector out = ign_forward(model, {b});
    double diff = 0.0;
    for (std::size_t i = 0; i < out.size(); ++i) diff = std::max(diff, std::abs(out[i] - base[i]));
    worst_ratio = std::max(worst_ratio, diff / eps);
  }
  MESSAGE("empirical forward-pass Lipschitz constant K = ", worst_ratio);
  CHECK(worst_ratio < 1e3);
}
