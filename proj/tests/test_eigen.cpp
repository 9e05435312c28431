#include <doctest.h>

#include <cmath>

#include "sc/eigen.hpp"
#include "sc/graph.hpp"
#include "sc/laplacian.hpp"
#include "support.hpp"

using namespace sc;

TEST_CASE("diagonal input sorts values and permutes identity columns") {
  SymmetricMatrix m(3);
  m.set(0, 0, 3.0);
  m.set(1, 1, 1.0);
  m.set(2, 2, 2.0);
  const EigenDecomposition eig = sym_eig(m);
  CHECK(eig.values[0] == 1.0);
  CHECK(eig.values[1] == 2.0);
  CHECK(eig.values[2] == 3.0);
  CHECK(eig.vectors(1, 0) == 1.0);
  CHECK(eig.vectors(2, 1) == 1.0);
  CHECK(eig.vectors(0, 2) == 1.0);
}

TEST_CASE("path Laplacian spectrum is (0, 1, 3)") {
  const Graph path(3, {{0, 1, 1.0}, {1, 2, 1.0}});
  const EigenDecomposition eig = sym_eig(combinatorial_laplacian(path));
  CHECK(std::abs(eig.values[0]) <= 1e-12);
  CHECK(eig.values[1] == doctest::Approx(1.0));
  CHECK(eig.values[2] == doctest::Approx(3.0));
}

TEST_CASE("zero matrix yields zero values and identity vectors") {
  const EigenDecomposition eig = sym_eig(SymmetricMatrix(4));
  for (double v : eig.values) CHECK(v == 0.0);
  CHECK(max_abs_diff(eig.vectors, Matrix::identity(4)) == 0.0);
}

TEST_CASE("reconstruction and orthonormality over random symmetric matrices") {
  Rng rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + static_cast<int>(rng.uniform_int(0, 48));
    SymmetricMatrix m(n);
    for (int i = 0; i < n; ++i)
      for (int j = i; j <= i; ++j) m.set(i, i, rng.normal());
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) m.set(i, j, rng.normal());
    const EigenDecomposition eig = sym_eig(m);

    // values ascending
    for (std::size_t k = 1; k < eig.values.size(); ++k) CHECK(eig.values[k - 1] <= eig.values[k]);

    // V^T V = I to 1e-10
    const Matrix vtv = multiply(eig.vectors.transposed(), eig.vectors);
    CHECK(max_abs_diff(vtv, Matrix::identity(n)) <= 1e-10);

    // |V Lambda V^T - M|_F <= 1e-8 (1 + |M|_F)
    Matrix recon(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        double s = 0.0;
        for (int k = 0; k < n; ++k) s += eig.vectors(i, k) * eig.values[k] * eig.vectors(j, k);
        recon(i, j) = s;
      }
    CHECK(frobenius_norm(subtract(recon, m.as_matrix())) <= 1e-8 * (1.0 + frobenius_norm(m)));

    // sign convention: largest-magnitude entry positive
    for (int k = 0; k < n; ++k) {
      int arg = 0;
      double best = -1.0;
      for (int i = 0; i < n; ++i) {
        if (std::abs(eig.vectors(i, k)) > best) {
          best = std::abs(eig.vectors(i, k));
          arg = i;
        }
      }
      CHECK(eig.vectors(arg, k) > 0.0);
    }
  }
}

TEST_CASE("deterministic given the input") {
  Rng rng(37);
  SymmetricMatrix m(12);
  for (int i = 0; i < 12; ++i)
    for (int j = i; j < 12; ++j) m.set(i, j, rng.normal());
  const EigenDecomposition a = sym_eig(m);
  const EigenDecomposition b = sym_eig(m);
  CHECK(max_abs_diff(a.vectors, b.vectors) == 0.0);
  for (int i = 0; i < 12; ++i) CHECK(a.values[i] == b.values[i]);
}
