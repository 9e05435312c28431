#include "sc/ign.hpp"

#include <algorithm>
#include <cmath>

#include "sc/errors.hpp"
#include "sc/rng.hpp"

namespace sc {

std::uint64_t bell(int k) {
  if (k < 0 || k > 10) throw KTooLarge("bell: k must lie in [0, 10]");
  // Bell triangle.
  std::vector<std::vector<std::uint64_t>> tri(k + 1);
  tri[0] = {1};
  for (int i = 1; i <= k; ++i) {
    tri[i].resize(i + 1);
    tri[i][0] = tri[i - 1][i - 1];
    for (int j = 1; j <= i; ++j) tri[i][j] = tri[i][j - 1] + tri[i - 1][j - 1];
  }
  return tri[k][0];
}

std::vector<Partition> enumerate_partitions(int k) {
  if (k < 0 || k > 10) throw KTooLarge("enumerate_partitions: k must lie in [0, 10]");
  std::vector<Partition> out;
  if (k == 0) {
    out.push_back({});
    return out;
  }
  // Restricted growth strings: a[0] = 0, a[i] <= max(a[0..i-1]) + 1.
  std::vector<int> a(k, 0);
  while (true) {
    int blocks = *std::max_element(a.begin(), a.end()) + 1;
    Partition p(blocks);
    for (int i = 0; i < k; ++i) p[a[i]].push_back(i + 1);
    out.push_back(std::move(p));

    int i = k - 1;
    for (; i > 0; --i) {
      int cap = 0;
      for (int j = 0; j < i; ++j) cap = std::max(cap, a[j]);
      if (a[i] <= cap) break;
    }
    if (i == 0) break;
    ++a[i];
    for (int j = i + 1; j < k; ++j) a[j] = 0;
  }
  return out;
}

PartitionNorm2 partition_norm_2(const Matrix& a) {
  if (a.rows() != a.cols()) throw DimensionMismatch("partition_norm_2: matrix must be square");
  const int n = a.rows();
  double diag = 0.0;
  for (int i = 0; i < n; ++i) diag += a(i, i) * a(i, i);
  return {std::sqrt(diag) / std::sqrt(static_cast<double>(n)), frobenius_norm(a) / n};
}

namespace {

struct Summaries {
  Vector row_mean, col_mean, diag;
  double global_mean = 0.0, diag_mean = 0.0;
};

Summaries summarize(const Matrix& a) {
  const int n = a.rows();
  Summaries s;
  s.row_mean.assign(n, 0.0);
  s.col_mean.assign(n, 0.0);
  s.diag.assign(n, 0.0);
  for (int i = 0; i < n; ++i) {
    const double* row = a.row_ptr(i);
    double rs = 0.0;
    for (int j = 0; j < n; ++j) {
      rs += row[j];
      s.col_mean[j] += row[j];
    }
    s.row_mean[i] = rs / n;
    s.diag[i] = a(i, i);
    s.global_mean += rs;
    s.diag_mean += a(i, i);
  }
  for (int j = 0; j < n; ++j) s.col_mean[j] /= n;
  s.global_mean /= static_cast<double>(n) * n;
  s.diag_mean /= n;
  return s;
}

}  // namespace

Matrix le_op_2to2(int index, const Matrix& a) {
  if (a.rows() != a.cols()) throw DimensionMismatch("le_op_2to2: matrix must be square");
  if (index < 1 || index > 15) throw IndexOutOfRange("le_op_2to2: index must lie in 1..15");
  const int n = a.rows();
  const Summaries s = summarize(a);
  Matrix out(n, n);
  switch (index) {
    case 1:
      return a;
    case 2:
      return a.transposed();
    case 3:
      for (int i = 0; i < n; ++i) out(i, i) = a(i, i);
      return out;
    case 4:
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out(i, j) = s.row_mean[i];
      return out;
    case 5:
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out(i, j) = s.row_mean[j];
      return out;
    case 6:
      for (int i = 0; i < n; ++i) out(i, i) = s.row_mean[i];
      return out;
    case 7:
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out(i, j) = s.col_mean[i];
      return out;
    case 8:
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out(i, j) = s.col_mean[j];
      return out;
    case 9:
      for (int i = 0; i < n; ++i) out(i, i) = s.col_mean[i];
      return out;
    case 10:
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out(i, j) = s.global_mean;
      return out;
    case 11:
      for (int i = 0; i < n; ++i) out(i, i) = s.global_mean;
      return out;
    case 12:
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out(i, j) = s.diag_mean;
      return out;
    case 13:
      for (int i = 0; i < n; ++i) out(i, i) = s.diag_mean;
      return out;
    case 14:
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out(i, j) = s.diag[i];
      return out;
    case 15:
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out(i, j) = s.diag[j];
      return out;
  }
  return out;
}

Matrix le_op_1to2(int index, const Vector& x) {
  if (index < 1 || index > 5) throw IndexOutOfRange("le_op_1to2: index must lie in 1..5");
  const int n = static_cast<int>(x.size());
  double mean = 0.0;
  for (double v : x) mean += v;
  mean /= n;
  Matrix out(n, n);
  switch (index) {
    case 1:
      for (int i = 0; i < n; ++i) out(i, i) = x[i];
      return out;
    case 2:
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out(i, j) = x[i];
      return out;
    case 3:
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out(i, j) = x[j];
      return out;
    case 4:
      for (int i = 0; i < n; ++i) out(i, i) = mean;
      return out;
    case 5:
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out(i, j) = mean;
      return out;
  }
  return out;
}

Vector le_op_2to1(int index, const Matrix& a) {
  if (a.rows() != a.cols()) throw DimensionMismatch("le_op_2to1: matrix must be square");
  if (index < 1 || index > 5) throw IndexOutOfRange("le_op_2to1: index must lie in 1..5");
  const int n = a.rows();
  const Summaries s = summarize(a);
  switch (index) {
    case 1:
      return s.diag;
    case 2:
      return s.row_mean;
    case 3:
      return s.col_mean;
    case 4:
      return Vector(n, s.global_mean);
    case 5:
      return Vector(n, s.diag_mean);
  }
  return {};
}

namespace {

Partition parse_blocks(std::initializer_list<std::initializer_list<int>> blocks) {
  Partition p;
  for (const auto& b : blocks) p.emplace_back(b);
  return p;
}

}  // namespace

Partition le_op_2to2_partition(int index) {
  static const std::vector<Partition> table = {
      parse_blocks({{1, 3}, {2, 4}}),    parse_blocks({{1, 4}, {2, 3}}),
      parse_blocks({{1, 2, 3, 4}}),      parse_blocks({{1, 4}, {2}, {3}}),
      parse_blocks({{1, 3}, {2}, {4}}),  parse_blocks({{1, 3, 4}, {2}}),
      parse_blocks({{1}, {2, 4}, {3}}),  parse_blocks({{1}, {2, 3}, {4}}),
      parse_blocks({{1}, {2, 3, 4}}),    parse_blocks({{1}, {2}, {3}, {4}}),
      parse_blocks({{1}, {2}, {3, 4}}),  parse_blocks({{1, 2}, {3}, {4}}),
      parse_blocks({{1, 2}, {3, 4}}),    parse_blocks({{1, 2, 4}, {3}}),
      parse_blocks({{1, 2, 3}, {4}}),
  };
  if (index < 1 || index > 15) throw IndexOutOfRange("le_op_2to2_partition: index 1..15");
  return table[index - 1];
}

Partition le_op_1to2_partition(int index) {
  static const std::vector<Partition> table = {
      parse_blocks({{1, 2, 3}}),      parse_blocks({{1, 3}, {2}}),
      parse_blocks({{1, 2}, {3}}),    parse_blocks({{1}, {2, 3}}),
      parse_blocks({{1}, {2}, {3}}),
  };
  if (index < 1 || index > 5) throw IndexOutOfRange("le_op_1to2_partition: index 1..5");
  return table[index - 1];
}

Partition le_op_2to1_partition(int index) {
  static const std::vector<Partition> table = {
      parse_blocks({{1, 2, 3}}),      parse_blocks({{1, 2}, {3}}),
      parse_blocks({{1, 3}, {2}}),    parse_blocks({{1}, {2}, {3}}),
      parse_blocks({{1, 2}, {3}}),
  };
  if (index < 1 || index > 5) throw IndexOutOfRange("le_op_2to1_partition: index 1..5");
  return table[index - 1];
}

IGNModel IGNModel::random(int layers, int hidden, int d_in, int d_out, std::uint64_t seed) {
  Rng rng(seed);
  IGNModel m;
  m.layers = layers;
  m.d_out = d_out;
  m.widths.resize(layers + 1);
  m.widths[0] = d_in;
  for (int t = 1; t <= layers; ++t) m.widths[t] = hidden;

  m.coeffs.resize(layers);
  m.bias.resize(layers);
  for (int t = 0; t < layers; ++t) {
    const int ci = m.widths[t];
    const int co = m.widths[t + 1];
    const double sigma = 1.0 / std::sqrt(15.0 * ci);
    m.coeffs[t].assign(15, std::vector<std::vector<double>>(ci, std::vector<double>(co)));
    for (int op = 0; op < 15; ++op)
      for (int a = 0; a < ci; ++a)
        for (int b = 0; b < co; ++b) m.coeffs[t][op][a][b] = sigma * rng.normal();
    m.bias[t].assign(2, std::vector<double>(co, 0.0));
  }

  const int feats = 2 * m.widths[layers];
  const double head_sigma = 1.0 / std::sqrt(static_cast<double>(feats));
  m.head.assign(feats, std::vector<double>(d_out));
  for (int f = 0; f < feats; ++f)
    for (int o = 0; o < d_out; ++o) m.head[f][o] = head_sigma * rng.normal();
  return m;
}

Vector ign_forward(const IGNModel& model, const std::vector<Matrix>& input) {
  if (static_cast<int>(input.size()) != model.widths.at(0))
    throw ChannelMismatch("ign_forward: input channel count != d0");
  const int n = input.empty() ? 0 : input[0].rows();
  for (const Matrix& ch : input) {
    if (ch.rows() != n || ch.cols() != n)
      throw ChannelMismatch("ign_forward: channels must share one n x n shape");
  }

  std::vector<Matrix> cur = input;
  for (int t = 0; t < model.layers; ++t) {
    const int ci = model.widths[t];
    const int co = model.widths[t + 1];
    std::vector<Summaries> sums(ci);
    std::vector<Matrix> transposed(ci);
    for (int a = 0; a < ci; ++a) {
      sums[a] = summarize(cur[a]);
      transposed[a] = cur[a].transposed();
    }

    std::vector<Matrix> next(co, Matrix(n, n));
    for (int b = 0; b < co; ++b) {
      Matrix& out = next[b];
      // Dense ops 1-2 mix the full matrices; everything else reduces to the
      // per-channel summaries combined once per output channel.
      for (int a = 0; a < ci; ++a) {
        const double c1 = model.coeffs[t][0][a][b];
        const double c2 = model.coeffs[t][1][a][b];
        if (c1 != 0.0 || c2 != 0.0) {
          for (int i = 0; i < n; ++i) {
            double* oi = out.row_ptr(i);
            const double* mi = cur[a].row_ptr(i);
            const double* mti = transposed[a].row_ptr(i);
            for (int j = 0; j < n; ++j) oi[j] += c1 * mi[j] + c2 * mti[j];
          }
        }
      }
      Vector row_term(n, 0.0), col_term(n, 0.0), diag_only(n, 0.0);
      double const_all = 0.0, const_diag = 0.0;
      for (int a = 0; a < ci; ++a) {
        const auto& c = model.coeffs[t];
        const Summaries& s = sums[a];
        for (int i = 0; i < n; ++i) {
          row_term[i] += c[3][a][b] * s.row_mean[i] + c[6][a][b] * s.col_mean[i] +
                         c[13][a][b] * s.diag[i];
          col_term[i] += c[4][a][b] * s.row_mean[i] + c[7][a][b] * s.col_mean[i] +
                         c[14][a][b] * s.diag[i];
          diag_only[i] += c[2][a][b] * s.diag[i] + c[5][a][b] * s.row_mean[i] +
                          c[8][a][b] * s.col_mean[i];
        }
        const_all += c[9][a][b] * s.global_mean + c[11][a][b] * s.diag_mean;
        const_diag += c[10][a][b] * s.global_mean + c[12][a][b] * s.diag_mean;
      }
      const double bias_diag = model.bias[t][0][b];
      const double bias_all = model.bias[t][1][b];
      for (int i = 0; i < n; ++i) {
        double* oi = out.row_ptr(i);
        const double ri = row_term[i];
        for (int j = 0; j < n; ++j) {
          oi[j] += ri + col_term[j] + const_all + bias_all;
        }
        oi[i] += diag_only[i] + const_diag + bias_diag;
      }
      // Rectifier.
      for (double& v : out.data()) v = std::max(0.0, v);
    }
    cur = std::move(next);
  }

  // Invariant head: (global mean, diagonal mean) per channel.
  const int d_t = model.widths[model.layers];
  Vector feats(2 * d_t);
  for (int a = 0; a < d_t; ++a) {
    const Summaries s = summarize(cur[a]);
    feats[2 * a] = s.global_mean;
    feats[2 * a + 1] = s.diag_mean;
  }
  Vector out(model.d_out, 0.0);
  for (int f = 0; f < 2 * d_t; ++f)
    for (int o = 0; o < model.d_out; ++o) out[o] += model.head[f][o] * feats[f];
  return out;
}

}  // namespace sc
