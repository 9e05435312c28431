#include "sc/coarsen.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <queue>
#include <string>

#include "sc/eigen.hpp"
#include "sc/errors.hpp"
#include "sc/laplacian.hpp"

namespace sc {

VertexMap::VertexMap(std::vector<int> a, int k) : assignments(std::move(a)), num_supernodes(k) {
  std::vector<char> seen(k, 0);
  for (int r : assignments) {
    if (r < 0 || r >= k) throw IndexOutOfRange("vertex map target out of range");
    seen[r] = 1;
  }
  for (int r = 0; r < k; ++r) {
    if (!seen[r]) throw Error("vertex map not surjective: supernode " + std::to_string(r) + " empty");
  }
}

VertexMap VertexMap::identity(int n) {
  std::vector<int> a(n);
  std::iota(a.begin(), a.end(), 0);
  return VertexMap(std::move(a), n);
}

std::vector<int> VertexMap::cluster_sizes() const {
  std::vector<int> gamma(num_supernodes, 0);
  for (int r : assignments) ++gamma[r];
  return gamma;
}

Matrix projection_matrix(const VertexMap& map) {
  const std::vector<int> gamma = map.cluster_sizes();
  Matrix p(map.num_supernodes, map.n());
  for (int i = 0; i < map.n(); ++i) {
    const int r = map.assignments[i];
    p(r, i) = 1.0 / gamma[r];
  }
  return p;
}

Matrix lift_matrix(const VertexMap& map) {
  Matrix p(map.n(), map.num_supernodes);
  for (int i = 0; i < map.n(); ++i) p(i, map.assignments[i]) = 1.0;
  return p;
}

CoarseningResult induced_coarse_graph(const Graph& g, const VertexMap& map) {
  if (map.n() != g.n()) throw DimensionMismatch("vertex map size != graph size");
  std::map<std::pair<int, int>, double> wsum;
  for (const Edge& e : g.edges()) {
    int r = map.assignments[e.u];
    int s = map.assignments[e.v];
    if (r == s) continue;
    if (r > s) std::swap(r, s);
    wsum[{r, s}] += e.w;
  }
  std::vector<Edge> coarse_edges;
  coarse_edges.reserve(wsum.size());
  for (const auto& [key, w] : wsum) coarse_edges.push_back({key.first, key.second, w});

  Vector vw(map.num_supernodes, 0.0);
  for (int i = 0; i < g.n(); ++i) vw[map.assignments[i]] += g.vertex_weights()[i];

  CoarseningResult out;
  out.map = map;
  out.coarse = Graph(map.num_supernodes, std::move(coarse_edges), std::move(vw));
  out.levels = 1;
  return out;
}

namespace {

Matrix relaxation_test_vectors(const Graph& g, int q, Rng& rng) {
  Matrix x(g.n(), q);
  for (int i = 0; i < g.n(); ++i)
    for (int c = 0; c < q; ++c) x(i, c) = rng.uniform(-0.5, 0.5);
  return x;
}

}  // namespace

Vector contraction_scores(const Graph& g, ScoreMethod method, Rng& rng, const ScoreParams& params) {
  const Vector d = degree_vector(g);
  Vector scores(g.edges().size(), 0.0);

  switch (method) {
    case ScoreMethod::HeavyEdge: {
      for (std::size_t k = 0; k < g.edges().size(); ++k) {
        const Edge& e = g.edges()[k];
        scores[k] = e.w / std::max(d[e.u], d[e.v]);
      }
      return scores;
    }
    case ScoreMethod::AlgebraicDistance: {
      Matrix x = relaxation_test_vectors(g, params.test_vectors, rng);
      const auto adj = g.adjacency();
      // x <- (1-omega) x + omega D^{-1} W x, isolated vertices kept fixed.
      for (int sweep = 0; sweep < params.sweeps; ++sweep) {
        Matrix next(g.n(), params.test_vectors);
        for (int i = 0; i < g.n(); ++i) {
          for (int c = 0; c < params.test_vectors; ++c) next(i, c) = (1.0 - params.omega) * x(i, c);
          if (d[i] <= 0.0) {
            for (int c = 0; c < params.test_vectors; ++c) next(i, c) = x(i, c);
            continue;
          }
          for (const auto& [j, w] : adj[i]) {
            const double f = params.omega * w / d[i];
            for (int c = 0; c < params.test_vectors; ++c) next(i, c) += f * x(j, c);
          }
        }
        x = std::move(next);
      }
      for (std::size_t k = 0; k < g.edges().size(); ++k) {
        const Edge& e = g.edges()[k];
        double s = 0.0;
        for (int c = 0; c < params.test_vectors; ++c) {
          const double diff = x(e.u, c) - x(e.v, c);
          s += diff * diff;
        }
        scores[k] = -std::sqrt(s);
      }
      return scores;
    }
    case ScoreMethod::Affinity: {
      Matrix x = relaxation_test_vectors(g, params.test_vectors, rng);
      const auto adj = g.adjacency();
      // Single Gauss-Seidel sweep on Lx = 0, in vertex order.
      for (int i = 0; i < g.n(); ++i) {
        if (d[i] <= 0.0) continue;
        for (int c = 0; c < params.test_vectors; ++c) {
          double s = 0.0;
          for (const auto& [j, w] : adj[i]) s += w * x(j, c);
          x(i, c) = s / d[i];
        }
      }
      for (std::size_t k = 0; k < g.edges().size(); ++k) {
        const Edge& e = g.edges()[k];
        double xy = 0.0, xx = 0.0, yy = 0.0;
        for (int c = 0; c < params.test_vectors; ++c) {
          xy += x(e.u, c) * x(e.v, c);
          xx += x(e.u, c) * x(e.u, c);
          yy += x(e.v, c) * x(e.v, c);
        }
        scores[k] = (xx > 0.0 && yy > 0.0) ? (xy * xy) / (xx * yy) : 0.0;
      }
      return scores;
    }
  }
  throw Error("unknown score method");
}

std::vector<std::pair<int, int>> greedy_matching(const Graph& g, const Vector& scores) {
  if (scores.size() != g.edges().size())
    throw DimensionMismatch("scores must align with the edge list");
  std::vector<int> order(g.edges().size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (scores[a] != scores[b]) return scores[a] > scores[b];
    const Edge& ea = g.edges()[a];
    const Edge& eb = g.edges()[b];
    return ea.u != eb.u ? ea.u < eb.u : ea.v < eb.v;
  });
  std::vector<char> used(g.n(), 0);
  std::vector<std::pair<int, int>> matching;
  for (int k : order) {
    const Edge& e = g.edges()[k];
    if (used[e.u] || used[e.v]) continue;
    used[e.u] = used[e.v] = 1;
    matching.emplace_back(e.u, e.v);
  }
  return matching;
}

std::vector<std::pair<std::vector<int>, double>> local_variation_costs(const Graph& g,
                                                                       LocalVarVariant variant,
                                                                       int k) {
  if (k < 1) throw KTooLarge("k must be >= 1");
  if (k > g.n()) throw KTooLarge("k exceeds vertex count");

  const SymmetricMatrix l = combinatorial_laplacian(g);
  const EigenDecomposition eig = sym_eig(l);

  std::vector<std::vector<int>> candidates;
  if (variant == LocalVarVariant::Edge) {
    candidates.reserve(g.edges().size());
    for (const Edge& e : g.edges()) candidates.push_back({e.u, e.v});
  } else {
    const auto adj = g.adjacency();
    for (int v = 0; v < g.n(); ++v) {
      std::vector<int> set{v};
      for (const auto& [u, w] : adj[v]) set.push_back(u);
      std::sort(set.begin(), set.end());
      if (set.size() >= 2) candidates.push_back(std::move(set));
    }
  }

  std::vector<std::pair<std::vector<int>, double>> out;
  out.reserve(candidates.size());
  for (auto& c : candidates) {
    const int s = static_cast<int>(c.size());
    // Restriction of the first k eigenvectors, centered within the set.
    Matrix b(s, k);
    for (int i = 0; i < s; ++i)
      for (int j = 0; j < k; ++j) b(i, j) = eig.vectors(c[i], j);
    for (int j = 0; j < k; ++j) {
      double mean = 0.0;
      for (int i = 0; i < s; ++i) mean += b(i, j);
      mean /= s;
      for (int i = 0; i < s; ++i) b(i, j) -= mean;
    }
    // L_C = principal submatrix of L (internal edges plus boundary weights
    // on the diagonal).
    Matrix lc(s, s);
    for (int i = 0; i < s; ++i)
      for (int j = 0; j < s; ++j) lc(i, j) = l(c[i], c[j]);
    const Matrix lb = multiply(lc, b);
    double q = 0.0;
    for (int i = 0; i < s; ++i)
      for (int j = 0; j < k; ++j) q += b(i, j) * lb(i, j);
    out.emplace_back(std::move(c), q / (s - 1));
  }
  return out;
}

namespace {

VertexMap map_from_merges(int n, const std::vector<std::vector<int>>& groups) {
  // groups lists the merged sets; everything else stays a singleton.
  std::vector<int> assign(n, -1);
  int next = 0;
  for (const auto& grp : groups) {
    for (int v : grp) assign[v] = next;
    ++next;
  }
  for (int v = 0; v < n; ++v) {
    if (assign[v] < 0) assign[v] = next++;
  }
  // Relabel so supernode ids follow the smallest original vertex.
  std::vector<int> first(next, std::numeric_limits<int>::max());
  for (int v = 0; v < n; ++v) first[assign[v]] = std::min(first[assign[v]], v);
  std::vector<int> order(next);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return first[a] < first[b]; });
  std::vector<int> relabel(next);
  for (int r = 0; r < next; ++r) relabel[order[r]] = r;
  for (int v = 0; v < n; ++v) assign[v] = relabel[assign[v]];
  return VertexMap(std::move(assign), next);
}

VertexMap compose(const VertexMap& outer, const VertexMap& inner) {
  // inner: N -> m, outer: m -> k.
  std::vector<int> a(inner.n());
  for (int i = 0; i < inner.n(); ++i) a[i] = outer.assignments[inner.assignments[i]];
  return VertexMap(std::move(a), outer.num_supernodes);
}

VertexMap baseline_map(const Graph& g, int target, Rng& rng, int* unreachable) {
  const int n = g.n();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  for (int i = n - 1; i > 0; --i) {
    const int j = static_cast<int>(rng.uniform_int(0, i));
    std::swap(perm[i], perm[j]);
  }
  std::vector<int> landmarks(perm.begin(), perm.begin() + target);
  std::sort(landmarks.begin(), landmarks.end());

  // Multi-source Dijkstra for the distances, then an ascending-distance
  // pass over tight edges to collect the full set of tied landmarks.
  const auto adj = g.adjacency();
  constexpr double kInf = std::numeric_limits<double>::infinity();
  std::vector<double> dist(n, kInf);
  std::vector<int> landmark_id(n, -1);
  using Item = std::pair<double, int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  for (int r = 0; r < target; ++r) {
    dist[landmarks[r]] = 0.0;
    landmark_id[landmarks[r]] = r;
    heap.push({0.0, landmarks[r]});
  }
  while (!heap.empty()) {
    const auto [du, u] = heap.top();
    heap.pop();
    if (du > dist[u]) continue;
    for (const auto& [v, w] : adj[u]) {
      if (du + w < dist[v]) {
        dist[v] = du + w;
        heap.push({dist[v], v});
      }
    }
  }

  std::vector<int> order;
  order.reserve(n);
  for (int v = 0; v < n; ++v) {
    if (dist[v] < kInf) order.push_back(v);
  }
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return dist[a] != dist[b] ? dist[a] < dist[b] : a < b;
  });

  std::vector<std::vector<int>> owners(n);
  for (int v : order) {
    if (landmark_id[v] >= 0) {
      owners[v] = {landmark_id[v]};
      continue;
    }
    for (const auto& [u, w] : adj[v]) {
      if (dist[u] + w == dist[v]) {
        for (int r : owners[u]) {
          if (std::find(owners[v].begin(), owners[v].end(), r) == owners[v].end())
            owners[v].push_back(r);
        }
      }
    }
  }

  std::vector<int> assign(n, -1);
  for (int v = 0; v < n; ++v) {
    if (owners[v].empty()) {
      assign[v] = static_cast<int>(rng.uniform_int(0, target - 1));
      ++(*unreachable);
    } else if (owners[v].size() == 1) {
      assign[v] = owners[v][0];
    } else {
      std::vector<int> tied = owners[v];
      std::sort(tied.begin(), tied.end());
      assign[v] = tied[rng.uniform_int(0, static_cast<std::int64_t>(tied.size()) - 1)];
    }
  }
  return VertexMap(std::move(assign), target);
}

}  // namespace

CoarseningResult coarsen(const Graph& g, CoarsenMethod method, double ratio, Rng& rng) {
  if (!(ratio > 0.0 && ratio < 1.0)) throw TargetTooSmall("ratio must lie in (0,1)");
  const int target = static_cast<int>(std::ceil((1.0 - ratio) * g.n()));
  if (target < 2) throw TargetTooSmall("coarsening target below 2 supernodes");

  if (method == CoarsenMethod::Baseline) {
    CoarseningResult out;
    int unreachable = 0;
    const VertexMap map =
        target >= g.n() ? VertexMap::identity(g.n()) : baseline_map(g, target, rng, &unreachable);
    out = induced_coarse_graph(g, map);
    out.unreachable_warnings = unreachable;
    return out;
  }

  VertexMap total = VertexMap::identity(g.n());
  Graph current = g;
  int levels = 0;

  while (current.n() > target) {
    int budget = current.n() - target;
    std::vector<std::vector<int>> groups;

    if (method == CoarsenMethod::LocalVarEdge || method == CoarsenMethod::LocalVarNeigh) {
      const auto variant = method == CoarsenMethod::LocalVarEdge ? LocalVarVariant::Edge
                                                                 : LocalVarVariant::Neighborhood;
      auto costs = local_variation_costs(current, variant, std::min(10, current.n()));
      std::sort(costs.begin(), costs.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second < b.second;
        return a.first < b.first;
      });
      std::vector<char> used(current.n(), 0);
      for (const auto& [set, cost] : costs) {
        if (budget == 0) break;
        std::vector<int> avail;
        for (int v : set) {
          if (!used[v]) avail.push_back(v);
        }
        if (static_cast<int>(avail.size()) < 2) continue;
        if (static_cast<int>(avail.size()) - 1 > budget) avail.resize(budget + 1);
        for (int v : avail) used[v] = 1;
        budget -= static_cast<int>(avail.size()) - 1;
        groups.push_back(std::move(avail));
      }
    } else {
      const auto score_method = method == CoarsenMethod::HeavyEdge ? ScoreMethod::HeavyEdge
                                : method == CoarsenMethod::AlgebraicDistance
                                    ? ScoreMethod::AlgebraicDistance
                                    : ScoreMethod::Affinity;
      const Vector scores = contraction_scores(current, score_method, rng);
      const auto matching = greedy_matching(current, scores);
      for (const auto& [u, v] : matching) {
        if (budget == 0) break;
        groups.push_back({u, v});
        --budget;
      }
    }

    if (groups.empty()) break;  // nothing left to contract (disconnected remainder)

    const VertexMap level_map = map_from_merges(current.n(), groups);
    total = compose(level_map, total);
    current = induced_coarse_graph(current, level_map).coarse;
    ++levels;
  }

  CoarseningResult out = induced_coarse_graph(g, total);
  out.levels = levels;
  return out;
}

}  // namespace sc
