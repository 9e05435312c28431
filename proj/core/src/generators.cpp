#include "sc/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

#include "sc/errors.hpp"

namespace sc {

Graph largest_component(const Graph& g) {
  const auto adj = g.adjacency();
  std::vector<int> comp(g.n(), -1);
  int comp_count = 0;
  for (int start = 0; start < g.n(); ++start) {
    if (comp[start] >= 0) continue;
    std::vector<int> stack{start};
    comp[start] = comp_count;
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      for (const auto& [v, w] : adj[u]) {
        if (comp[v] < 0) {
          comp[v] = comp_count;
          stack.push_back(v);
        }
      }
    }
    ++comp_count;
  }
  std::vector<int> size(comp_count, 0);
  for (int v = 0; v < g.n(); ++v) ++size[comp[v]];
  const int best = static_cast<int>(std::max_element(size.begin(), size.end()) - size.begin());

  std::vector<int> relabel(g.n(), -1);
  int next = 0;
  for (int v = 0; v < g.n(); ++v) {
    if (comp[v] == best) relabel[v] = next++;
  }
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if (comp[e.u] == best && comp[e.v] == best) edges.push_back({relabel[e.u], relabel[e.v], e.w});
  }
  return Graph(next, std::move(edges));
}

namespace {

Graph finalize(int n, std::vector<Edge> edges) {
  Graph full(n, std::move(edges));
  Graph comp = largest_component(full);
  if (comp.n() < 8) throw GenerationFailed("largest component below 8 vertices");
  return comp;
}

Graph gen_er(int n, Rng& rng) {
  const double p = 0.1 * 512.0 / n;
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (rng.bernoulli(p)) edges.push_back({i, j, 1.0});
    }
  return finalize(n, std::move(edges));
}

Graph gen_ba(int n, Rng& rng) {
  constexpr int m = 4;
  if (n < m + 1) throw GenerationFailed("BA needs n > m");
  std::vector<std::pair<int, int>> pairs;
  // Connected seed: complete graph on m+1 vertices.
  for (int i = 0; i <= m; ++i)
    for (int j = i + 1; j <= m; ++j) pairs.emplace_back(i, j);
  // Attachment pool: every edge endpoint appears once per incidence.
  std::vector<int> pool;
  for (const auto& [a, b] : pairs) {
    pool.push_back(a);
    pool.push_back(b);
  }
  for (int v = m + 1; v < n; ++v) {
    std::set<int> targets;
    while (static_cast<int>(targets.size()) < m) {
      targets.insert(pool[rng.uniform_int(0, static_cast<std::int64_t>(pool.size()) - 1)]);
    }
    for (int t : targets) {
      pairs.emplace_back(t, v);
      pool.push_back(t);
      pool.push_back(v);
    }
  }
  std::vector<Edge> edges;
  edges.reserve(pairs.size());
  for (const auto& [a, b] : pairs) edges.push_back({a, b, 1.0});
  return finalize(n, std::move(edges));
}

Graph gen_ws(int n, Rng& rng) {
  constexpr int k = 10;
  constexpr double p = 0.1;
  if (n <= k) throw GenerationFailed("WS needs n > k");
  std::set<std::pair<int, int>> edge_set;
  const auto key = [](int a, int b) { return std::make_pair(std::min(a, b), std::max(a, b)); };
  for (int i = 0; i < n; ++i)
    for (int d = 1; d <= k / 2; ++d) edge_set.insert(key(i, (i + d) % n));
  // Rewire ring edges with probability p; a draw that would self-loop or
  // duplicate keeps the original edge.
  for (int d = 1; d <= k / 2; ++d) {
    for (int i = 0; i < n; ++i) {
      const auto orig = key(i, (i + d) % n);
      if (!rng.bernoulli(p)) continue;
      const int w = static_cast<int>(rng.uniform_int(0, n - 1));
      if (w == i || edge_set.count(key(i, w))) continue;
      if (!edge_set.count(orig)) continue;  // already rewired away
      edge_set.erase(orig);
      edge_set.insert(key(i, w));
    }
  }
  std::vector<Edge> edges;
  edges.reserve(edge_set.size());
  for (const auto& [a, b] : edge_set) edges.push_back({a, b, 1.0});
  return finalize(n, std::move(edges));
}

Graph gen_geo(int n, Rng& rng) {
  const double r = 5.12 / std::sqrt(static_cast<double>(n));
  std::vector<double> xs(n), ys(n);
  for (int i = 0; i < n; ++i) {
    xs[i] = rng.uniform01();
    ys[i] = rng.uniform01();
  }
  const double r2 = r * r;
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const double dx = xs[i] - xs[j];
      const double dy = ys[i] - ys[j];
      if (dx * dx + dy * dy <= r2) edges.push_back({i, j, 1.0});
    }
  return finalize(n, std::move(edges));
}

}  // namespace

Graph generate_graph(GraphKind kind, int n, Rng& rng) {
  if (n < 8) throw GenerationFailed("generator needs n >= 8");
  switch (kind) {
    case GraphKind::ER:
      return gen_er(n, rng);
    case GraphKind::BA:
      return gen_ba(n, rng);
    case GraphKind::WS:
      return gen_ws(n, rng);
    case GraphKind::GEO:
      return gen_geo(n, rng);
  }
  throw Error("unknown graph kind");
}

}  // namespace sc
