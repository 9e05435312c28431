#pragma once

#include "sc/graph.hpp"
#include "sc/rng.hpp"

namespace sc {

enum class GraphKind { ER, BA, WS, GEO };

/// Synthetic generators with the parameters pinned to the experiment setup:
/// ER p = 51.2/n, BA m = 4, WS ring degree 10 with rewire 0.1, GEO radius
/// 5.12/sqrt(n) in the unit square. Disconnected samples are reduced to the
/// largest connected component (unit edge weights). Throws GenerationFailed
/// when that component has fewer than 8 vertices.
Graph generate_graph(GraphKind kind, int n, Rng& rng);

/// Largest connected component, vertices relabeled in increasing original
/// order.
Graph largest_component(const Graph& g);

}  // namespace sc
