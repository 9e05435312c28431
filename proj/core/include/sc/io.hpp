#pragma once

#include <iosfwd>
#include <string>

#include "sc/coarsen.hpp"
#include "sc/graph.hpp"

namespace sc {

/// Edge-list text format: optional header `# n=<N>`, body lines
/// `<i> <j> <w>` with 0-based indices and i < j, optional vertex-weight
/// sidecar lines `v <i> <gamma>`.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);
void write_edge_list(const Graph& g, std::ostream& out);
void write_edge_list_file(const Graph& g, const std::string& path);

/// Vertex-map text format: one `<original_vertex> <supernode>` line per
/// vertex, 0-based.
VertexMap read_vertex_map(std::istream& in);
void write_vertex_map(const VertexMap& map, std::ostream& out);

/// Shortest round-trippable decimal form of a double.
std::string format_double(double v);

}  // namespace sc
