#include "sc/io.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <vector>

#include "sc/errors.hpp"

namespace sc {

std::string format_double(double v) {
  // Shortest representation that parses back to the same value.
  char buf[40];
  for (int prec = 1; prec <= 17; ++prec) {
    std::snprintf(buf, sizeof(buf), "%.*g", prec, v);
    if (std::strtod(buf, nullptr) == v) break;
  }
  return buf;
}

Graph read_edge_list(std::istream& in) {
  int n = -1;
  std::vector<Edge> edges;
  std::vector<std::pair<int, double>> vweights;
  int max_vertex = -1;

  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    if (line[0] == '#') {
      const auto pos = line.find("n=");
      if (pos != std::string::npos) n = std::stoi(line.substr(pos + 2));
      continue;
    }
    std::istringstream ls(line);
    if (line[0] == 'v') {
      char tag;
      int i;
      double gamma;
      if (!(ls >> tag >> i >> gamma))
        throw ParseError("bad vertex-weight line " + std::to_string(lineno));
      vweights.emplace_back(i, gamma);
      max_vertex = std::max(max_vertex, i);
      continue;
    }
    int i, j;
    double w;
    if (!(ls >> i >> j >> w)) throw ParseError("bad edge line " + std::to_string(lineno));
    if (i >= j) throw ParseError("edge line " + std::to_string(lineno) + " must have i < j");
    edges.push_back({i, j, w});
    max_vertex = std::max(max_vertex, j);
  }
  if (n < 0) n = max_vertex + 1;

  Vector vw(n, 1.0);
  for (const auto& [i, gamma] : vweights) {
    if (i < 0 || i >= n) throw ParseError("vertex-weight index out of range");
    vw[i] = gamma;
  }
  return Graph(n, std::move(edges), std::move(vw));
}

Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return read_edge_list(in);
}

void write_edge_list(const Graph& g, std::ostream& out) {
  out << "# n=" << g.n() << "\n";
  for (const Edge& e : g.edges())
    out << e.u << " " << e.v << " " << format_double(e.w) << "\n";
  bool any = false;
  for (double w : g.vertex_weights()) {
    if (w != 1.0) {
      any = true;
      break;
    }
  }
  if (any) {
    for (int i = 0; i < g.n(); ++i)
      out << "v " << i << " " << format_double(g.vertex_weights()[i]) << "\n";
  }
}

void write_edge_list_file(const Graph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot open " + path + " for writing");
  write_edge_list(g, out);
}

VertexMap read_vertex_map(std::istream& in) {
  std::vector<std::pair<int, int>> entries;
  int max_vertex = -1, max_super = -1;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    int v, r;
    if (!(ls >> v >> r)) throw ParseError("bad vertex-map line");
    entries.emplace_back(v, r);
    max_vertex = std::max(max_vertex, v);
    max_super = std::max(max_super, r);
  }
  std::vector<int> assign(max_vertex + 1, -1);
  for (const auto& [v, r] : entries) {
    if (v < 0 || assign[v] >= 0) throw ParseError("vertex-map entries must be unique");
    assign[v] = r;
  }
  for (int v = 0; v <= max_vertex; ++v) {
    if (assign[v] < 0) throw ParseError("vertex " + std::to_string(v) + " missing from map");
  }
  return VertexMap(std::move(assign), max_super + 1);
}

void write_vertex_map(const VertexMap& map, std::ostream& out) {
  for (int v = 0; v < map.n(); ++v) out << v << " " << map.assignments[v] << "\n";
}

}  // namespace sc
