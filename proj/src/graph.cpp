#include "fastia/graph.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

namespace fastia {

Graph::Graph(std::size_t vertex_count,
             std::vector<std::pair<std::uint32_t, std::uint32_t>> edges)
    : edges_(std::move(edges)), adjacency_(vertex_count) {
  std::set<std::pair<std::uint32_t, std::uint32_t>> seen;
  for (auto& [u, v] : edges_) {
    if (u >= vertex_count || v >= vertex_count)
      throw ConfigError("graph: edge endpoint out of range");
    if (u == v) throw ConfigError("graph: self-loops are not allowed");
    if (u > v) std::swap(u, v);
    if (!seen.insert({u, v}).second) throw ConfigError("graph: duplicate edge");
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
  }
}

Graph generate_graph(GraphKind kind, std::size_t n) {
  if (n < 2) throw ConfigError("graph generator: need at least 2 vertices");
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
  switch (kind) {
    case GraphKind::star:
      for (std::uint32_t v = 1; v < n; ++v) edges.emplace_back(0u, v);
      break;
    case GraphKind::complete:
      for (std::uint32_t u = 0; u < n; ++u)
        for (std::uint32_t v = u + 1; v < n; ++v) edges.emplace_back(u, v);
      break;
    case GraphKind::path:
      for (std::uint32_t v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
      break;
  }
  return Graph(n, std::move(edges));
}

GraphKind graph_kind_from_name(const std::string& name) {
  if (name == "star") return GraphKind::star;
  if (name == "complete") return GraphKind::complete;
  if (name == "path") return GraphKind::path;
  throw ConfigError("unknown graph kind '" + name + "' (expected star, complete or path)");
}

Graph parse_graph(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  std::size_t declared_vertices = 0, declared_edges = 0;
  bool have_header = false;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
  std::set<std::pair<std::uint32_t, std::uint32_t>> seen;

  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag)) continue;  // blank
    if (tag == "c") continue;    // comment
    if (tag == "p") {
      if (have_header) throw ParseError("duplicate problem line", line_no);
      std::string format;
      long long n = 0, m = 0;
      if (!(ls >> format >> n >> m) || format != "edge" || n <= 0 || m < 0)
        throw ParseError("expected 'p edge N M'", line_no);
      declared_vertices = static_cast<std::size_t>(n);
      declared_edges = static_cast<std::size_t>(m);
      have_header = true;
      continue;
    }
    if (tag == "e") {
      if (!have_header) throw ParseError("edge line before 'p edge' header", line_no);
      long long u = 0, v = 0;
      if (!(ls >> u >> v)) throw ParseError("expected 'e u v'", line_no);
      if (u < 1 || v < 1 || u > static_cast<long long>(declared_vertices) ||
          v > static_cast<long long>(declared_vertices))
        throw ParseError("vertex index out of range", line_no);
      if (u == v) throw ParseError("self-loop", line_no);
      auto a = static_cast<std::uint32_t>(u - 1);
      auto b = static_cast<std::uint32_t>(v - 1);
      if (a > b) std::swap(a, b);
      if (!seen.insert({a, b}).second) throw ParseError("duplicate edge", line_no);
      edges.emplace_back(a, b);
      continue;
    }
    throw ParseError("unrecognised line tag '" + tag + "'", line_no);
  }
  if (!have_header) throw ParseError("missing 'p edge N M' header");
  if (edges.size() != declared_edges)
    throw ParseError("header declares " + std::to_string(declared_edges) + " edges but " +
                     std::to_string(edges.size()) + " were given");
  return Graph(declared_vertices, std::move(edges));
}

void serialise_graph(std::ostream& out, const Graph& g) {
  out << "p edge " << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const auto& [u, v] : g.edges()) out << "e " << (u + 1) << ' ' << (v + 1) << '\n';
}

double vc_node_fitness(const BitString& x, const Graph& g) {
  // An uncovered edge has both endpoints unselected, so it contributes one
  // incidence at each endpoint: penalty = 2 * n * (#uncovered edges).
  const double n = static_cast<double>(g.vertex_count());
  std::size_t uncovered = 0;
  for (const auto& [u, v] : g.edges())
    if (!x.test(u) && !x.test(v)) ++uncovered;
  return static_cast<double>(x.count_ones()) + n * 2.0 * static_cast<double>(uncovered);
}

bool vc_is_cover(const BitString& x, const Graph& g) {
  for (const auto& [u, v] : g.edges())
    if (!x.test(u) && !x.test(v)) return false;
  return true;
}

double vc_edge_fitness(const BitString& x_edges, const Graph& g) {
  const std::size_t vertices = g.vertex_count();
  const std::size_t m = g.edge_count();
  std::vector<std::uint32_t> incident(vertices, 0);
  for (std::size_t e = 0; e < m; ++e) {
    if (x_edges.test(e)) {
      ++incident[g.edges()[e].first];
      ++incident[g.edges()[e].second];
    }
  }
  std::size_t cover_size = 0;
  std::uint64_t ordered_adjacent_pairs = 0;
  for (std::size_t v = 0; v < vertices; ++v) {
    if (incident[v] > 0) ++cover_size;
    ordered_adjacent_pairs +=
        static_cast<std::uint64_t>(incident[v]) * (incident[v] - 1);
  }
  std::size_t uncovered = 0;
  for (const auto& [u, v] : g.edges())
    if (incident[u] == 0 && incident[v] == 0) ++uncovered;
  const double n = static_cast<double>(vertices);
  const double f_v = static_cast<double>(cover_size) + n * 2.0 * static_cast<double>(uncovered);
  return f_v + (n + 1.0) * (static_cast<double>(m) + 1.0) *
                   static_cast<double>(ordered_adjacent_pairs);
}

bool vc_two_approx_target(const BitString& x_edges, const Graph& g) {
  const std::size_t vertices = g.vertex_count();
  const std::size_t m = g.edge_count();
  std::vector<std::uint32_t> incident(vertices, 0);
  bool any_selected = false;
  for (std::size_t e = 0; e < m; ++e) {
    if (x_edges.test(e)) {
      any_selected = true;
      if (++incident[g.edges()[e].first] > 1) return false;   // adjacent selected edges
      if (++incident[g.edges()[e].second] > 1) return false;
    }
  }
  if (!any_selected && m > 0) return false;
  for (const auto& [u, v] : g.edges())
    if (incident[u] == 0 && incident[v] == 0) return false;  // edge not touched
  return true;
}

VertexCoverNodeProblem::VertexCoverNodeProblem(Graph g) : graph_(std::move(g)) {}

std::string VertexCoverNodeProblem::descriptor() const {
  return "vc-node-" + std::to_string(graph_.vertex_count()) + "v" +
         std::to_string(graph_.edge_count()) + "e";
}

VertexCoverEdgeProblem::VertexCoverEdgeProblem(Graph g) : graph_(std::move(g)) {
  if (graph_.edge_count() == 0) throw ConfigError("vc-edge: graph has no edges");
}

std::string VertexCoverEdgeProblem::descriptor() const {
  return "vc-edge-" + std::to_string(graph_.vertex_count()) + "v" +
         std::to_string(graph_.edge_count()) + "e";
}

}  // namespace fastia
