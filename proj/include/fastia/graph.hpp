#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "fastia/problems.hpp"

namespace fastia {

/// Simple undirected graph: no self-loops, no duplicate edges.
class Graph {
 public:
  Graph(std::size_t vertex_count, std::vector<std::pair<std::uint32_t, std::uint32_t>> edges);

  std::size_t vertex_count() const { return adjacency_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<std::pair<std::uint32_t, std::uint32_t>>& edges() const { return edges_; }
  const std::vector<std::vector<std::uint32_t>>& adjacency() const { return adjacency_; }

 private:
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges_;
  std::vector<std::vector<std::uint32_t>> adjacency_;
};

enum class GraphKind { star, complete, path };

/// star: all edges incident to vertex 0; complete: all pairs; path: chain.
Graph generate_graph(GraphKind kind, std::size_t n);
GraphKind graph_kind_from_name(const std::string& name);

/// DIMACS edge format: "p edge N M" header, "e u v" lines, 1-indexed vertices,
/// "c" comment lines. Throws ParseError with the offending line number.
Graph parse_graph(std::istream& in);
void serialise_graph(std::ostream& out, const Graph& g);

/// Node-representation fitness: cover size plus n times the uncovered-edge
/// incidences, counted once per unselected endpoint.
double vc_node_fitness(const BitString& x, const Graph& g);

/// True iff the selected vertex set covers every edge.
bool vc_is_cover(const BitString& x, const Graph& g);

/// Edge-representation fitness: vc_node_fitness of the cover induced by the
/// endpoints of selected edges, plus (|V|+1)(m+1) per ordered pair of distinct
/// adjacent selected edges.
double vc_edge_fitness(const BitString& x_edges, const Graph& g);

/// True iff the selected edges form a maximal matching: pairwise non-adjacent
/// and every graph edge shares an endpoint with a selected edge.
bool vc_two_approx_target(const BitString& x_edges, const Graph& g);

/// Minimise vc_node_fitness; target is feasibility (all edges covered).
class VertexCoverNodeProblem final : public Problem {
 public:
  explicit VertexCoverNodeProblem(Graph g);

  std::size_t dimension() const override { return graph_.vertex_count(); }
  Direction direction() const override { return Direction::minimise; }
  double evaluate(const BitString& x) const override { return vc_node_fitness(x, graph_); }
  bool is_target(const BitString&, double fitness) const override {
    // Penalty-free values are at most |V|; any uncovered edge adds >= n.
    return fitness <= static_cast<double>(graph_.vertex_count()) + 0.5;
  }
  std::string descriptor() const override;

  const Graph& graph() const { return graph_; }

 private:
  Graph graph_;
};

/// Minimise vc_edge_fitness; target is the maximal-matching 2-approximation.
class VertexCoverEdgeProblem final : public Problem {
 public:
  explicit VertexCoverEdgeProblem(Graph g);

  std::size_t dimension() const override { return graph_.edge_count(); }
  Direction direction() const override { return Direction::minimise; }
  double evaluate(const BitString& x) const override { return vc_edge_fitness(x, graph_); }
  bool is_target(const BitString& x, double) const override {
    return vc_two_approx_target(x, graph_);
  }
  std::string descriptor() const override;

  const Graph& graph() const { return graph_; }

 private:
  Graph graph_;
};

}  // namespace fastia
