#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace prefixnet {

using VertexId = std::string;

struct Edge {
  std::size_t u = 0;  // vertex indices, u < v
  std::size_t v = 0;
};

/// Simple undirected graph over string ids. Vertices keep insertion order;
/// internally everything is addressed by index.
class Graph {
 public:
  Graph() = default;

  /// Returns the index of `id`, adding it if it is new.
  std::size_t add_vertex(std::string_view id);
  /// Throws InvalidInput on self-loops and duplicate edges. Returns the edge index.
  std::size_t add_edge(std::string_view a, std::string_view b);

  std::size_t vertex_count() const noexcept { return ids_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  const std::vector<VertexId>& vertices() const noexcept { return ids_; }
  const VertexId& id(std::size_t index) const { return ids_[index]; }
  std::optional<std::size_t> index_of(std::string_view id) const;
  /// Like index_of but throws InvalidInput for unknown ids.
  std::size_t require(std::string_view id) const;

  const std::vector<Edge>& edges() const noexcept { return edges_; }
  /// Neighbor lists hold (neighbor index, edge index) in edge insertion order.
  const std::vector<std::pair<std::size_t, std::size_t>>& neighbors(std::size_t v) const { return adjacency_[v]; }
  std::size_t degree(std::size_t v) const { return adjacency_[v].size(); }
  std::optional<std::size_t> edge_between(std::size_t a, std::size_t b) const;

  bool is_connected() const;
  /// Connected with exactly |V| - 1 edges.
  bool is_tree() const;

 private:
  std::vector<VertexId> ids_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adjacency_;
};

/// Graph with a nonnegative finite weight per edge (indexed like edges()).
class WeightedGraph {
 public:
  WeightedGraph() = default;

  std::size_t add_vertex(std::string_view id) { return graph_.add_vertex(id); }
  std::size_t add_edge(std::string_view a, std::string_view b, double weight);

  const Graph& graph() const noexcept { return graph_; }
  double weight(std::size_t edge) const { return weights_[edge]; }
  const std::vector<double>& weights() const noexcept { return weights_; }
  double total_weight() const;

 private:
  Graph graph_;
  std::vector<double> weights_;
};

struct Arc {
  std::size_t from = 0;
  std::size_t to = 0;
};

class DiGraph {
 public:
  std::size_t add_vertex(std::string_view id);
  /// Throws InvalidInput on self-loops and duplicate arcs.
  std::size_t add_arc(std::string_view from, std::string_view to);

  std::size_t vertex_count() const noexcept { return ids_.size(); }
  const std::vector<VertexId>& vertices() const noexcept { return ids_; }
  const std::vector<Arc>& arcs() const noexcept { return arcs_; }

 private:
  std::vector<VertexId> ids_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<Arc> arcs_;
};

/// vertex id -> color label
using VertexColoring = std::map<VertexId, std::string>;

/// Subgraph of `g` keeping every vertex and the listed edges (weights copied).
WeightedGraph edge_subgraph(const WeightedGraph& g, const std::vector<std::size_t>& edge_indices);
Graph edge_subgraph(const Graph& g, const std::vector<std::size_t>& edge_indices);

}  // namespace prefixnet
