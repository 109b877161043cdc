#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "prefixnet/graph.hpp"

namespace prefixnet {

/// Exhaustive enumeration refuses graphs with more vertices than this.
inline constexpr std::size_t kEnumerationVertexLimit = 9;

/// Edge indices ordered by (smaller endpoint id, larger endpoint id),
/// comparing ids as strings. This is the canonical edge order used for
/// enumeration order and MST tie-breaking.
std::vector<std::size_t> lexicographic_edge_order(const Graph& g);

/// Number of spanning trees by the matrix-tree theorem (exact integer
/// determinant of a reduced Laplacian).
std::uint64_t matrix_tree_count(const Graph& g);

/// Calls `visit` with the edge indices of every spanning tree, trees in
/// lexicographic order of their edge lists under lexicographic_edge_order.
/// Throws Disconnected or SizeGuardExceeded.
void for_each_spanning_tree(const Graph& g, const std::function<void(std::span<const std::size_t>)>& visit);

/// Materialized spanning trees (same order as for_each_spanning_tree). The
/// count is cross-checked against matrix_tree_count.
std::vector<Graph> enumerate_spanning_trees(const Graph& g);

struct SpanningEntropyExtrema {
  double min = 0.0;
  double max = 0.0;
  Graph argmin;
  Graph argmax;
  std::uint64_t tree_count = 0;
};

/// Extrema of graph entropy over all spanning trees; ties keep the earliest tree.
SpanningEntropyExtrema spanning_tree_entropy_extrema(const Graph& g);

/// Kruskal over edges sorted by (weight, lexicographic endpoints). Returns the
/// edge indices of the tree. Throws Disconnected.
std::vector<std::size_t> minimum_spanning_tree_edges(const WeightedGraph& g);
WeightedGraph minimum_spanning_tree(const WeightedGraph& g);

struct MstEntropyExtrema {
  double min = 0.0;
  double max = 0.0;
  double min_weight = 0.0;
  std::uint64_t mst_count = 0;
};

/// Entropy extrema over the spanning trees whose total weight is minimal.
/// Weights are compared with a relative tolerance of 1e-9.
MstEntropyExtrema mst_entropy_extrema(const WeightedGraph& g);

}  // namespace prefixnet
