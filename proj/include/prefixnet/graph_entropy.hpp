#pragma once

#include <map>
#include <optional>

#include "prefixnet/graph.hpp"
#include "prefixnet/pmf.hpp"

namespace prefixnet {

/// p_v = deg(v) / sum of degrees, labeled by vertex id in vertex order.
/// Throws InvalidInput for an edgeless graph.
ProbabilityMassFunction degree_pmf(const Graph& g);

/// Shannon entropy (bits) of the degree pmf.
double graph_entropy(const Graph& g);

/// (1 - sum p_v^q) / (q - 1) over the degree pmf. Throws InvalidInput at q == 1.
double tsallis_graph_entropy(const Graph& g, double q);

/// H(V | C) in bits, with class weights taken from degree-pmf mass.
/// Throws InvalidInput when a vertex has no color.
double conditional_graph_entropy(const Graph& g, const VertexColoring& coloring);

/// graph_entropy(g) - conditional_graph_entropy(g, coloring).
double graph_mutual_information(const Graph& g, const VertexColoring& coloring);

/// Maps each vertex of the first graph to a vertex of the second.
using VertexCorrespondence = std::map<VertexId, VertexId>;

/// D(p1 || p2) in bits over the degree pmfs, aligned by `correspondence`.
/// Throws InvalidInput on count mismatch or a non-bijective correspondence,
/// InfiniteDivergence when p2 vanishes where p1 does not.
double graph_kl_divergence(const Graph& g1, const Graph& g2, const VertexCorrespondence& correspondence);
/// Identity correspondence; both graphs must have the same vertex ids.
double graph_kl_divergence(const Graph& g1, const Graph& g2);

struct DegreePmfs {
  ProbabilityMassFunction in;
  ProbabilityMassFunction out;
};

DegreePmfs in_out_degree_pmfs(const DiGraph& g);

/// Common degree if every vertex has the same degree.
std::optional<std::size_t> is_regular(const Graph& g);

}  // namespace prefixnet
