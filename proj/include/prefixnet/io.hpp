#pragma once

#include <map>
#include <string>
#include <vector>

#include "prefixnet/fusion.hpp"
#include "prefixnet/gossip.hpp"
#include "prefixnet/graph.hpp"
#include "prefixnet/graph_entropy.hpp"
#include "prefixnet/pmf.hpp"

// Line-oriented text formats. Everything after '#' is a comment, blank lines
// are skipped, tokens are separated by whitespace. Errors carry the source
// name and 1-based line number.

namespace prefixnet::io {

struct TextSource {
  std::string name;
  std::string content;
};

/// Reads a whole file; "-" reads standard input. Throws IoError.
TextSource read_source(const std::string& path);

/// `label probability` per line.
ProbabilityMassFunction parse_pmf(const TextSource& src);

/// One integer per line.
std::vector<int> parse_lengths(const TextSource& src);

/// `u v` or `u v w` edge lines plus `vertex u` declarations for isolated
/// vertices. Weights, when present, are ignored.
Graph parse_graph(const TextSource& src);

/// Same format; every edge line must carry a weight.
WeightedGraph parse_weighted_graph(const TextSource& src);

/// Same format, each edge line read as an arc u -> v.
DiGraph parse_digraph(const TextSource& src);

/// `vertex color` per line.
VertexColoring parse_coloring(const TextSource& src);

/// `u v` per line: vertex u of the first graph corresponds to v of the second.
VertexCorrespondence parse_correspondence(const TextSource& src);

/// `vertex x y` per line.
std::map<VertexId, Point> parse_positions(const TextSource& src);

/// `lo hi` per line.
std::vector<Interval> parse_intervals(const TextSource& src);

}  // namespace prefixnet::io
