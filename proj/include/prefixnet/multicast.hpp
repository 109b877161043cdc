#pragma once

#include <optional>
#include <string>
#include <vector>

#include "prefixnet/graph.hpp"
#include "prefixnet/hierarchy.hpp"
#include "prefixnet/pmf.hpp"
#include "prefixnet/source_coding.hpp"

namespace prefixnet {

struct EmbeddedNode {
  VertexId vertex;
  std::optional<std::size_t> parent;  // index into EmbeddedDaryTree::nodes()
  std::vector<std::size_t> children;  // child i is reached with digit i
  double parent_edge_weight = 0.0;
  Codeword path;
};

/// Rooted D-ary tree carved out of a spanning tree. Every node keeps its D
/// lightest child edges (ties by vertex id); the rest hang off as pruned
/// subtrees that cannot host a leader.
class EmbeddedDaryTree {
 public:
  EmbeddedDaryTree() = default;
  EmbeddedDaryTree(VertexId root, int arity, std::vector<EmbeddedNode> nodes, std::vector<VertexId> pruned);

  const VertexId& root() const noexcept { return root_; }
  int arity() const noexcept { return arity_; }
  /// Breadth-first; nodes()[0] is the root.
  const std::vector<EmbeddedNode>& nodes() const noexcept { return nodes_; }
  /// Vertices of the spanning tree that are not reachable inside the embedding.
  const std::vector<VertexId>& pruned() const noexcept { return pruned_; }

  /// Node addressed by a digit path, or nullptr if the path leaves the tree.
  const EmbeddedNode* find(const Codeword& path) const;
  /// Vertex ids from the root down to the addressed node (empty if absent).
  std::vector<VertexId> vertex_path(const Codeword& path) const;
  int depth() const;

 private:
  VertexId root_;
  int arity_ = 2;
  std::vector<EmbeddedNode> nodes_;
  std::vector<VertexId> pruned_;
};

/// Throws InvalidInput when `root` is absent or `spanning_tree` is not a tree.
EmbeddedDaryTree embed_dary_tree(const WeightedGraph& spanning_tree, const VertexId& root, int arity);

struct PlannedLeader {
  std::string label;
  double probability = 0.0;
  Codeword path;
  VertexId vertex;
  std::vector<VertexId> vertex_path;
};

struct MulticastPlan {
  VertexId root;
  int arity = 2;
  WeightedGraph tree;
  double tree_weight = 0.0;
  EmbeddedDaryTree embedding;
  std::vector<PlannedLeader> leaders;
  double expected_depth = 0.0;
  double kraft_sum = 0.0;
  SecurityReport security;
  /// Set when the placement came from the depth-extension retry instead of
  /// the optimal code.
  bool heuristic = false;

  LeaderAssignment assignment() const;
};

/// minimum_spanning_tree -> embed_dary_tree -> huffman_code -> map codewords
/// onto the embedding. Throws CapacityExceeded when a codeword names a node
/// the embedding lacks.
MulticastPlan plan_multicast(const WeightedGraph& g, const VertexId& root, const ProbabilityMassFunction& importance,
                             int arity);

/// Like plan_multicast, but on CapacityExceeded retries canonical codes with
/// every Huffman length increased by 1, 2, ... up to the embedding depth.
/// The result is flagged heuristic when a retry was needed.
MulticastPlan plan_multicast_relaxed(const WeightedGraph& g, const VertexId& root,
                                     const ProbabilityMassFunction& importance, int arity);

enum class CheckStatus { pass, fail, skipped };

struct AuditCheck {
  std::string name;
  CheckStatus status = CheckStatus::fail;
  std::string detail;
};

struct AuditReport {
  std::vector<AuditCheck> checks;
  bool passed() const;
};

/// Brute-force minimum spanning weight is only checked for graphs up to this size.
inline constexpr std::size_t kAuditVertexLimit = 8;

/// Re-derives the plan's claims from `g`: minimal tree weight (exhaustive, up
/// to kAuditVertexLimit vertices), tree edges drawn from g, prefix-free
/// paths, path containment, expected depth, Kraft sum.
AuditReport plan_cost_audit(const MulticastPlan& plan, const WeightedGraph& g);

std::string to_string(CheckStatus status);

}  // namespace prefixnet
