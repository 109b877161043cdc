#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "prefixnet/pmf.hpp"
#include "prefixnet/source_coding.hpp"

namespace prefixnet {

/// Complete D-ary tree of depth `max_depth`; nodes are digit paths from the root.
struct DaryTree {
  int arity = 2;
  int max_depth = 0;

  void validate() const;
  /// D^depth, saturating at UINT64_MAX.
  std::uint64_t nodes_at_depth(int depth) const;
  /// (D^(max_depth+1) - 1) / (D - 1), root included. For D = 2 this is the
  /// D^(max_depth+1) - 1 count usually quoted; for larger D the two differ.
  double total_nodes() const;
};

struct Leader {
  std::string label;
  Codeword path;
};

/// Leaders placed on tree nodes. Plain data: verify_secure reports whatever
/// a hand-built assignment gets wrong.
struct LeaderAssignment {
  DaryTree tree;
  std::vector<Leader> leaders;
  std::vector<PmfEntry> importance;

  double expected_depth() const;
  double kraft_sum() const;
};

/// s_j leaders at depth j (index 0 is depth 1).
struct LevelLeaderCounts {
  std::vector<std::uint64_t> s;
};

/// s_j / D^j. Throws InvalidInput unless depth >= 1 and 0 <= s_j <= D^j.
double node_selection_probability(std::uint64_t leaders, int depth, int arity);

/// s_j / total_nodes for a leader count at `depth` of a depth-`max_depth` tree.
double level_leader_probability(std::uint64_t leaders, int depth, int arity, int max_depth);

/// sum_j s_j / total_nodes. The count list may not be longer than max_depth.
double local_leader_probability(const LevelLeaderCounts& counts, int arity, int max_depth);

/// Leaders at the codewords of huffman_code(importance, D); the tree is as deep
/// as the longest codeword.
LeaderAssignment assign_leaders(const ProbabilityMassFunction& importance, int arity);

/// Per-depth leader counts of an assignment, depths 1..tree.max_depth.
LevelLeaderCounts level_counts(const LeaderAssignment& assignment);

struct SecurityReport {
  /// (ancestor label, descendant label): the first leader lies on the root
  /// path of the second, or both share a node.
  std::vector<std::pair<std::string, std::string>> violations;

  bool secure() const noexcept { return violations.empty(); }
};

SecurityReport verify_secure(const LeaderAssignment& assignment);

/// (1 - q)^depth. Throws InvalidInput unless q in [0,1] and depth >= 1.
double path_reliability(double q, int depth);

/// (1 - q)^(depth-1) q: all links but the last one to the leader survive.
double last_link_failure_probability(double q, int depth);

/// Monte Carlo estimate of path_reliability, one link draw per hop, all from
/// a single mt19937_64 stream seeded with mix64(seed).
double estimate_path_reliability(double q, int depth, std::uint64_t trials, std::uint64_t seed);

}  // namespace prefixnet
