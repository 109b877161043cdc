#include "prefixnet/hierarchy.hpp"

#include <cmath>
#include <limits>

#include <fmt/format.h>

#include "prefixnet/errors.hpp"
#include "prefixnet/random.hpp"

namespace prefixnet {

namespace {

std::uint64_t saturating_pow(std::uint64_t base, int exp) {
  std::uint64_t out = 1;
  for (int i = 0; i < exp; ++i) {
    if (out > std::numeric_limits<std::uint64_t>::max() / base) return std::numeric_limits<std::uint64_t>::max();
    out *= base;
  }
  return out;
}

void check_q(double q) {
  if (!(q >= 0.0 && q <= 1.0)) throw InvalidInput(fmt::format("link failure probability {} is outside [0, 1]", q));
}

void check_depth(int depth) {
  if (depth < 1) throw InvalidInput(fmt::format("path depth must be >= 1, got {}", depth));
}

void check_level_count(std::uint64_t leaders, int depth, int arity) {
  if (arity < 2) throw InvalidInput("arity must be >= 2");
  if (depth < 1) throw InvalidInput(fmt::format("leader depth must be >= 1, got {}", depth));
  const auto capacity = saturating_pow(static_cast<std::uint64_t>(arity), depth);
  if (leaders > capacity)
    throw InvalidInput(fmt::format("{} leaders at depth {} exceed the {} nodes there", leaders, depth, capacity));
}

}  // namespace

void DaryTree::validate() const {
  if (arity < 2) throw InvalidInput("tree arity must be >= 2");
  if (max_depth < 0) throw InvalidInput("tree depth must be >= 0");
}

std::uint64_t DaryTree::nodes_at_depth(int depth) const {
  return saturating_pow(static_cast<std::uint64_t>(arity), depth);
}

double DaryTree::total_nodes() const {
  validate();
  const double d = arity;
  return (std::pow(d, max_depth + 1) - 1.0) / (d - 1.0);
}

double LeaderAssignment::expected_depth() const {
  double total = 0.0;
  for (const auto& e : importance)
    for (const auto& l : leaders)
      if (l.label == e.label) total += e.p * static_cast<double>(l.path.length());
  return total;
}

double LeaderAssignment::kraft_sum() const {
  const double d = tree.arity;
  double sum = 0.0;
  for (const auto& l : leaders) sum += std::pow(d, -static_cast<double>(l.path.length()));
  return sum;
}

double node_selection_probability(std::uint64_t leaders, int depth, int arity) {
  check_level_count(leaders, depth, arity);
  return static_cast<double>(leaders) / std::pow(static_cast<double>(arity), depth);
}

double level_leader_probability(std::uint64_t leaders, int depth, int arity, int max_depth) {
  check_level_count(leaders, depth, arity);
  if (depth > max_depth)
    throw InvalidInput(fmt::format("depth {} exceeds the tree depth {}", depth, max_depth));
  return static_cast<double>(leaders) / DaryTree{arity, max_depth}.total_nodes();
}

double local_leader_probability(const LevelLeaderCounts& counts, int arity, int max_depth) {
  if (counts.s.size() > static_cast<std::size_t>(std::max(max_depth, 0)))
    throw InvalidInput(
        fmt::format("{} level counts given for a tree of depth {}", counts.s.size(), max_depth));
  double total = 0.0;
  for (std::size_t j = 0; j < counts.s.size(); ++j) {
    check_level_count(counts.s[j], static_cast<int>(j) + 1, arity);
    total += static_cast<double>(counts.s[j]);
  }
  return total / DaryTree{arity, max_depth}.total_nodes();
}

LeaderAssignment assign_leaders(const ProbabilityMassFunction& importance, int arity) {
  const PrefixCode code = huffman_code(importance, arity);
  LeaderAssignment out;
  out.tree.arity = arity;
  for (const auto& a : code.assignments()) {
    out.tree.max_depth = std::max(out.tree.max_depth, static_cast<int>(a.codeword.length()));
    out.leaders.push_back({a.label, a.codeword});
  }
  out.importance = importance.entries();
  return out;
}

LevelLeaderCounts level_counts(const LeaderAssignment& assignment) {
  LevelLeaderCounts out;
  out.s.assign(static_cast<std::size_t>(std::max(assignment.tree.max_depth, 0)), 0);
  for (const auto& l : assignment.leaders) {
    const auto depth = l.path.length();
    if (depth == 0 || depth > out.s.size())
      throw InvalidInput(fmt::format("leader '{}' sits at depth {} outside 1..{}", l.label, depth, out.s.size()));
    ++out.s[depth - 1];
  }
  return out;
}

SecurityReport verify_secure(const LeaderAssignment& assignment) {
  SecurityReport report;
  std::vector<Codeword> paths;
  for (const auto& l : assignment.leaders) paths.push_back(l.path);
  for (auto [i, j] : prefix_violations(paths))
    report.violations.emplace_back(assignment.leaders[i].label, assignment.leaders[j].label);
  return report;
}

double path_reliability(double q, int depth) {
  check_q(q);
  check_depth(depth);
  return std::pow(1.0 - q, depth);
}

double last_link_failure_probability(double q, int depth) {
  check_q(q);
  check_depth(depth);
  return std::pow(1.0 - q, depth - 1) * q;
}

double estimate_path_reliability(double q, int depth, std::uint64_t trials, std::uint64_t seed) {
  check_q(q);
  check_depth(depth);
  if (trials == 0) throw InvalidInput("Monte Carlo needs at least one trial");
  std::uint64_t ok = 0;
  std::mt19937_64 engine(mix64(seed));
  for (std::uint64_t t = 0; t < trials; ++t) {
    bool alive = true;
    for (int hop = 0; hop < depth; ++hop)
      if (unit_uniform(engine) < q) alive = false;
    ok += alive ? 1 : 0;
  }
  return static_cast<double>(ok) / static_cast<double>(trials);
}

}  // namespace prefixnet
