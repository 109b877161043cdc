#include "prefixnet/multicast.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <set>
#include <span>

#include <fmt/format.h>

#include "prefixnet/errors.hpp"
#include "prefixnet/spanning_tree.hpp"

namespace prefixnet {

EmbeddedDaryTree::EmbeddedDaryTree(VertexId root, int arity, std::vector<EmbeddedNode> nodes,
                                   std::vector<VertexId> pruned)
    : root_(std::move(root)), arity_(arity), nodes_(std::move(nodes)), pruned_(std::move(pruned)) {}

const EmbeddedNode* EmbeddedDaryTree::find(const Codeword& path) const {
  if (nodes_.empty()) return nullptr;
  const EmbeddedNode* node = &nodes_.front();
  for (auto digit : path.digits()) {
    if (digit >= node->children.size()) return nullptr;
    node = &nodes_[node->children[digit]];
  }
  return node;
}

std::vector<VertexId> EmbeddedDaryTree::vertex_path(const Codeword& path) const {
  std::vector<VertexId> out;
  if (nodes_.empty()) return out;
  const EmbeddedNode* node = &nodes_.front();
  out.push_back(node->vertex);
  for (auto digit : path.digits()) {
    if (digit >= node->children.size()) return {};
    node = &nodes_[node->children[digit]];
    out.push_back(node->vertex);
  }
  return out;
}

int EmbeddedDaryTree::depth() const {
  std::size_t deepest = 0;
  for (const auto& n : nodes_) deepest = std::max(deepest, n.path.length());
  return static_cast<int>(deepest);
}

EmbeddedDaryTree embed_dary_tree(const WeightedGraph& spanning_tree, const VertexId& root, int arity) {
  if (arity < 2) throw InvalidInput("arity must be >= 2");
  const Graph& g = spanning_tree.graph();
  const auto root_index = g.index_of(root);
  if (!root_index) throw InvalidInput(fmt::format("root '{}' is not a vertex of the spanning tree", root));
  if (!g.is_tree()) throw InvalidInput("embedding input is not a tree");

  std::vector<EmbeddedNode> nodes;
  std::vector<VertexId> pruned;
  std::vector<std::size_t> vertex_of;  // node index -> graph vertex index
  std::vector<std::optional<std::size_t>> parent_vertex;
  nodes.push_back({root, std::nullopt, {}, 0.0, Codeword{}});
  vertex_of.push_back(*root_index);
  parent_vertex.push_back(std::nullopt);

  // Everything under a dropped child is pruned as a whole.
  auto prune_subtree = [&](std::size_t start, std::size_t from) {
    std::vector<std::pair<std::size_t, std::size_t>> stack{{start, from}};
    while (!stack.empty()) {
      auto [v, p] = stack.back();
      stack.pop_back();
      pruned.push_back(g.id(v));
      for (auto [n, e] : g.neighbors(v))
        if (n != p) stack.emplace_back(n, v);
    }
  };

  for (std::size_t idx = 0; idx < nodes.size(); ++idx) {
    const std::size_t v = vertex_of[idx];
    std::vector<std::pair<double, std::size_t>> kids;  // (weight, vertex)
    for (auto [n, e] : g.neighbors(v))
      if (!parent_vertex[idx] || n != *parent_vertex[idx]) kids.emplace_back(spanning_tree.weight(e), n);
    std::sort(kids.begin(), kids.end(), [&](const auto& a, const auto& b) {
      if (a.first != b.first) return a.first < b.first;
      return g.id(a.second) < g.id(b.second);
    });
    for (std::size_t k = 0; k < kids.size(); ++k) {
      if (k >= static_cast<std::size_t>(arity)) {
        prune_subtree(kids[k].second, v);
        continue;
      }
      auto digits = nodes[idx].path.digits();
      digits.push_back(static_cast<std::uint32_t>(k));
      nodes[idx].children.push_back(nodes.size());
      nodes.push_back({g.id(kids[k].second), idx, {}, kids[k].first, Codeword(std::move(digits))});
      vertex_of.push_back(kids[k].second);
      parent_vertex.push_back(v);
    }
  }
  return EmbeddedDaryTree(root, arity, std::move(nodes), std::move(pruned));
}

LeaderAssignment MulticastPlan::assignment() const {
  LeaderAssignment out;
  out.tree.arity = arity;
  for (const auto& l : leaders) {
    out.tree.max_depth = std::max(out.tree.max_depth, static_cast<int>(l.path.length()));
    out.leaders.push_back({l.label, l.path});
    out.importance.push_back({l.label, l.probability});
  }
  return out;
}

namespace {

MulticastPlan map_code(const WeightedGraph& mst, const EmbeddedDaryTree& embedding, const PrefixCode& code,
                       const ProbabilityMassFunction& importance) {
  MulticastPlan plan;
  plan.root = embedding.root();
  plan.arity = embedding.arity();
  plan.tree = mst;
  plan.tree_weight = mst.total_weight();
  plan.embedding = embedding;
  for (const auto& a : code.assignments()) {
    const EmbeddedNode* node = embedding.find(a.codeword);
    if (node == nullptr)
      throw CapacityExceeded(fmt::format(
          "leader '{}' needs tree node {} but the embedded {}-ary tree rooted at '{}' has no such node", a.label,
          a.codeword.to_string(embedding.arity()), embedding.arity(), embedding.root()));
    const double p = *importance.probability(a.label);
    plan.leaders.push_back({a.label, p, a.codeword, node->vertex, embedding.vertex_path(a.codeword)});
    plan.expected_depth += p * static_cast<double>(a.codeword.length());
    plan.kraft_sum += std::pow(static_cast<double>(plan.arity), -static_cast<double>(a.codeword.length()));
  }
  plan.security = verify_secure(plan.assignment());
  return plan;
}

std::vector<std::string> labels_of(const ProbabilityMassFunction& pmf) {
  std::vector<std::string> labels;
  for (const auto& e : pmf.entries()) labels.push_back(e.label);
  return labels;
}

}  // namespace

MulticastPlan plan_multicast(const WeightedGraph& g, const VertexId& root, const ProbabilityMassFunction& importance,
                             int arity) {
  if (!g.graph().index_of(root)) throw InvalidInput(fmt::format("root '{}' is not a vertex of the graph", root));
  const WeightedGraph mst = minimum_spanning_tree(g);
  const EmbeddedDaryTree embedding = embed_dary_tree(mst, root, arity);
  return map_code(mst, embedding, huffman_code(importance, arity), importance);
}

MulticastPlan plan_multicast_relaxed(const WeightedGraph& g, const VertexId& root,
                                     const ProbabilityMassFunction& importance, int arity) {
  if (!g.graph().index_of(root)) throw InvalidInput(fmt::format("root '{}' is not a vertex of the graph", root));
  const WeightedGraph mst = minimum_spanning_tree(g);
  const EmbeddedDaryTree embedding = embed_dary_tree(mst, root, arity);
  const auto base = huffman_lengths(importance, arity);
  const auto labels = labels_of(importance);
  std::string last_error;
  for (int extra = 0; extra <= embedding.depth(); ++extra) {
    CodeLengthSet lengths{base, arity};
    for (int& n : lengths.lengths) n += extra;
    try {
      auto plan = map_code(mst, embedding, code_from_lengths(lengths, labels), importance);
      plan.heuristic = extra > 0;
      return plan;
    } catch (const CapacityExceeded& e) {
      last_error = e.what();
    }
  }
  throw CapacityExceeded(last_error + " (depth-extended retries exhausted)");
}

bool AuditReport::passed() const {
  return std::none_of(checks.begin(), checks.end(),
                      [](const AuditCheck& c) { return c.status == CheckStatus::fail; });
}

std::string to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::pass: return "PASS";
    case CheckStatus::fail: return "FAIL";
    case CheckStatus::skipped: return "SKIP";
  }
  return "?";
}

AuditReport plan_cost_audit(const MulticastPlan& plan, const WeightedGraph& g) {
  AuditReport report;
  const Graph& base = g.graph();
  auto add = [&](std::string name, bool ok, std::string detail) {
    report.checks.push_back({std::move(name), ok ? CheckStatus::pass : CheckStatus::fail, std::move(detail)});
  };

  // The plan's tree must be a spanning tree of g using g's own edge weights.
  {
    const Graph& t = plan.tree.graph();
    bool ok = t.is_tree() && t.vertex_count() == base.vertex_count();
    double weight = 0.0;
    std::string detail = ok ? "" : "plan tree is not a spanning tree of the graph";
    for (std::size_t e = 0; ok && e < t.edge_count(); ++e) {
      const auto u = base.index_of(t.id(t.edges()[e].u));
      const auto v = base.index_of(t.id(t.edges()[e].v));
      const auto ge = (u && v) ? base.edge_between(*u, *v) : std::nullopt;
      if (!ge || g.weight(*ge) != plan.tree.weight(e)) {
        ok = false;
        detail = fmt::format("tree edge {} {} is not a graph edge with the same weight", t.id(t.edges()[e].u),
                             t.id(t.edges()[e].v));
      }
      weight += plan.tree.weight(e);
    }
    if (ok && std::abs(weight - plan.tree_weight) > 1e-9 * std::max(1.0, weight)) {
      ok = false;
      detail = fmt::format("tree edges sum to {} but the plan reports {}", weight, plan.tree_weight);
    }
    add("tree_from_graph", ok, detail);
  }

  if (base.vertex_count() <= kAuditVertexLimit) {
    double best = std::numeric_limits<double>::infinity();
    for_each_spanning_tree(base, [&](std::span<const std::size_t> edges) {
      double w = 0.0;
      for (auto e : edges) w += g.weight(e);
      best = std::min(best, w);
    });
    const bool ok = std::abs(best - plan.tree_weight) <= 1e-9 * std::max(1.0, best);
    add("mst_weight_minimal", ok, fmt::format("plan {} vs exhaustive minimum {}", plan.tree_weight, best));
  } else {
    report.checks.push_back({"mst_weight_minimal", CheckStatus::skipped,
                             fmt::format("graph has more than {} vertices", kAuditVertexLimit)});
  }

  {
    std::vector<Codeword> paths;
    for (const auto& l : plan.leaders) paths.push_back(l.path);
    const auto bad = prefix_violations(paths);
    add("prefix_free", bad.empty(),
        bad.empty() ? "" : fmt::format("'{}' is a prefix of '{}'", plan.leaders[bad[0].first].label,
                                       plan.leaders[bad[0].second].label));
  }

  {
    const Graph& t = plan.tree.graph();
    bool ok = true;
    std::string detail;
    for (const auto& l : plan.leaders) {
      const auto& vp = l.vertex_path;
      bool good = vp.size() == l.path.length() + 1 && !vp.empty() && vp.front() == plan.root && vp.back() == l.vertex;
      for (std::size_t i = 0; good && i + 1 < vp.size(); ++i) {
        const auto a = t.index_of(vp[i]);
        const auto b = t.index_of(vp[i + 1]);
        good = a && b && t.edge_between(*a, *b).has_value();
      }
      good = good && plan.embedding.vertex_path(l.path) == vp;
      if (!good && ok) {
        ok = false;
        detail = fmt::format("path of leader '{}' does not follow tree edges from the root", l.label);
      }
    }
    add("path_containment", ok, detail);
  }

  {
    double expected = 0.0;
    double kraft = 0.0;
    for (const auto& l : plan.leaders) {
      expected += l.probability * static_cast<double>(l.path.length());
      kraft += std::pow(static_cast<double>(plan.arity), -static_cast<double>(l.path.length()));
    }
    add("expected_depth", std::abs(expected - plan.expected_depth) <= 1e-12,
        fmt::format("recomputed {} vs reported {}", expected, plan.expected_depth));
    add("kraft", kraft <= 1.0 + kKraftTolerance, fmt::format("sum {}", kraft));
  }
  return report;
}

}  // namespace prefixnet
