#include "prefixnet/graph.hpp"

#include <cmath>
#include <set>

#include <fmt/format.h>

#include "prefixnet/errors.hpp"

namespace prefixnet {

std::size_t Graph::add_vertex(std::string_view id) {
  if (id.empty()) throw InvalidInput("vertex id must not be empty");
  auto [it, inserted] = index_.try_emplace(std::string(id), ids_.size());
  if (inserted) {
    ids_.emplace_back(id);
    adjacency_.emplace_back();
  }
  return it->second;
}

std::size_t Graph::add_edge(std::string_view a, std::string_view b) {
  if (a == b) throw InvalidInput(fmt::format("self-loop on '{}'", a));
  std::size_t u = add_vertex(a);
  std::size_t v = add_vertex(b);
  if (edge_between(u, v)) throw InvalidInput(fmt::format("duplicate edge {} {}", a, b));
  if (u > v) std::swap(u, v);
  const std::size_t e = edges_.size();
  edges_.push_back({u, v});
  adjacency_[u].emplace_back(v, e);
  adjacency_[v].emplace_back(u, e);
  return e;
}

std::optional<std::size_t> Graph::index_of(std::string_view id) const {
  auto it = index_.find(std::string(id));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t Graph::require(std::string_view id) const {
  auto idx = index_of(id);
  if (!idx) throw InvalidInput(fmt::format("unknown vertex '{}'", id));
  return *idx;
}

std::optional<std::size_t> Graph::edge_between(std::size_t a, std::size_t b) const {
  const auto& shorter = adjacency_[a].size() <= adjacency_[b].size() ? adjacency_[a] : adjacency_[b];
  const std::size_t other = adjacency_[a].size() <= adjacency_[b].size() ? b : a;
  for (auto [n, e] : shorter)
    if (n == other) return e;
  return std::nullopt;
}

bool Graph::is_connected() const {
  if (ids_.empty()) return true;
  std::vector<bool> seen(ids_.size(), false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    auto v = stack.back();
    stack.pop_back();
    for (auto [n, e] : adjacency_[v]) {
      if (seen[n]) continue;
      seen[n] = true;
      ++reached;
      stack.push_back(n);
    }
  }
  return reached == ids_.size();
}

bool Graph::is_tree() const {
  return !ids_.empty() && edges_.size() + 1 == ids_.size() && is_connected();
}

std::size_t WeightedGraph::add_edge(std::string_view a, std::string_view b, double weight) {
  if (!std::isfinite(weight) || weight < 0.0)
    throw InvalidInput(fmt::format("edge {} {} has weight {}, expected finite and >= 0", a, b, weight));
  const std::size_t e = graph_.add_edge(a, b);
  weights_.push_back(weight);
  return e;
}

double WeightedGraph::total_weight() const {
  double total = 0.0;
  for (double w : weights_) total += w;
  return total;
}

std::size_t DiGraph::add_vertex(std::string_view id) {
  if (id.empty()) throw InvalidInput("vertex id must not be empty");
  auto [it, inserted] = index_.try_emplace(std::string(id), ids_.size());
  if (inserted) ids_.emplace_back(id);
  return it->second;
}

std::size_t DiGraph::add_arc(std::string_view from, std::string_view to) {
  if (from == to) throw InvalidInput(fmt::format("self-loop on '{}'", from));
  const std::size_t a = add_vertex(from);
  const std::size_t b = add_vertex(to);
  for (const auto& arc : arcs_)
    if (arc.from == a && arc.to == b) throw InvalidInput(fmt::format("duplicate arc {} -> {}", from, to));
  arcs_.push_back({a, b});
  return arcs_.size() - 1;
}

Graph edge_subgraph(const Graph& g, const std::vector<std::size_t>& edge_indices) {
  Graph out;
  for (const auto& id : g.vertices()) out.add_vertex(id);
  for (auto e : edge_indices) out.add_edge(g.id(g.edges()[e].u), g.id(g.edges()[e].v));
  return out;
}

WeightedGraph edge_subgraph(const WeightedGraph& g, const std::vector<std::size_t>& edge_indices) {
  WeightedGraph out;
  const Graph& base = g.graph();
  for (const auto& id : base.vertices()) out.add_vertex(id);
  for (auto e : edge_indices) out.add_edge(base.id(base.edges()[e].u), base.id(base.edges()[e].v), g.weight(e));
  return out;
}

}  // namespace prefixnet
