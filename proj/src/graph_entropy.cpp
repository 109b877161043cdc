#include "prefixnet/graph_entropy.hpp"

#include <cmath>
#include <set>

#include <fmt/format.h>

#include "prefixnet/errors.hpp"

namespace prefixnet {

namespace {

std::vector<double> degree_probabilities(const Graph& g) {
  if (g.edge_count() == 0) throw InvalidInput("graph has no edges; degree pmf is undefined");
  const double total = 2.0 * static_cast<double>(g.edge_count());
  std::vector<double> p(g.vertex_count());
  for (std::size_t v = 0; v < g.vertex_count(); ++v) p[v] = static_cast<double>(g.degree(v)) / total;
  return p;
}

ProbabilityMassFunction counts_to_pmf(const std::vector<VertexId>& ids, const std::vector<std::size_t>& counts,
                                      std::size_t total) {
  std::vector<PmfEntry> entries;
  entries.reserve(ids.size());
  for (std::size_t i = 0; i < ids.size(); ++i)
    entries.push_back({ids[i], static_cast<double>(counts[i]) / static_cast<double>(total)});
  return ProbabilityMassFunction(std::move(entries));
}

}  // namespace

ProbabilityMassFunction degree_pmf(const Graph& g) {
  auto p = degree_probabilities(g);
  std::vector<PmfEntry> entries;
  entries.reserve(p.size());
  for (std::size_t v = 0; v < p.size(); ++v) entries.push_back({g.id(v), p[v]});
  return ProbabilityMassFunction(std::move(entries));
}

double graph_entropy(const Graph& g) { return shannon_entropy(degree_probabilities(g), 2.0); }

double tsallis_graph_entropy(const Graph& g, double q) {
  if (q == 1.0) throw InvalidInput("Tsallis entropy is undefined at q = 1; use the Shannon graph entropy");
  if (!std::isfinite(q)) throw InvalidInput("Tsallis index must be finite");
  auto p = degree_probabilities(g);
  double s = 0.0;
  for (double x : p)
    if (x > 0.0) s += std::pow(x, q);
  return (1.0 - s) / (q - 1.0);
}

double conditional_graph_entropy(const Graph& g, const VertexColoring& coloring) {
  auto p = degree_probabilities(g);
  std::map<std::string, std::vector<double>> classes;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    auto it = coloring.find(g.id(v));
    if (it == coloring.end()) throw InvalidInput(fmt::format("vertex '{}' has no color", g.id(v)));
    classes[it->second].push_back(p[v]);
  }
  double h = 0.0;
  for (auto& [color, mass] : classes) {
    double class_mass = 0.0;
    for (double x : mass) class_mass += x;
    if (class_mass <= 0.0) continue;
    for (double& x : mass) x /= class_mass;
    h += class_mass * shannon_entropy(mass, 2.0);
  }
  return h;
}

double graph_mutual_information(const Graph& g, const VertexColoring& coloring) {
  return graph_entropy(g) - conditional_graph_entropy(g, coloring);
}

double graph_kl_divergence(const Graph& g1, const Graph& g2, const VertexCorrespondence& correspondence) {
  if (g1.vertex_count() != g2.vertex_count())
    throw InvalidInput(fmt::format("vertex counts differ: {} vs {}", g1.vertex_count(), g2.vertex_count()));
  auto p1 = degree_probabilities(g1);
  auto p2 = degree_probabilities(g2);
  std::set<std::size_t> targets;
  double d = 0.0;
  for (std::size_t v = 0; v < g1.vertex_count(); ++v) {
    auto it = correspondence.find(g1.id(v));
    if (it == correspondence.end())
      throw InvalidInput(fmt::format("correspondence does not map vertex '{}'", g1.id(v)));
    auto w = g2.index_of(it->second);
    if (!w) throw InvalidInput(fmt::format("correspondence target '{}' is not a vertex of the second graph", it->second));
    if (!targets.insert(*w).second)
      throw InvalidInput(fmt::format("correspondence is not a bijection: '{}' used twice", it->second));
    if (p1[v] == 0.0) continue;
    if (p2[*w] == 0.0)
      throw InfiniteDivergence(fmt::format("vertex '{}' has degree 0 in the second graph", it->second));
    d += p1[v] * std::log2(p1[v] / p2[*w]);
  }
  return d;
}

double graph_kl_divergence(const Graph& g1, const Graph& g2) {
  VertexCorrespondence identity;
  for (const auto& id : g1.vertices()) {
    if (!g2.index_of(id))
      throw InvalidInput(fmt::format("vertex '{}' is missing from the second graph; supply a correspondence", id));
    identity.emplace(id, id);
  }
  return graph_kl_divergence(g1, g2, identity);
}

DegreePmfs in_out_degree_pmfs(const DiGraph& g) {
  if (g.arcs().empty()) throw InvalidInput("digraph has no arcs; degree pmfs are undefined");
  std::vector<std::size_t> in(g.vertex_count(), 0), out(g.vertex_count(), 0);
  for (const auto& a : g.arcs()) {
    ++out[a.from];
    ++in[a.to];
  }
  return {counts_to_pmf(g.vertices(), in, g.arcs().size()), counts_to_pmf(g.vertices(), out, g.arcs().size())};
}

std::optional<std::size_t> is_regular(const Graph& g) {
  if (g.vertex_count() == 0) return std::nullopt;
  const std::size_t k = g.degree(0);
  for (std::size_t v = 1; v < g.vertex_count(); ++v)
    if (g.degree(v) != k) return std::nullopt;
  return k;
}

}  // namespace prefixnet
