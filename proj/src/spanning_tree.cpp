#include "prefixnet/spanning_tree.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include <fmt/format.h>

#include "prefixnet/errors.hpp"
#include "prefixnet/graph_entropy.hpp"

namespace prefixnet {

namespace {

__extension__ using i128 = __int128;

/// Union-find with undo; no path compression so that rollback stays exact.
class RollbackUnionFind {
 public:
  explicit RollbackUnionFind(std::size_t n) : parent_(n), size_(n, 1) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  std::size_t find(std::size_t x) const {
    while (parent_[x] != x) x = parent_[x];
    return x;
  }

  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    history_.push_back(b);
    return true;
  }

  void undo() {
    const std::size_t b = history_.back();
    history_.pop_back();
    size_[parent_[b]] -= size_[b];
    parent_[b] = b;
  }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> size_;
  std::vector<std::size_t> history_;
};

void check_enumerable(const Graph& g) {
  if (g.vertex_count() > kEnumerationVertexLimit)
    throw SizeGuardExceeded(fmt::format("spanning-tree enumeration is limited to {} vertices, graph has {}",
                                        kEnumerationVertexLimit, g.vertex_count()));
  if (!g.is_connected()) throw Disconnected("graph is disconnected; it has no spanning tree");
}

bool lex_less(const Graph& g, std::size_t a, std::size_t b) {
  auto key = [&](std::size_t e) {
    const auto& x = g.id(g.edges()[e].u);
    const auto& y = g.id(g.edges()[e].v);
    return x < y ? std::pair<const std::string&, const std::string&>(x, y)
                 : std::pair<const std::string&, const std::string&>(y, x);
  };
  return key(a) < key(b);
}

}  // namespace

std::vector<std::size_t> lexicographic_edge_order(const Graph& g) {
  std::vector<std::size_t> order(g.edge_count());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return lex_less(g, a, b); });
  return order;
}

std::uint64_t matrix_tree_count(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n == 0) return 0;
  if (n == 1) return 1;
  // Bareiss fraction-free elimination on the Laplacian with row/column 0 removed.
  const std::size_t m = n - 1;
  std::vector<std::vector<i128>> a(m, std::vector<i128>(m, 0));
  for (std::size_t v = 1; v < n; ++v) a[v - 1][v - 1] = static_cast<i128>(g.degree(v));
  for (const auto& e : g.edges()) {
    if (e.u == 0 || e.v == 0) continue;
    a[e.u - 1][e.v - 1] -= 1;
    a[e.v - 1][e.u - 1] -= 1;
  }
  i128 prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k < m; ++k) {
    if (a[k][k] == 0) {
      std::size_t pivot = k + 1;
      while (pivot < m && a[pivot][k] == 0) ++pivot;
      if (pivot == m) return 0;
      std::swap(a[k], a[pivot]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < m; ++i) {
      for (std::size_t j = k + 1; j < m; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    }
    prev = a[k][k];
  }
  const i128 det = sign * a[m - 1][m - 1];
  if (det < 0 || det > static_cast<i128>(std::numeric_limits<std::uint64_t>::max()))
    throw std::overflow_error("spanning tree count does not fit in 64 bits");
  return static_cast<std::uint64_t>(det);
}

void for_each_spanning_tree(const Graph& g, const std::function<void(std::span<const std::size_t>)>& visit) {
  check_enumerable(g);
  const std::size_t needed = g.vertex_count() - 1;
  const auto order = lexicographic_edge_order(g);
  RollbackUnionFind forest(g.vertex_count());
  std::vector<std::size_t> chosen;
  chosen.reserve(needed);

  auto recurse = [&](auto&& self, std::size_t pos) -> void {
    if (chosen.size() == needed) {
      visit(chosen);
      return;
    }
    if (order.size() - pos < needed - chosen.size()) return;
    const auto& e = g.edges()[order[pos]];
    if (forest.unite(e.u, e.v)) {
      chosen.push_back(order[pos]);
      self(self, pos + 1);
      chosen.pop_back();
      forest.undo();
    }
    self(self, pos + 1);
  };
  recurse(recurse, 0);
}

std::vector<Graph> enumerate_spanning_trees(const Graph& g) {
  std::vector<Graph> trees;
  for_each_spanning_tree(g, [&](std::span<const std::size_t> edges) {
    trees.push_back(edge_subgraph(g, std::vector<std::size_t>(edges.begin(), edges.end())));
  });
  if (trees.size() != matrix_tree_count(g))
    throw std::logic_error(fmt::format("enumerated {} spanning trees but the matrix-tree theorem gives {}",
                                       trees.size(), matrix_tree_count(g)));
  return trees;
}

SpanningEntropyExtrema spanning_tree_entropy_extrema(const Graph& g) {
  if (g.vertex_count() < 2) throw InvalidInput("entropy extrema need at least two vertices");
  SpanningEntropyExtrema out;
  std::vector<std::size_t> best_min, best_max;
  for_each_spanning_tree(g, [&](std::span<const std::size_t> edges) {
    const std::vector<std::size_t> tree(edges.begin(), edges.end());
    const double h = graph_entropy(edge_subgraph(g, tree));
    if (out.tree_count == 0 || h < out.min) {
      out.min = h;
      best_min = tree;
    }
    if (out.tree_count == 0 || h > out.max) {
      out.max = h;
      best_max = tree;
    }
    ++out.tree_count;
  });
  out.argmin = edge_subgraph(g, best_min);
  out.argmax = edge_subgraph(g, best_max);
  return out;
}

std::vector<std::size_t> minimum_spanning_tree_edges(const WeightedGraph& g) {
  const Graph& base = g.graph();
  if (base.vertex_count() == 0) throw InvalidInput("graph has no vertices");
  if (!base.is_connected()) throw Disconnected("graph is disconnected; it has no spanning tree");
  auto order = lexicographic_edge_order(base);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return g.weight(a) < g.weight(b); });
  RollbackUnionFind forest(base.vertex_count());
  std::vector<std::size_t> tree;
  for (auto e : order) {
    if (forest.unite(base.edges()[e].u, base.edges()[e].v)) tree.push_back(e);
    if (tree.size() + 1 == base.vertex_count()) break;
  }
  return tree;
}

WeightedGraph minimum_spanning_tree(const WeightedGraph& g) {
  return edge_subgraph(g, minimum_spanning_tree_edges(g));
}

MstEntropyExtrema mst_entropy_extrema(const WeightedGraph& g) {
  const Graph& base = g.graph();
  if (base.vertex_count() < 2) throw InvalidInput("entropy extrema need at least two vertices");
  std::vector<std::pair<double, std::vector<std::size_t>>> trees;
  for_each_spanning_tree(base, [&](std::span<const std::size_t> edges) {
    double w = 0.0;
    for (auto e : edges) w += g.weight(e);
    trees.emplace_back(w, std::vector<std::size_t>(edges.begin(), edges.end()));
  });
  MstEntropyExtrema out;
  out.min_weight = std::numeric_limits<double>::infinity();
  for (const auto& t : trees) out.min_weight = std::min(out.min_weight, t.first);
  const double slack = 1e-9 * std::max(1.0, std::abs(out.min_weight));
  for (const auto& [w, edges] : trees) {
    if (w > out.min_weight + slack) continue;
    const double h = graph_entropy(edge_subgraph(base, edges));
    if (out.mst_count == 0 || h < out.min) out.min = h;
    if (out.mst_count == 0 || h > out.max) out.max = h;
    ++out.mst_count;
  }
  return out;
}

}  // namespace prefixnet
