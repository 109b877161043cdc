#pragma once

// Brute-force reference implementations. They share no code with the library
// beyond the Graph container and are only meant for small inputs.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <queue>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "prefixnet/fusion.hpp"
#include "prefixnet/graph.hpp"

namespace oracle {

// ---------------------------------------------------------------- prefix codes

/// Exact integer Kraft check: sum D^(L - l_i) <= D^L with L = max length.
/// Needs D^L to fit in 128 bits.
inline bool kraft_ok_exact(const std::vector<int>& lengths, int D) {
  int L = 0;
  for (int l : lengths) L = std::max(L, l);
  unsigned __int128 cap = 1;
  for (int i = 0; i < L; ++i) cap *= static_cast<unsigned>(D);
  unsigned __int128 used = 0;
  for (int l : lengths) {
    unsigned __int128 w = 1;
    for (int i = 0; i < L - l; ++i) w *= static_cast<unsigned>(D);
    used += w;
  }
  return used <= cap;
}

/// Direct summation of D^-l.
inline double kraft_direct(const std::vector<int>& lengths, int D) {
  long double s = 0;
  for (int l : lengths) {
    long double t = 1;
    for (int i = 0; i < l; ++i) t /= D;
    s += t;
  }
  return static_cast<double>(s);
}

/// Calls visit(lengths) for every length vector in {1..max_len}^n.
inline void for_each_length_vector(std::size_t n, int max_len, const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> l(n, 1);
  while (true) {
    visit(l);
    std::size_t i = 0;
    while (i < n && l[i] == max_len) l[i++] = 1;
    if (i == n) return;
    ++l[i];
  }
}

/// Minimum expected length over every prefix code on len(p) symbols. An
/// optimal code never needs a word longer than n - 1 (or 1 for n = 1).
inline double min_expected_length(const std::vector<double>& p, int D) {
  const std::size_t n = p.size();
  const int max_len = std::max<int>(1, static_cast<int>(n) - 1);
  double best = std::numeric_limits<double>::infinity();
  for_each_length_vector(n, max_len, [&](const std::vector<int>& l) {
    if (!kraft_ok_exact(l, D)) return;
    double e = 0;
    for (std::size_t i = 0; i < n; ++i) e += p[i] * l[i];
    best = std::min(best, e);
  });
  return best;
}

/// All strings over {0..D-1} with length 1..max_len.
inline std::vector<std::vector<int>> all_words(int D, int max_len) {
  std::vector<std::vector<int>> out;
  std::vector<std::vector<int>> layer{{}};
  for (int len = 1; len <= max_len; ++len) {
    std::vector<std::vector<int>> next;
    for (const auto& w : layer)
      for (int d = 0; d < D; ++d) {
        auto x = w;
        x.push_back(d);
        next.push_back(x);
      }
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

inline bool word_prefix(const std::vector<int>& a, const std::vector<int>& b) {
  return a.size() <= b.size() && std::equal(a.begin(), a.end(), b.begin());
}

/// Minimum expected length by enumerating actual codeword assignments
/// (ordered, pairwise prefix-free) over words up to max_len. Tiny inputs only.
inline double min_expected_length_by_words(const std::vector<double>& p, int D, int max_len) {
  const auto words = all_words(D, max_len);
  double best = std::numeric_limits<double>::infinity();
  std::vector<std::size_t> pick;
  std::function<void(std::size_t, double)> rec = [&](std::size_t i, double acc) {
    if (i == p.size()) {
      best = std::min(best, acc);
      return;
    }
    for (std::size_t w = 0; w < words.size(); ++w) {
      bool ok = true;
      for (auto u : pick)
        if (u == w || word_prefix(words[u], words[w]) || word_prefix(words[w], words[u])) ok = false;
      if (!ok) continue;
      pick.push_back(w);
      rec(i + 1, acc + p[i] * static_cast<double>(words[w].size()));
      pick.pop_back();
    }
  };
  rec(0, 0.0);
  return best;
}

// ---------------------------------------------------------------- graphs

/// Edge-index subsets of size |V|-1 that connect every vertex.
inline std::vector<std::vector<std::size_t>> spanning_trees_by_subsets(const prefixnet::Graph& g) {
  const std::size_t n = g.vertex_count();
  const std::size_t m = g.edge_count();
  std::vector<std::vector<std::size_t>> out;
  if (n == 0 || m + 1 < n) return out;
  if (n == 1) return {{}};
  std::vector<char> mask(m, 0);
  std::fill(mask.begin(), mask.begin() + static_cast<std::ptrdiff_t>(n - 1), 1);
  // prev_permutation walks every combination of n-1 edges.
  do {
    std::vector<std::size_t> chosen;
    for (std::size_t e = 0; e < m; ++e)
      if (mask[e]) chosen.push_back(e);
    std::vector<std::vector<std::size_t>> adj(n);
    for (auto e : chosen) {
      adj[g.edges()[e].u].push_back(g.edges()[e].v);
      adj[g.edges()[e].v].push_back(g.edges()[e].u);
    }
    std::vector<char> seen(n, 0);
    std::vector<std::size_t> stack{0};
    seen[0] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
      auto v = stack.back();
      stack.pop_back();
      for (auto w : adj[v])
        if (!seen[w]) {
          seen[w] = 1;
          ++reached;
          stack.push_back(w);
        }
    }
    if (reached == n) out.push_back(chosen);
  } while (std::prev_permutation(mask.begin(), mask.end()));
  return out;
}

/// All-pairs hop distances by Floyd-Warshall; unreachable = -1.
inline std::vector<std::vector<int>> hop_distances(const prefixnet::Graph& g) {
  const std::size_t n = g.vertex_count();
  const int inf = std::numeric_limits<int>::max() / 4;
  std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
  for (std::size_t v = 0; v < n; ++v) d[v][v] = 0;
  for (const auto& e : g.edges()) d[e.u][e.v] = d[e.v][e.u] = 1;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  for (auto& row : d)
    for (auto& x : row)
      if (x >= inf) x = -1;
  return d;
}

/// Entropy in bits of the degree distribution, by direct evaluation.
inline double degree_entropy(const prefixnet::Graph& g) {
  double total = 0;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) total += static_cast<double>(g.degree(v));
  double h = 0;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    const double p = static_cast<double>(g.degree(v)) / total;
    if (p > 0) h -= p * std::log2(p);
  }
  return h;
}

// ---------------------------------------------------------------- gossip

/// Exact delivery probability of level-controlled gossip, by enumerating
/// every gate and downhill-link outcome. `level` from hop_distances.
inline double exact_delivery(const prefixnet::Graph& g, std::size_t bs, std::size_t source, const std::vector<double>& P,
                             double q) {
  const auto dist = hop_distances(g);
  const auto& level = dist[bs];
  if (source == bs) return 1.0;
  std::vector<std::size_t> gates;
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    if (v != bs && level[v] >= 1 && level[v] <= level[source]) gates.push_back(v);
  std::vector<std::pair<std::size_t, std::size_t>> links;  // from, to (downhill)
  for (const auto& e : g.edges()) {
    if (level[e.u] == level[e.v] + 1) links.emplace_back(e.u, e.v);
    if (level[e.v] == level[e.u] + 1) links.emplace_back(e.v, e.u);
  }
  const std::size_t bits = gates.size() + links.size();
  double total = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << bits); ++mask) {
    double pr = 1;
    std::vector<char> open(g.vertex_count(), 0);
    for (std::size_t i = 0; i < gates.size(); ++i) {
      const double pg = P[static_cast<std::size_t>(level[gates[i]]) - 1];
      const bool on = (mask >> i) & 1;
      pr *= on ? pg : 1 - pg;
      open[gates[i]] = on;
    }
    std::vector<std::vector<std::size_t>> alive(g.vertex_count());
    for (std::size_t k = 0; k < links.size(); ++k) {
      const bool up = (mask >> (gates.size() + k)) & 1;
      pr *= up ? 1 - q : q;
      if (up) alive[links[k].first].push_back(links[k].second);
    }
    if (pr == 0) continue;
    std::vector<char> got(g.vertex_count(), 0);
    std::vector<std::size_t> stack{source};
    got[source] = 1;
    while (!stack.empty()) {
      auto v = stack.back();
      stack.pop_back();
      if (v == bs || !open[v]) continue;
      for (auto w : alive[v])
        if (!got[w]) {
          got[w] = 1;
          stack.push_back(w);
        }
    }
    if (got[bs]) total += pr;
  }
  return total;
}

// ---------------------------------------------------------------- multicast

/// Node of a rooted D-ary embedding: digit path from the root and the vertex.
struct PlacedNode {
  std::vector<int> path;
  std::string vertex;
};

/// Roots `tree` at `root` and keeps, at every node, the D lightest child
/// edges (ties by vertex id). Recursive; returns every retained node
/// including the root (empty path).
inline std::vector<PlacedNode> embed(const prefixnet::WeightedGraph& tree, const std::string& root, int D) {
  const auto& g = tree.graph();
  std::vector<PlacedNode> out;
  std::function<void(std::size_t, std::optional<std::size_t>, std::vector<int>)> visit =
      [&](std::size_t v, std::optional<std::size_t> parent, std::vector<int> path) {
        out.push_back({path, g.id(v)});
        std::vector<std::pair<double, std::string>> kids;
        for (const auto& e : g.edges()) {
          std::optional<std::size_t> other;
          if (e.u == v) other = e.v;
          if (e.v == v) other = e.u;
          if (!other || other == parent) continue;
          kids.emplace_back(tree.weight(*g.edge_between(e.u, e.v)), g.id(*other));
        }
        std::sort(kids.begin(), kids.end());
        for (std::size_t k = 0; k < kids.size() && k < static_cast<std::size_t>(D); ++k) {
          auto next = path;
          next.push_back(static_cast<int>(k));
          visit(*g.index_of(kids[k].second), v, next);
        }
      };
  visit(*g.index_of(root), std::nullopt, {});
  return out;
}

/// Minimum sum p_i * depth_i over injective placements of the leaders on
/// non-root nodes where no chosen node is an ancestor of another. Infinity
/// when no placement exists.
inline double best_placement(const std::vector<PlacedNode>& nodes, const std::vector<double>& p) {
  std::vector<const PlacedNode*> slots;
  for (const auto& n : nodes)
    if (!n.path.empty()) slots.push_back(&n);
  double best = std::numeric_limits<double>::infinity();
  std::vector<const PlacedNode*> used;
  std::function<void(std::size_t, double)> rec = [&](std::size_t i, double acc) {
    if (acc >= best) return;
    if (i == p.size()) {
      best = acc;
      return;
    }
    for (const auto* s : slots) {
      bool ok = true;
      for (const auto* u : used)
        if (u == s || word_prefix(u->path, s->path) || word_prefix(s->path, u->path)) ok = false;
      if (!ok) continue;
      used.push_back(s);
      rec(i + 1, acc + p[i] * static_cast<double>(s->path.size()));
      used.pop_back();
    }
  };
  rec(0, 0.0);
  return best;
}

// ---------------------------------------------------------------- fusion

/// M by intersecting every (n-f)-subset and taking the envelope.
inline std::optional<prefixnet::Interval> m_by_subsets(const std::vector<prefixnet::Interval>& iv, int f) {
  const std::size_t n = iv.size();
  const std::size_t k = n - static_cast<std::size_t>(f);
  std::optional<prefixnet::Interval> env;
  std::vector<char> mask(n, 0);
  std::fill(mask.begin(), mask.begin() + static_cast<std::ptrdiff_t>(k), 1);
  do {
    double lo = -std::numeric_limits<double>::infinity();
    double hi = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i)
      if (mask[i]) {
        lo = std::max(lo, iv[i].lo);
        hi = std::min(hi, iv[i].hi);
      }
    if (lo > hi) continue;
    if (!env)
      env = prefixnet::Interval{lo, hi};
    else
      env = prefixnet::Interval{std::min(env->lo, lo), std::max(env->hi, hi)};
  } while (std::prev_permutation(mask.begin(), mask.end()));
  return env;
}

/// Overlap count at x by direct membership test.
inline int overlap_at(const std::vector<prefixnet::Interval>& iv, double x) {
  int c = 0;
  for (const auto& i : iv) c += (i.lo <= x && x <= i.hi) ? 1 : 0;
  return c;
}

/// Envelope of {x : overlap >= n - f}, probing every endpoint (the count can
/// only peak at one).
inline std::optional<prefixnet::Interval> n_by_probing(const std::vector<prefixnet::Interval>& iv, int f) {
  const int need = static_cast<int>(iv.size()) - f;
  std::optional<prefixnet::Interval> env;
  for (const auto& i : iv)
    for (double x : {i.lo, i.hi})
      if (overlap_at(iv, x) >= need) {
        if (!env)
          env = prefixnet::Interval{x, x};
        else
          env = prefixnet::Interval{std::min(env->lo, x), std::max(env->hi, x)};
      }
  return env;
}

/// S by fully sorting both endpoint lists.
inline std::pair<double, double> s_by_sorting(const std::vector<prefixnet::Interval>& iv, int f) {
  std::vector<double> lo, hi;
  for (const auto& i : iv) {
    lo.push_back(i.lo);
    hi.push_back(i.hi);
  }
  std::sort(lo.rbegin(), lo.rend());
  std::sort(hi.begin(), hi.end());
  return {lo[static_cast<std::size_t>(f)], hi[static_cast<std::size_t>(f)]};
}

}  // namespace oracle
