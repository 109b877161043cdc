#include "prefixnet/gossip.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numbers>
#include <numeric>

#include <fmt/format.h>

#include "prefixnet/errors.hpp"
#include "prefixnet/random.hpp"

namespace prefixnet {

int LeveledNetwork::max_level() const {
  return level.empty() ? 0 : *std::max_element(level.begin(), level.end());
}

LeveledNetwork assign_levels(const Graph& g, const VertexId& base_station) {
  const auto bs = g.index_of(base_station);
  if (!bs) throw InvalidInput(fmt::format("base station '{}' is not a vertex of the graph", base_station));
  std::vector<int> level(g.vertex_count(), -1);
  std::deque<std::size_t> queue{*bs};
  level[*bs] = 0;
  while (!queue.empty()) {
    const auto v = queue.front();
    queue.pop_front();
    for (auto [n, e] : g.neighbors(v)) {
      if (level[n] >= 0) continue;
      level[n] = level[v] + 1;
      queue.push_back(n);
    }
  }
  for (std::size_t v = 0; v < level.size(); ++v)
    if (level[v] < 0) throw Disconnected(fmt::format("vertex '{}' cannot reach the base station", g.id(v)));
  return {g, base_station, std::move(level), std::nullopt};
}

int sector_of_angle(double theta_degrees, int sectors) {
  if (sectors < 1) throw InvalidInput("sector count must be >= 1");
  if (!std::isfinite(theta_degrees)) throw InvalidInput("angle must be finite");
  double theta = std::fmod(theta_degrees, 360.0);
  if (theta < 0.0) theta += 360.0;
  const int s = static_cast<int>(std::floor(theta * sectors / 360.0));
  return std::clamp(s, 0, sectors - 1);
}

double bearing_degrees(Point origin, Point p) {
  const double dx = p.x - origin.x;
  const double dy = p.y - origin.y;
  // Axis directions are exact so that boundary points land in the band above.
  if (dy == 0.0 && dx >= 0.0) return 0.0;
  if (dx == 0.0) return dy > 0.0 ? 90.0 : 270.0;
  if (dy == 0.0) return 180.0;
  double deg = std::atan2(dy, dx) * 180.0 / std::numbers::pi;
  if (deg < 0.0) deg += 360.0;
  return deg >= 360.0 ? 0.0 : deg;
}

std::map<VertexId, int> assign_sectors(const std::map<VertexId, Point>& positions, const VertexId& base_station,
                                       int sectors) {
  if (sectors < 1) throw InvalidInput("sector count must be >= 1");
  const auto bs = positions.find(base_station);
  if (bs == positions.end()) throw InvalidInput(fmt::format("base station '{}' has no position", base_station));
  std::map<VertexId, int> out;
  for (const auto& [id, p] : positions)
    out[id] = id == base_station ? 0 : sector_of_angle(bearing_degrees(bs->second, p), sectors);
  return out;
}

void attach_sectors(LeveledNetwork& net, const std::map<VertexId, Point>& positions, int sectors) {
  for (const auto& id : net.graph.vertices())
    if (!positions.count(id)) throw InvalidInput(fmt::format("vertex '{}' has no position", id));
  const auto by_id = assign_sectors(positions, net.base_station, sectors);
  std::vector<int> sector(net.graph.vertex_count());
  for (std::size_t v = 0; v < sector.size(); ++v) sector[v] = by_id.at(net.graph.id(v));
  net.sector = std::move(sector);
}

bool GossipConfig::is_strictly_decreasing() const {
  for (std::size_t j = 1; j < level_probabilities.size(); ++j)
    if (!(level_probabilities[j] < level_probabilities[j - 1])) return false;
  return true;
}

void GossipConfig::validate() const {
  if (level_probabilities.empty()) throw InvalidInput("at least one level probability is required");
  for (std::size_t j = 0; j < level_probabilities.size(); ++j) {
    const double p = level_probabilities[j];
    if (!(p >= 0.0 && p <= 1.0)) throw InvalidInput(fmt::format("P_{} = {} is outside [0, 1]", j + 1, p));
  }
  if (!allow_nonmonotone && !is_strictly_decreasing())
    throw InvalidInput("level probabilities must be strictly decreasing (P_1 > P_2 > ...); "
                       "pass the non-monotone override to experiment");
  if (!(link_failure >= 0.0 && link_failure <= 1.0))
    throw InvalidInput(fmt::format("link failure probability {} is outside [0, 1]", link_failure));
  if (trials == 0) throw InvalidInput("trials must be >= 1");
}

SimResult simulate_gossip(const LeveledNetwork& net, const GossipConfig& cfg, const VertexId& event_source) {
  cfg.validate();
  const Graph& g = net.graph;
  const auto source = g.index_of(event_source);
  if (!source) throw InvalidInput(fmt::format("event source '{}' is not a vertex of the network", event_source));
  const auto bs = g.require(net.base_station);
  const int source_level = net.level[*source];
  if (static_cast<std::size_t>(source_level) > cfg.level_probabilities.size())
    throw InvalidInput(fmt::format("event source is at level {} but only {} level probabilities were given",
                                   source_level, cfg.level_probabilities.size()));

  const std::size_t n = g.vertex_count();
  std::vector<std::size_t> link_offset(n + 1, n);
  for (std::size_t v = 0; v < n; ++v) link_offset[v + 1] = link_offset[v] + g.degree(v);
  // Deepest first; a message only ever moves one level down.
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return net.level[a] > net.level[b]; });

  SimResult result;
  result.trials = cfg.trials;
  result.seed = cfg.seed;
  result.nonmonotone = !cfg.is_strictly_decreasing();
  if (cfg.record_trials) result.outcomes.reserve(cfg.trials);

  std::vector<double> draws(link_offset[n]);
  std::vector<char> holds(n);
  std::vector<std::uint32_t> hops(n);
  std::uint64_t total_transmissions = 0;
  std::uint64_t total_hops = 0;

  for (std::uint64_t t = 0; t < cfg.trials; ++t) {
    auto engine = trial_engine(cfg.seed, t);
    for (double& u : draws) u = unit_uniform(engine);
    std::fill(holds.begin(), holds.end(), 0);
    holds[*source] = 1;
    hops[*source] = 0;
    TrialOutcome outcome;

    for (auto v : order) {
      if (!holds[v] || v == bs) continue;
      const int lv = net.level[v];
      if (!(draws[v] < cfg.level_probabilities[static_cast<std::size_t>(lv) - 1])) continue;
      ++outcome.transmissions;
      const auto& adj = g.neighbors(v);
      for (std::size_t k = 0; k < adj.size(); ++k) {
        const auto target = adj[k].first;
        if (net.level[target] >= lv) continue;
        if (!(draws[link_offset[v] + k] >= cfg.link_failure)) continue;
        if (!holds[target]) {
          holds[target] = 1;
          hops[target] = hops[v] + 1;
        }
      }
    }
    outcome.delivered = holds[bs] != 0;
    outcome.hops = outcome.delivered ? hops[bs] : 0;

    result.deliveries += outcome.delivered ? 1 : 0;
    total_transmissions += outcome.transmissions;
    total_hops += outcome.hops;
    if (cfg.record_trials) result.outcomes.push_back(outcome);
  }

  const auto trials = static_cast<double>(cfg.trials);
  result.delivery_ratio = static_cast<double>(result.deliveries) / trials;
  result.mean_transmissions = static_cast<double>(total_transmissions) / trials;
  if (result.deliveries > 0)
    result.mean_hops = static_cast<double>(total_hops) / static_cast<double>(result.deliveries);
  return result;
}

std::vector<SweepPoint> sweep_levels(const LeveledNetwork& net, const GossipConfig& base, const SweepSpec& spec,
                                     const VertexId& event_source) {
  if (spec.values.empty()) throw InvalidInput("sweep grid has no values");
  if (spec.parameter == SweepParameter::level_probability &&
      (spec.level < 1 || static_cast<std::size_t>(spec.level) > base.level_probabilities.size()))
    throw InvalidInput(fmt::format("sweep level {} has no probability in the base config", spec.level));
  std::vector<SweepPoint> out;
  out.reserve(spec.values.size());
  for (double value : spec.values) {
    GossipConfig cfg = base;
    if (spec.parameter == SweepParameter::link_failure)
      cfg.link_failure = value;
    else
      cfg.level_probabilities[static_cast<std::size_t>(spec.level) - 1] = value;
    out.push_back({value, simulate_gossip(net, cfg, event_source)});
  }
  return out;
}

}  // namespace prefixnet
