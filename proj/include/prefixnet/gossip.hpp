#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "prefixnet/graph.hpp"

namespace prefixnet {

/// Graph annotated with BFS hop levels from the base station and, optionally,
/// angular sector ids.
struct LeveledNetwork {
  Graph graph;
  VertexId base_station;
  std::vector<int> level;                   // by vertex index
  std::optional<std::vector<int>> sector;  // by vertex index

  int level_of(std::string_view id) const { return level[graph.require(id)]; }
  int max_level() const;
};

/// Throws InvalidInput for a missing base station, Disconnected otherwise.
LeveledNetwork assign_levels(const Graph& g, const VertexId& base_station);

struct Point {
  double x = 0.0;
  double y = 0.0;
};

/// floor(theta / (360 / K)) for theta in degrees, normalized to [0, 360).
/// Bands are half-open, so a boundary angle belongs to the band above it.
int sector_of_angle(double theta_degrees, int sectors);

/// Angle of `p` seen from `origin`, degrees in [0, 360).
double bearing_degrees(Point origin, Point p);

/// Sector of every positioned vertex relative to the base station, whose own
/// sector is 0. Throws InvalidInput if the base station has no position or K < 1.
std::map<VertexId, int> assign_sectors(const std::map<VertexId, Point>& positions, const VertexId& base_station,
                                       int sectors);

/// Fills net.sector; every graph vertex needs a position.
void attach_sectors(LeveledNetwork& net, const std::map<VertexId, Point>& positions, int sectors);

struct GossipConfig {
  /// P_1 .. P_n; entry j-1 is the forwarding probability at level j.
  std::vector<double> level_probabilities;
  double link_failure = 0.0;
  std::uint64_t trials = 1;
  std::uint64_t seed = 0;
  /// Accept level probabilities that are not strictly decreasing.
  bool allow_nonmonotone = false;
  /// Keep one TrialOutcome per trial in the result.
  bool record_trials = false;

  /// Throws InvalidInput.
  void validate() const;
  bool is_strictly_decreasing() const;
};

struct TrialOutcome {
  bool delivered = false;
  std::uint32_t transmissions = 0;
  std::uint32_t hops = 0;  // meaningful only when delivered
};

struct SimResult {
  double delivery_ratio = 0.0;
  double mean_transmissions = 0.0;
  /// Mean hop count of the first delivery over delivered trials.
  std::optional<double> mean_hops;
  std::uint64_t deliveries = 0;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  bool nonmonotone = false;
  std::vector<TrialOutcome> outcomes;
};

/// Level-controlled gossip toward the base station.
///
/// Per trial: a node holding the message broadcasts once, with probability
/// P_level, to its strictly-lower-level neighbors; each link delivers
/// independently with probability 1 - q. The source gates like any other
/// node and the base station never forwards. A broadcast counts as one
/// transmission.
///
/// Random stream: trial t draws from trial_engine(seed, t), first one gate
/// uniform per vertex in vertex order, then one link uniform per adjacency
/// entry (vertex order, then neighbor order). Every draw is taken whether or
/// not it is used, so two configs with the same seed see the same numbers.
/// A gate opens when u < P; a link survives when u >= q.
SimResult simulate_gossip(const LeveledNetwork& net, const GossipConfig& cfg, const VertexId& event_source);

enum class SweepParameter { level_probability, link_failure };

struct SweepSpec {
  SweepParameter parameter = SweepParameter::link_failure;
  int level = 1;  // which P_j, for level_probability
  std::vector<double> values;
};

struct SweepPoint {
  double value = 0.0;
  SimResult result;
};

/// One simulation per value, all with the base config's seed (common random
/// numbers).
std::vector<SweepPoint> sweep_levels(const LeveledNetwork& net, const GossipConfig& base, const SweepSpec& spec,
                                     const VertexId& event_source);

}  // namespace prefixnet
