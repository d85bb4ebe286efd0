#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "relaynet/network.hpp"

namespace relaynet {

// The 7-relay single-layer example network: h1 = [3,1,-1,-3,-1,1,3],
// all receiver gains 1, two receivers.
LayeredNetwork build_fig3();

// The 3+3 two-layer example network with its fixed inter-layer gain matrix.
LayeredNetwork build_fig4();

struct SpatialConfig {
  int n_relays = 100;
  double cell_radius = 20.0;
  double sector_deg = 60.0;
  double alpha = 4.0;     // path-loss exponent
  double beam_deg = 90.0; // directional antenna width
  int n_receivers = 2;
  std::uint64_t seed = 1;

  void validate() const;
};

struct SpatialEdge {
  int from = 0;  // relay index
  int to = 0;    // relay index
  double gain = 0.0;
};

// A randomly generated sector network: base station at the origin, relays
// uniform over the sector, receivers on the cell-edge arc at +-sector/4 from
// boresight (evenly spaced for other receiver counts).  All antennas point
// along the sector boresight (+x), so every edge strictly advances the
// boresight coordinate and the graph is a DAG.  Gains are  r^-alpha * u
// with u standard normal.
struct SpatialNetwork {
  SpatialConfig config;
  std::array<double, 2> bs_pos{0.0, 0.0};
  std::vector<std::array<double, 2>> relay_pos;
  std::vector<std::array<double, 2>> receiver_pos;

  std::vector<double> bs_gain;                     // per relay (0 = no link)
  std::vector<SpatialEdge> relay_edges;            // relay -> relay
  std::vector<std::vector<double>> receiver_gain;  // [relay][user] (0 = no link)

  std::vector<int> layer_of;     // per relay, 1-based longest-path layer
  std::vector<int> packed_slot;  // per relay, index within its layer

  LayeredNetwork network;

  std::vector<int> relays_per_layer;
  std::vector<int> unreachable_relays;  // no directed path to any receiver
};

SpatialNetwork generate_spatial(const SpatialConfig& cfg);

// Plain-text diagnostics: relay count per layer, unreachable relays.
std::string diagnostics_report(const SpatialNetwork& s);

// Network file round-trip (text format, exact double round-trip; grammar in
// docs/formats.md).  Spatial metadata (positions, seed, config) rides along
// when present.
void save_network(const std::string& path, const LayeredNetwork& net,
                  const SpatialNetwork* spatial = nullptr);

struct LoadedNetwork {
  LayeredNetwork network;
  std::optional<SpatialNetwork> spatial;
};

LoadedNetwork load_network(const std::string& path);

// Params file round-trip, same text family.
void save_params(const std::string& path, const RelayParams& params);
RelayParams load_params(const std::string& path);

}  // namespace relaynet
