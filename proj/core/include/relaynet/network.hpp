#pragma once

#include <cstddef>
#include <vector>

namespace relaynet {

// Channel-gain topology of a layered amplify-and-forward relay cascade.
//
// Layers are indexed 0..d-1 in code (1..d in file formats and docs).  The
// network is acyclic by construction: inter-layer gain blocks exist only for
// source layer < destination layer, so a forward pass can never consume an
// output that has not been produced yet.
struct LayeredNetwork {
  int users = 0;                       // M receivers
  std::vector<int> layer_sizes;        // N_i per layer

  // h[i][n]: gain source -> relay n of layer i.
  std::vector<std::vector<double>> h;

  // F[i][l]: gains from layer-l outputs to layer-i inputs, row-major
  // N_i x N_l, for l < i only.  An empty block means all-zero.
  std::vector<std::vector<std::vector<double>>> F;

  // g[i][m][n]: gain from relay n of layer i to receiver m.
  std::vector<std::vector<std::vector<double>>> g;

  int depth() const { return static_cast<int>(layer_sizes.size()); }
  int total_relays() const;

  // Throws dimension_error on any inconsistency or non-finite gain.
  void validate() const;
};

// Per-relay trainable gain and bias, dimensioned like a LayeredNetwork.
struct RelayParams {
  std::vector<std::vector<double>> w;
  std::vector<std::vector<double>> b;

  static RelayParams zeros(const LayeredNetwork& net);
  // Constant gain, zero bias.
  static RelayParams constant_gain(const LayeredNetwork& net, double gain);

  void validate_for(const LayeredNetwork& net) const;

  std::size_t size() const;  // total coordinate count (w and b)

  // Flat coordinate access in the order [w_1,...,w_d, b_1,...,b_d]; used by
  // gradient checks and the SGD update.
  double& coord(std::size_t k);
  double coord(std::size_t k) const;

  // this -= scale * other (dimensions must match).
  void axpy(double scale, const RelayParams& other);
};

}  // namespace relaynet
