#pragma once

#include <cstdint>
#include <vector>

#include "relaynet/network.hpp"
#include "relaynet/rng.hpp"

namespace relaynet {

// One noise variance shared by every relay input and every receiver.
struct NoiseModel {
  double sigma2 = 0.0;

  double sigma() const;
  void validate() const;  // sigma2 >= 0 and finite
};

// Additive noise realization for a single symbol, frozen so a forward pass
// can be replayed exactly (finite-difference gradient checks rely on this).
struct NoiseDraws {
  std::vector<std::vector<double>> relay;  // [layer][relay]
  std::vector<double> receiver;            // [user]

  static NoiseDraws zero(const LayeredNetwork& net);
  // Draw order: layer 0..d-1 relay inputs, then receivers 0..M-1.
  static NoiseDraws sample(const LayeredNetwork& net, const NoiseModel& noise, Rng rng);
};

// Record of one symbol's propagation, everything backprop needs.
struct ForwardTrace {
  double s = 0.0;                          // transmitted symbol
  std::vector<std::vector<double>> y;      // relay inputs
  std::vector<std::vector<double>> z;      // pre-activations w.*y + b
  std::vector<std::vector<double>> o;      // relay outputs tanh(z)
  std::vector<double> r;                   // receiver signals
  std::uint64_t noise_seed = 0;            // rng state that produced the noise
};

// Relay transfer used by a forward pass.  Linear is the design model of the
// traditional optimization (o = w.*y + b, no saturation); Tanh is the
// physical relay.
enum class RelayModel { Tanh, Linear };

// Propagate one symbol through the cascade with the given frozen noise.
// Throws numeric_error if any intermediate is non-finite.
ForwardTrace forward_with_noise(const LayeredNetwork& net, const RelayParams& params,
                                double s, const NoiseDraws& draws,
                                RelayModel model = RelayModel::Tanh);

// Propagate one symbol, drawing fresh Gaussian noise from `rng`.
ForwardTrace forward(const LayeredNetwork& net, const RelayParams& params, double s,
                     const NoiseModel& noise, Rng rng);

ForwardTrace forward_noiseless(const LayeredNetwork& net, const RelayParams& params, double s);

// Independent traces for a batch of symbols: symbol b uses the substream
// rng.substream(index_offset + b), so a batch may be split into contiguous
// chunks (with matching offsets) or evaluated in parallel without changing
// any trace.
std::vector<ForwardTrace> forward_batch(const LayeredNetwork& net, const RelayParams& params,
                                        const std::vector<double>& symbols,
                                        const NoiseModel& noise, const Rng& rng,
                                        std::uint64_t index_offset = 0);

}  // namespace relaynet
