#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "relaynet/modem.hpp"
#include "relaynet/network.hpp"
#include "relaynet/trainer.hpp"

namespace relaynet {

// BER over a grid of noise levels, expressed as 1/sigma^2 in dB.
struct BerCurve {
  std::vector<double> inv_sigma2_db;  // strictly increasing
  std::vector<BerEstimate> points;    // one per grid value
  long trials = 0;
  std::uint64_t seed = 0;
};

// Grid point j draws from rng.substream(j).
BerCurve ber_sweep(const LayeredNetwork& net, const RelayParams& params,
                   const ModulationScheme& scheme, const std::vector<Detector>& detectors,
                   const std::vector<double>& inv_sigma2_db, long trials, const Rng& rng,
                   RelayModel model = RelayModel::Tanh);

// Noiseless transfer functions r_m(s) over a symbol grid, plus the
// constellation inputs with their target bits.
struct TransferCurve {
  std::vector<double> s;
  std::vector<std::vector<double>> r;       // [point][user]
  std::vector<double> marker_s;             // constellation levels
  std::vector<std::vector<int>> marker_bits;  // stacked bits per level
};

TransferCurve transfer_sweep(const LayeredNetwork& net, const RelayParams& params,
                             const ModulationScheme& scheme, int n_points);

// Worst-user 1/sigma^2 (dB) at which the curve crosses `target_ber`,
// log-linearly interpolated between bracketing grid points.  Returns NaN if
// the curve never crosses.
double crossing_db(const BerCurve& curve, double target_ber);

// Noiseless RMS of receiver `m` over the constellation inputs (the sigma->0
// limit of the batch normalizer under uniform bits).
double noiseless_rms(const LayeredNetwork& net, const RelayParams& params,
                     const ModulationScheme& scheme, int user);

// CSV: inv_sigma2_dB, ber_u1..ber_uM (per bit when K > 1), ber_worst, trials.
std::string ber_curve_csv(const BerCurve& curve, int users, int bits_per_user);

// CSV: s, r_1..r_M.  Markers go to their own small CSV.
std::string transfer_csv(const TransferCurve& curve, int users);
std::string transfer_markers_csv(const TransferCurve& curve, int users, int bits_per_user);

// Self-contained SVG plots, pure functions of the curve data.
std::string ber_curve_svg(const BerCurve& curve, int users);
std::string transfer_svg(const TransferCurve& curve, int users);

}  // namespace relaynet
