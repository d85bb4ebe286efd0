#pragma once

#include <vector>

#include "relaynet/forward.hpp"
#include "relaynet/network.hpp"
#include "relaynet/rng.hpp"

namespace relaynet {

// Gray-coded PAM over the stacked bit vector u = [u_1 ... u_M] (user 1 in
// the most significant gray positions).  Levels are uniformly spaced with
// max |level| = 1.  For M=2, K=1 this is the classic 4-PAM table
//   (0,0) -> -1, (0,1) -> -1/3, (1,1) -> 1/3, (1,0) -> 1.
struct ModulationScheme {
  int users = 0;          // M
  int bits_per_user = 0;  // K

  static ModulationScheme make(int users, int bits_per_user);

  int total_bits() const { return users * bits_per_user; }
  int num_levels() const { return 1 << total_bits(); }

  // Level of constellation index 0..L-1 (ascending).  Exactly antisymmetric:
  // level(i) == -level(L-1-i).
  double level(int index) const;

  // Gray label of a constellation index (bit MK-1 of the label = user 1's
  // first bit).
  int gray_label(int index) const;

  // Constellation index carrying a given gray label.
  int index_of_label(int label) const;

  // Exact E[s^2] under uniform bits (mean of squared levels).
  double symbol_power() const;
};

// Stacked bits -> PAM level.  Throws dimension_error on wrong length or
// non-bit entries.
double modulate(const std::vector<int>& bits, const ModulationScheme& scheme);

// Unpack a gray label into the stacked bit vector.
std::vector<int> bits_of_label(int label, const ModulationScheme& scheme);

// Sign detector: 1 if r > 0, else 0 (tie at exactly 0 resolves to 0).
int detect_bpsk(double r);

// Squared-threshold detector for the inner/outer bit of Table-style 4-PAM:
// returns 1 when (r/rms)^2 < 1, else 0 (|r/rms| == 1 resolves to 0).
// `rms` must be > 0 (batch-empirical RMS of the receiver signal).
int detect_pam_user2(double r, double rms);

// Nearest-constellation detector on r/rms; ties resolve to the lower level.
// Returns the full stacked bit vector of the chosen level.
std::vector<int> detect_nearest(double r, double rms, const ModulationScheme& scheme);

enum class Detector { Bpsk, PamSquared, Nearest };

struct BerEstimate {
  std::vector<std::vector<double>> ber;  // [user][bit]
  double worst = 0.0;                    // max over (user, bit)
  long trials = 0;
  double sigma2 = 0.0;
};

// Monte-Carlo bit error rate over uniform random bit vectors.  Trial t uses
// rng.substream(t); per-receiver RMS normalizers are computed from the same
// batch of trials with a thread-count-independent summation order.
BerEstimate estimate_ber(const LayeredNetwork& net, const RelayParams& params,
                         const ModulationScheme& scheme, const NoiseModel& noise,
                         const std::vector<Detector>& detectors, long trials, const Rng& rng,
                         RelayModel model = RelayModel::Tanh);

}  // namespace relaynet
