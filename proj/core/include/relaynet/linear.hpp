#pragma once

#include <cstdint>
#include <vector>

#include "relaynet/modem.hpp"
#include "relaynet/network.hpp"

namespace relaynet {

// Closed-form analysis of the linearized cascade (o = w .* y, b = 0):
// per-receiver signal gain, accumulated noise variance, SNR, and per-relay
// output power.  No Monte Carlo anywhere.
struct LinearAnalysis {
  std::vector<double> gain;                      // source -> receiver m
  std::vector<double> noise_var;                 // total noise variance at receiver m
  std::vector<std::vector<double>> relay_power;  // E[o^2] per relay, linear model
  std::vector<double> snr;                       // gain^2 * Es / noise_var
};

LinearAnalysis analyze_linear(const LayeredNetwork& net,
                              const std::vector<std::vector<double>>& w, double sigma2,
                              double symbol_power);

struct LinearOptConfig {
  double pmax = 0.64;              // per-relay output power cap
  std::vector<double> zeta;        // SNR weights; empty = all ones
  int restarts = 8;
  int max_iters = 400;             // accepted ascent steps per restart
  double init_step = 0.25;
  double tolerance = 1e-9;         // power feasibility tolerance
  std::uint64_t seed = 1;

  void validate() const;
};

struct SolverTraceRow {
  int restart = 0;
  int iteration = 0;
  double objective = 0.0;  // soft-min objective at the current temperature
  double max_power_violation = 0.0;
};

struct LinearOptResult {
  std::vector<std::vector<double>> w;
  double achieved = 0.0;     // min_m zeta_m * SNR_m at the returned point
  bool ascent_found = true;  // false: no restart improved on its start point
  std::vector<SolverTraceRow> trace;
};

// Multi-start projected gradient ascent on a soft-min of the weighted SNRs
// with a decreasing temperature.  Feasibility (E[o^2] <= pmax per relay) is
// restored after every step by layer-ordered gain rescaling, which is exact
// because downstream powers depend only on already-final upstream gains.
// Restart 0 starts from all-positive gains; later restarts are random.
LinearOptResult optimize_linear(const LayeredNetwork& net, const LinearOptConfig& cfg,
                                double sigma2, double symbol_power);

// Gradient of min-m-smoothed weighted SNR; exposed for gradient tests.
// Returns d(softmin_m zeta_m SNR_m)/dw as w-shaped vectors.
std::vector<std::vector<double>> weighted_snr_softmin_gradient(
    const LayeredNetwork& net, const std::vector<std::vector<double>>& w, double sigma2,
    double symbol_power, const std::vector<double>& zeta, double temperature);

// Per-user worst-case decision distance (symbol units) of the linear PAM
// system: minimum distance from any constellation level to that user's
// nearest per-bit gray decision boundary.
std::vector<double> pam_decision_distances(const ModulationScheme& scheme);

// Weights are proportional to squared decision distances (a user whose
// margin is x times smaller needs x^2 more SNR at the max-min optimum).
std::vector<double> balance_zeta_from_distances(const std::vector<double>& distances);

// Iteratively balances the per-user Q-function BER proxies of the linear
// system described by (net, w, sigma2) under the modeled max-min
// re-optimization, to within 1%.  Returns all-ones for symmetric users.
std::vector<double> balance_zeta(const LayeredNetwork& net,
                                 const std::vector<std::vector<double>>& w, double sigma2,
                                 const ModulationScheme& scheme);

// Solver trace -> CSV "restart,iteration,objective,max_power_violation".
std::string solver_trace_csv(const std::vector<SolverTraceRow>& trace);

}  // namespace relaynet
