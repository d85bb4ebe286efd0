#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "relaynet/forward.hpp"
#include "relaynet/modem.hpp"
#include "relaynet/network.hpp"
#include "relaynet/rng.hpp"

namespace relaynet {

// Per-user receiver loss.  None excludes the user from the training loss
// (its gradient contribution is zero).
enum class LossKind { Bpsk, PamSquared, None };

enum class InitMode { Paper, Normalized, LinearBaseline };

struct TrainConfig {
  int batch_size = 512;        // B, symbols per gradient step
  double learning_rate = 0.1;  // eta
  int steps = 2000;            // T
  std::vector<LossKind> loss_assignment;  // one entry per user
  InitMode init_mode = InitMode::Normalized;
  double sigma2_train = 0.05;
  std::uint64_t seed = 1;
  int probe_batch = 10000;  // symbols for the initialization power probe

  void validate(const ModulationScheme& scheme) const;
};

struct LossReport {
  std::vector<double> loss;                    // per step
  std::vector<std::vector<double>> per_user;   // [step][user] mean loss component
};

// Frozen training data: bits, symbols and every noise draw, so the loss is a
// deterministic function of the parameters (gradient checks replay it).
struct TrainingBatch {
  std::vector<std::vector<int>> bits;  // [b][M*K]
  std::vector<double> symbols;         // [b]
  std::vector<NoiseDraws> noise;       // [b]

  int size() const { return static_cast<int>(symbols.size()); }
};

// Symbol b derives from rng.substream(b): first one 64-bit word for the bits,
// then the noise draws.
TrainingBatch sample_training_batch(const LayeredNetwork& net, const ModulationScheme& scheme,
                                    int batch_size, const NoiseModel& noise, const Rng& rng);

// Batch RMS normalization: r_tilde[b] = r[b] / rms, rms = sqrt(mean r^2).
// Throws numeric_error on an all-zero batch. Requires >= 2 samples.
std::pair<std::vector<double>, double> normalize_batch(const std::vector<double>& r);

// log2(1 + exp(-r_tilde * (-1)^u)), evaluated in a form stable for large
// |r_tilde|.  Note the sign convention: the formula rewards r_tilde > 0 for
// u = 0.  Training aligns labels so that the sign detector decodes the gray
// mapping correctly; see batch_gradient.
double loss_bpsk(int u, double r_tilde);

// log2(1 + exp(-(r_tilde^2 - 1) * (-1)^u)); even in r_tilde.
double loss_pam(int u, double r_tilde);

struct BatchGradient {
  double loss = 0.0;                  // mean over (b, m, k)
  std::vector<double> per_user_loss;  // mean over (b, k) per user
  RelayParams grad;                   // dLoss/dw, dLoss/db
};

// Loss value only, at frozen data (used by finite-difference oracles).
double batch_loss(const LayeredNetwork& net, const RelayParams& params,
                  const ModulationScheme& scheme, const std::vector<LossKind>& losses,
                  const TrainingBatch& batch);

// Exact reverse-mode gradient of the batch loss for the realized noise,
// including the tanh Jacobian, all inter-layer fan-out, and the coupling of
// every sample through the batch RMS normalizer.
BatchGradient batch_gradient(const LayeredNetwork& net, const RelayParams& params,
                             const ModulationScheme& scheme, const std::vector<LossKind>& losses,
                             const TrainingBatch& batch);

// Samples a fresh batch from `rng` and evaluates batch_gradient on it.
BatchGradient batch_loss_and_gradient(const LayeredNetwork& net, const RelayParams& params,
                                      const ModulationScheme& scheme, const TrainConfig& cfg,
                                      const Rng& rng);

struct TrainResult {
  RelayParams params;
  LossReport history;
};

// Plain SGD: T steps, fresh random bits and noise every step (step t draws
// from Rng(cfg.seed).substream(t + 1); substream(0) seeds initialization).
// Throws numeric_error naming the step if the loss turns non-finite.
TrainResult train(const LayeredNetwork& net, const ModulationScheme& scheme,
                  const TrainConfig& cfg, const std::optional<RelayParams>& initial = std::nullopt);

// Gain/bias initialization that keeps every relay in its linear regime.
// Layer by layer, estimates p = E[y^2] per relay over `probe_batch` random
// symbols (using the layers already initialized), then sets b = 0 and
//   Paper:      w = a*s / p
//   Normalized: w = a*s / sqrt(p)
// with sign s uniform on {-1,+1} and amplitude a uniform on [0.5, 1].
// LinearBaseline takes w from optimize_linear (default config) instead.
RelayParams initialize(const LayeredNetwork& net, const ModulationScheme& scheme, InitMode mode,
                       const NoiseModel& noise, int probe_batch, const Rng& rng);

// The per-relay weight formula by itself.
double init_weight(double p, double amplitude, int sign, InitMode mode);

// History -> CSV with header "step,loss,loss_user1,...".
std::string loss_history_csv(const LossReport& history);

}  // namespace relaynet
