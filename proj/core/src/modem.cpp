#include "relaynet/modem.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>

#include "relaynet/errors.hpp"
#include "relaynet/parallel.hpp"

namespace relaynet {

ModulationScheme ModulationScheme::make(int users, int bits_per_user) {
  if (users < 1) throw dimension_error("scheme needs at least one user");
  if (bits_per_user < 1) throw dimension_error("scheme needs at least one bit per user");
  if (users * bits_per_user > 20) throw dimension_error("constellation too large (M*K > 20)");
  ModulationScheme s;
  s.users = users;
  s.bits_per_user = bits_per_user;
  return s;
}

double ModulationScheme::level(int index) const {
  const int L = num_levels();
  if (index < 0 || index >= L) throw dimension_error("constellation index out of range");
  // (2*index - (L-1)) / (L-1): antisymmetric by construction, max |level| = 1.
  return static_cast<double>(2 * index - (L - 1)) / static_cast<double>(L - 1);
}

int ModulationScheme::gray_label(int index) const {
  const int L = num_levels();
  if (index < 0 || index >= L) throw dimension_error("constellation index out of range");
  return index ^ (index >> 1);
}

int ModulationScheme::index_of_label(int label) const {
  const int L = num_levels();
  if (label < 0 || label >= L) throw dimension_error("gray label out of range");
  int index = 0;
  for (int bit = label; bit != 0; bit >>= 1) index ^= bit;
  return index;
}

double ModulationScheme::symbol_power() const {
  const int L = num_levels();
  double sum = 0.0;
  for (int i = 0; i < L; ++i) sum += level(i) * level(i);
  return sum / L;
}

double modulate(const std::vector<int>& bits, const ModulationScheme& scheme) {
  const int mk = scheme.total_bits();
  if (static_cast<int>(bits.size()) != mk)
    throw dimension_error("modulate: expected " + std::to_string(mk) + " bits, got " +
                          std::to_string(bits.size()));
  int label = 0;
  for (int j = 0; j < mk; ++j) {
    if (bits[j] != 0 && bits[j] != 1) throw dimension_error("modulate: bits must be 0 or 1");
    label = (label << 1) | bits[j];  // user 1 first = most significant
  }
  return scheme.level(scheme.index_of_label(label));
}

std::vector<int> bits_of_label(int label, const ModulationScheme& scheme) {
  const int mk = scheme.total_bits();
  std::vector<int> bits(mk);
  for (int j = 0; j < mk; ++j) bits[j] = (label >> (mk - 1 - j)) & 1;
  return bits;
}

int detect_bpsk(double r) { return r > 0.0 ? 1 : 0; }

int detect_pam_user2(double r, double rms) {
  if (!(rms > 0.0)) throw numeric_error("detect_pam_user2: rms must be > 0");
  const double rt = r / rms;
  return rt * rt < 1.0 ? 1 : 0;
}

std::vector<int> detect_nearest(double r, double rms, const ModulationScheme& scheme) {
  if (!(rms > 0.0)) throw numeric_error("detect_nearest: rms must be > 0");
  const double rt = r / rms;
  const int L = scheme.num_levels();
  int best = 0;
  double best_dist = std::abs(rt - scheme.level(0));
  for (int i = 1; i < L; ++i) {
    const double dist = std::abs(rt - scheme.level(i));
    if (dist < best_dist) {  // strict: ties stay at the lower level
      best = i;
      best_dist = dist;
    }
  }
  return bits_of_label(scheme.gray_label(best), scheme);
}

BerEstimate estimate_ber(const LayeredNetwork& net, const RelayParams& params,
                         const ModulationScheme& scheme, const NoiseModel& noise,
                         const std::vector<Detector>& detectors, long trials, const Rng& rng,
                         RelayModel model) {
  if (trials < 1) throw dimension_error("estimate_ber: trials must be >= 1");
  if (static_cast<int>(detectors.size()) != scheme.users)
    throw dimension_error("estimate_ber: one detector per user required");
  if (scheme.bits_per_user != 1) {
    for (Detector det : detectors)
      if (det != Detector::Nearest)
        throw dimension_error("estimate_ber: bpsk/pam detectors need K = 1");
  }
  params.validate_for(net);

  const int M = scheme.users;
  const int K = scheme.bits_per_user;
  const int mk = scheme.total_bits();

  // Pass 1: receiver signals and transmitted bits for every trial.
  std::vector<double> r(static_cast<std::size_t>(trials) * M);
  std::vector<std::uint8_t> sent(static_cast<std::size_t>(trials) * mk);
  parallel_chunks(trials, 4096, [&](std::int64_t begin, std::int64_t end) {
    std::vector<int> bits(mk);
    for (std::int64_t t = begin; t < end; ++t) {
      Rng stream = rng.substream(static_cast<std::uint64_t>(t));
      const std::uint64_t word = stream.next_u64();
      for (int j = 0; j < mk; ++j) {
        bits[j] = static_cast<int>((word >> j) & 1u);
        sent[static_cast<std::size_t>(t) * mk + j] = static_cast<std::uint8_t>(bits[j]);
      }
      const double s = modulate(bits, scheme);
      const ForwardTrace trace =
          forward_with_noise(net, params, s, NoiseDraws::sample(net, noise, stream), model);
      for (int m = 0; m < M; ++m) r[static_cast<std::size_t>(t) * M + m] = trace.r[m];
    }
  });

  // Per-receiver batch RMS, summed block-by-block in a fixed order.
  const std::int64_t grain = 4096;
  const std::int64_t blocks = chunk_count(trials, grain);
  std::vector<double> block_sq(static_cast<std::size_t>(blocks) * M, 0.0);
  parallel_chunks(trials, grain, [&](std::int64_t begin, std::int64_t end) {
    const std::int64_t blk = begin / grain;
    for (int m = 0; m < M; ++m) {
      double acc = 0.0;
      for (std::int64_t t = begin; t < end; ++t) {
        const double v = r[static_cast<std::size_t>(t) * M + m];
        acc += v * v;
      }
      block_sq[static_cast<std::size_t>(blk) * M + m] = acc;
    }
  });
  std::vector<double> rms(M, 0.0);
  for (int m = 0; m < M; ++m) {
    double acc = 0.0;
    for (std::int64_t blk = 0; blk < blocks; ++blk)
      acc += block_sq[static_cast<std::size_t>(blk) * M + m];
    rms[m] = std::sqrt(acc / static_cast<double>(trials));
  }
  bool needs_rms = false;
  for (Detector det : detectors)
    if (det != Detector::Bpsk) needs_rms = true;
  if (needs_rms) {
    for (int m = 0; m < M; ++m)
      if (!(rms[m] > 0.0))
        throw numeric_error("estimate_ber: receiver " + std::to_string(m + 1) +
                            " has an all-zero batch (degenerate network)");
  }

  // Pass 2: detect and count errors (integer counts, order-independent).
  std::vector<long> block_err(static_cast<std::size_t>(blocks) * M * K, 0);
  parallel_chunks(trials, grain, [&](std::int64_t begin, std::int64_t end) {
    const std::int64_t blk = begin / grain;
    long* err = block_err.data() + static_cast<std::size_t>(blk) * M * K;
    for (std::int64_t t = begin; t < end; ++t) {
      const double* rt = r.data() + static_cast<std::size_t>(t) * M;
      const std::uint8_t* ut = sent.data() + static_cast<std::size_t>(t) * mk;
      for (int m = 0; m < M; ++m) {
        switch (detectors[m]) {
          case Detector::Bpsk:
            err[m * K] += detect_bpsk(rt[m]) != ut[m * K];
            break;
          case Detector::PamSquared:
            err[m * K] += detect_pam_user2(rt[m], rms[m]) != ut[m * K];
            break;
          case Detector::Nearest: {
            const std::vector<int> hat = detect_nearest(rt[m], rms[m], scheme);
            for (int k = 0; k < K; ++k) err[m * K + k] += hat[m * K + k] != ut[m * K + k];
            break;
          }
        }
      }
    }
  });

  BerEstimate est;
  est.trials = trials;
  est.sigma2 = noise.sigma2;
  est.ber.assign(M, std::vector<double>(K, 0.0));
  est.worst = 0.0;
  for (int m = 0; m < M; ++m) {
    for (int k = 0; k < K; ++k) {
      long errors = 0;
      for (std::int64_t blk = 0; blk < blocks; ++blk)
        errors += block_err[static_cast<std::size_t>(blk) * M * K + m * K + k];
      est.ber[m][k] = static_cast<double>(errors) / static_cast<double>(trials);
      est.worst = std::max(est.worst, est.ber[m][k]);
    }
  }
  return est;
}

}  // namespace relaynet
