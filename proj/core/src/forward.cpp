#include "relaynet/forward.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "relaynet/errors.hpp"
#include "relaynet/parallel.hpp"

namespace relaynet {

double NoiseModel::sigma() const { return std::sqrt(sigma2); }

void NoiseModel::validate() const {
  if (!(sigma2 >= 0.0) || !std::isfinite(sigma2))
    throw dimension_error("noise variance must be finite and >= 0");
}

NoiseDraws NoiseDraws::zero(const LayeredNetwork& net) {
  NoiseDraws d;
  d.relay.reserve(net.depth());
  for (int n : net.layer_sizes) d.relay.emplace_back(n, 0.0);
  d.receiver.assign(net.users, 0.0);
  return d;
}

NoiseDraws NoiseDraws::sample(const LayeredNetwork& net, const NoiseModel& noise, Rng rng) {
  noise.validate();
  if (noise.sigma2 == 0.0) return zero(net);
  const double sigma = noise.sigma();
  NoiseDraws d;
  d.relay.reserve(net.depth());
  for (int n : net.layer_sizes) {
    auto& layer = d.relay.emplace_back();
    layer.reserve(n);
    for (int k = 0; k < n; ++k) layer.push_back(sigma * rng.gaussian());
  }
  d.receiver.reserve(net.users);
  for (int m = 0; m < net.users; ++m) d.receiver.push_back(sigma * rng.gaussian());
  return d;
}

ForwardTrace forward_with_noise(const LayeredNetwork& net, const RelayParams& params, double s,
                                const NoiseDraws& draws, RelayModel model) {
  const int d = net.depth();
  if (static_cast<int>(draws.relay.size()) != d ||
      static_cast<int>(draws.receiver.size()) != net.users)
    throw dimension_error("noise draws do not match network dimensions");
  if (!std::isfinite(s)) throw numeric_error("symbol is not finite");

  ForwardTrace t;
  t.s = s;
  t.y.resize(d);
  t.z.resize(d);
  t.o.resize(d);
  // NaN-prefill the output slots: any (impossible-by-construction) read of a
  // not-yet-computed layer poisons the result instead of passing silently.
  const double nan = std::numeric_limits<double>::quiet_NaN();
  for (int i = 0; i < d; ++i) t.o[i].assign(net.layer_sizes[i], nan);

  for (int i = 0; i < d; ++i) {
    const int ni = net.layer_sizes[i];
    auto& y = t.y[i];
    y.resize(ni);
    for (int n = 0; n < ni; ++n) y[n] = net.h[i][n] * s + draws.relay[i][n];
    for (int l = 0; l < i; ++l) {
      const auto& block = net.F[i][l];
      if (block.empty()) continue;
      const int nl = net.layer_sizes[l];
      const auto& ol = t.o[l];
      for (int n = 0; n < ni; ++n) {
        double acc = 0.0;
        const double* row = block.data() + static_cast<std::size_t>(n) * nl;
        for (int k = 0; k < nl; ++k) acc += row[k] * ol[k];
        y[n] += acc;
      }
    }

    auto& z = t.z[i];
    auto& o = t.o[i];
    z.resize(ni);
    for (int n = 0; n < ni; ++n) {
      z[n] = params.w[i][n] * y[n] + params.b[i][n];
      o[n] = (model == RelayModel::Tanh) ? std::tanh(z[n]) : z[n];
      if (!std::isfinite(o[n]))
        throw numeric_error("non-finite relay output at layer " + std::to_string(i + 1) +
                            ", relay " + std::to_string(n + 1));
    }
  }

  t.r.resize(net.users);
  for (int m = 0; m < net.users; ++m) {
    double acc = draws.receiver[m];
    for (int i = 0; i < d; ++i) {
      const auto& gim = net.g[i][m];
      const auto& oi = t.o[i];
      for (int n = 0; n < net.layer_sizes[i]; ++n) acc += gim[n] * oi[n];
    }
    if (!std::isfinite(acc))
      throw numeric_error("non-finite signal at receiver " + std::to_string(m + 1));
    t.r[m] = acc;
  }
  return t;
}

ForwardTrace forward(const LayeredNetwork& net, const RelayParams& params, double s,
                     const NoiseModel& noise, Rng rng) {
  const std::uint64_t seed = rng.state();
  ForwardTrace t = forward_with_noise(net, params, s, NoiseDraws::sample(net, noise, rng));
  t.noise_seed = seed;
  return t;
}

ForwardTrace forward_noiseless(const LayeredNetwork& net, const RelayParams& params, double s) {
  return forward_with_noise(net, params, s, NoiseDraws::zero(net));
}

std::vector<ForwardTrace> forward_batch(const LayeredNetwork& net, const RelayParams& params,
                                        const std::vector<double>& symbols,
                                        const NoiseModel& noise, const Rng& rng,
                                        std::uint64_t index_offset) {
  if (symbols.empty()) throw dimension_error("forward_batch needs at least one symbol");
  std::vector<ForwardTrace> traces(symbols.size());
  parallel_chunks(static_cast<std::int64_t>(symbols.size()), 256,
                  [&](std::int64_t begin, std::int64_t end) {
                    for (std::int64_t b = begin; b < end; ++b)
                      traces[b] = forward(net, params, symbols[b], noise,
                                          rng.substream(index_offset + b));
                  });
  return traces;
}

}  // namespace relaynet
