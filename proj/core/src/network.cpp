#include "relaynet/network.hpp"

#include <cmath>
#include <string>

#include "relaynet/errors.hpp"

namespace relaynet {

namespace {

void check_finite(const std::vector<double>& v, const std::string& name) {
  for (double x : v) {
    if (!std::isfinite(x)) throw dimension_error(name + " contains a non-finite entry");
  }
}

}  // namespace

int LayeredNetwork::total_relays() const {
  int n = 0;
  for (int s : layer_sizes) n += s;
  return n;
}

void LayeredNetwork::validate() const {
  const int d = depth();
  if (d <= 0) throw dimension_error("network needs at least one layer");
  if (users <= 0) throw dimension_error("network needs at least one receiver");
  for (int i = 0; i < d; ++i) {
    if (layer_sizes[i] <= 0)
      throw dimension_error("layer " + std::to_string(i + 1) + " has non-positive size");
  }
  if (static_cast<int>(h.size()) != d) throw dimension_error("h must have one vector per layer");
  if (static_cast<int>(F.size()) != d) throw dimension_error("F must have one row of blocks per layer");
  if (static_cast<int>(g.size()) != d) throw dimension_error("g must have one row per layer");

  for (int i = 0; i < d; ++i) {
    const auto layer = std::to_string(i + 1);
    if (static_cast<int>(h[i].size()) != layer_sizes[i])
      throw dimension_error("h[" + layer + "] length does not match layer size");
    check_finite(h[i], "h[" + layer + "]");

    if (static_cast<int>(F[i].size()) != i)
      throw dimension_error("F[" + layer + "] must have exactly " + std::to_string(i) +
                            " source blocks (layers below it)");
    for (int l = 0; l < i; ++l) {
      if (F[i][l].empty()) continue;  // all-zero block
      const std::size_t expect =
          static_cast<std::size_t>(layer_sizes[i]) * static_cast<std::size_t>(layer_sizes[l]);
      if (F[i][l].size() != expect)
        throw dimension_error("F[" + layer + "][" + std::to_string(l + 1) + "] must be " +
                              std::to_string(layer_sizes[i]) + "x" + std::to_string(layer_sizes[l]));
      check_finite(F[i][l], "F[" + layer + "][" + std::to_string(l + 1) + "]");
    }

    if (static_cast<int>(g[i].size()) != users)
      throw dimension_error("g[" + layer + "] must have one vector per receiver");
    for (int m = 0; m < users; ++m) {
      if (static_cast<int>(g[i][m].size()) != layer_sizes[i])
        throw dimension_error("g[" + layer + "][" + std::to_string(m + 1) +
                              "] length does not match layer size");
      check_finite(g[i][m], "g[" + layer + "][" + std::to_string(m + 1) + "]");
    }
  }
}

RelayParams RelayParams::zeros(const LayeredNetwork& net) {
  RelayParams p;
  p.w.reserve(net.depth());
  p.b.reserve(net.depth());
  for (int n : net.layer_sizes) {
    p.w.emplace_back(n, 0.0);
    p.b.emplace_back(n, 0.0);
  }
  return p;
}

RelayParams RelayParams::constant_gain(const LayeredNetwork& net, double gain) {
  RelayParams p = zeros(net);
  for (auto& wi : p.w)
    for (double& x : wi) x = gain;
  return p;
}

void RelayParams::validate_for(const LayeredNetwork& net) const {
  if (static_cast<int>(w.size()) != net.depth() || static_cast<int>(b.size()) != net.depth())
    throw dimension_error("params layer count does not match network");
  for (int i = 0; i < net.depth(); ++i) {
    if (static_cast<int>(w[i].size()) != net.layer_sizes[i])
      throw dimension_error("w[" + std::to_string(i + 1) + "] length does not match layer size");
    if (static_cast<int>(b[i].size()) != net.layer_sizes[i])
      throw dimension_error("b[" + std::to_string(i + 1) + "] length does not match layer size");
    check_finite(w[i], "w[" + std::to_string(i + 1) + "]");
    check_finite(b[i], "b[" + std::to_string(i + 1) + "]");
  }
}

std::size_t RelayParams::size() const {
  std::size_t n = 0;
  for (const auto& wi : w) n += wi.size();
  return 2 * n;
}

double& RelayParams::coord(std::size_t k) {
  std::size_t half = size() / 2;
  auto& bank = (k < half) ? w : b;
  if (k >= half) k -= half;
  for (auto& layer : bank) {
    if (k < layer.size()) return layer[k];
    k -= layer.size();
  }
  throw dimension_error("parameter coordinate out of range");
}

double RelayParams::coord(std::size_t k) const { return const_cast<RelayParams*>(this)->coord(k); }

void RelayParams::axpy(double scale, const RelayParams& other) {
  if (w.size() != other.w.size() || b.size() != other.b.size())
    throw dimension_error("axpy: mismatched params");
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t n = 0; n < w[i].size(); ++n) w[i][n] += scale * other.w[i][n];
    for (std::size_t n = 0; n < b[i].size(); ++n) b[i][n] += scale * other.b[i][n];
  }
}

}  // namespace relaynet
