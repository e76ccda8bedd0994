// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "skg/types.hpp"

namespace skg {

/// Block-fading multicarrier channel parameters. Validated on construction.
struct ChannelConfig {
  int n_subcarriers;
  double pilot_power;
  double gain_variance;
  double est_error_variance;
  std::uint64_t master_seed;

  ChannelConfig(int n, double pilot_power, double gain_variance = 1.0,
                double est_error_variance = 0.0, std::uint64_t master_seed = 0);
};

/// One coherence block. Observations and fading coefficients are in physical
/// subcarrier order; `g_hat` is sorted descending and `perm[k]` is the
/// physical index of the k-th strongest subcarrier.
struct ChannelRealization {
  VectorXcd h;
  VectorXcd h_hat;
  VectorXcd h_eve;
  VectorXcd obs_alice;
  VectorXcd obs_bob;
  VectorXcd obs_eve;
  VectorXd g_hat;
  std::vector<int> perm;
};

/// Draws trial `trial_index` of the stream selected by `cfg.master_seed`.
/// Per subcarrier the draw order is h, z_A, z_B, h_E, z_E, h_tilde; the
/// estimation error is drawn even when its variance is zero so that the
/// stream layout does not depend on the configuration.
ChannelRealization sample_channel(const ChannelConfig& cfg, std::uint64_t trial_index);

/// Estimated normalised gains |h_hat|^2 / (sigma_e^2 P + 1), physical order.
VectorXd normalized_gains(const VectorXcd& h_hat, double pilot_power,
                          double est_error_variance);

/// Per-rank variance of the descending-ordered exponential gains,
/// sigma^2 * sum_{q=j}^{N} 1/q^2 for rank j = 1..N (index 0 is the strongest).
template <typename Scalar = double>
Vector<Scalar> ordered_variance(int n, Scalar sigma2) {
  if (n < 1) throw std::invalid_argument("ordered_variance: n must be >= 1");
  if (!(sigma2 > Scalar(0))) throw std::invalid_argument("ordered_variance: sigma2 must be > 0");
  Vector<Scalar> v(n);
  Scalar tail(0);
  for (int q = n; q >= 1; --q) {
    tail += Scalar(1) / (Scalar(q) * Scalar(q));
    v(q - 1) = sigma2 * tail;
  }
  return v;
}

/// Density of the j-th largest (1-based) of n i.i.d. exponentials of mean sigma2.
template <typename Scalar = double>
Scalar order_stat_pdf(int n, int j, Scalar sigma2, Scalar g) {
  if (n < 1 || j < 1 || j > n) throw std::invalid_argument("order_stat_pdf: rank out of range");
  if (!(sigma2 > Scalar(0))) throw std::invalid_argument("order_stat_pdf: sigma2 must be > 0");
  if (g < Scalar(0)) return Scalar(0);
  using std::exp;
  using std::lgamma;
  using std::log;
  using std::pow;
  const Scalar log_coeff = lgamma(Scalar(n + 1)) - lgamma(Scalar(n - j + 1)) - lgamma(Scalar(j)) -
                           log(sigma2);
  const Scalar tail = exp(-g / sigma2);
  return exp(log_coeff) * pow(Scalar(1) - tail, Scalar(n - j)) * pow(tail, Scalar(j));
}

/// Long-term SKG rate of the given ranks (0-based) at pilot power P:
/// sum log2(1 + P s_j / (2 + 1 / (P s_j))).
template <typename Derived>
typename Derived::Scalar skg_rate(typename Derived::Scalar power,
                                  const Eigen::MatrixBase<Derived>& rank_variances,
                                  std::span<const int> ranks) {
  using Scalar = typename Derived::Scalar;
  if (!(power > Scalar(0))) throw std::invalid_argument("skg_rate: power must be > 0");
  Scalar sum(0);
  for (int r : ranks) {
    if (r < 0 || r >= rank_variances.size()) throw std::invalid_argument("skg_rate: rank out of range");
    const Scalar snr = power * rank_variances(r);
    sum += std::log2(Scalar(1) + snr / (Scalar(2) + Scalar(1) / snr));
  }
  return sum;
}

}  // namespace skg
