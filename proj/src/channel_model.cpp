// SPDX-License-Identifier: Apache-2.0
#include "skg/channel_model.hpp"

#include <algorithm>
#include <numeric>

#include "skg/rng.hpp"

namespace skg {

ChannelConfig::ChannelConfig(int n, double p, double sigma2, double sigma_e2, std::uint64_t seed)
    : n_subcarriers(n),
      pilot_power(p),
      gain_variance(sigma2),
      est_error_variance(sigma_e2),
      master_seed(seed) {
  if (n < 1) throw std::invalid_argument("ChannelConfig: n_subcarriers must be >= 1");
  if (!(p > 0.0) || !std::isfinite(p)) throw std::invalid_argument("ChannelConfig: pilot_power must be > 0");
  if (!(sigma2 > 0.0) || !std::isfinite(sigma2))
    throw std::invalid_argument("ChannelConfig: gain_variance must be > 0");
  if (!(sigma_e2 >= 0.0) || !std::isfinite(sigma_e2))
    throw std::invalid_argument("ChannelConfig: est_error_variance must be >= 0");
}

VectorXd normalized_gains(const VectorXcd& h_hat, double pilot_power, double est_error_variance) {
  return h_hat.cwiseAbs2() / (est_error_variance * pilot_power + 1.0);
}

ChannelRealization sample_channel(const ChannelConfig& cfg, std::uint64_t trial_index) {
  const int n = cfg.n_subcarriers;
  auto engine = make_stream(cfg.master_seed, trial_index);
  const double amp = std::sqrt(cfg.pilot_power);

  ChannelRealization r;
  r.h.resize(n);
  r.h_hat.resize(n);
  r.h_eve.resize(n);
  r.obs_alice.resize(n);
  r.obs_bob.resize(n);
  r.obs_eve.resize(n);
  for (int i = 0; i < n; ++i) {
    const auto h = complex_normal(engine, cfg.gain_variance);
    const auto z_a = complex_normal(engine, 1.0);
    const auto z_b = complex_normal(engine, 1.0);
    const auto h_e = complex_normal(engine, cfg.gain_variance);
    const auto z_e = complex_normal(engine, 1.0);
    const auto h_err = complex_normal(engine, cfg.est_error_variance);
    r.h(i) = h;
    r.h_eve(i) = h_e;
    r.h_hat(i) = h + h_err;
    r.obs_alice(i) = amp * h + z_a;
    r.obs_bob(i) = amp * h + z_b;
    r.obs_eve(i) = amp * h_e + z_e;
  }

  const VectorXd gains = normalized_gains(r.h_hat, cfg.pilot_power, cfg.est_error_variance);
  r.perm.resize(n);
  std::iota(r.perm.begin(), r.perm.end(), 0);
  std::stable_sort(r.perm.begin(), r.perm.end(),
                   [&](int a, int b) { return gains(a) > gains(b); });
  r.g_hat.resize(n);
  for (int k = 0; k < n; ++k) r.g_hat(k) = gains(r.perm[k]);
  return r;
}

}  // namespace skg
