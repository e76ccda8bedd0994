// SPDX-License-Identifier: Apache-2.0
#include "skg/rate_metrics.hpp"

#include <cmath>
#include <stdexcept>

namespace skg {

namespace {

double snap(double x) {
  const double r = std::round(x);
  return std::abs(x - r) <= 1e-9 * std::max(1.0, std::abs(x)) ? r : x;
}

}  // namespace

double parallel_efficiency(std::span<const TrialOutcome> trials) {
  if (trials.empty()) throw std::invalid_argument("parallel_efficiency: no trials");
  double data = 0.0;
  double cap = 0.0;
  for (const auto& t : trials) {
    data += t.data_rate;
    cap += t.capacity;
  }
  if (!(cap > 0.0)) throw std::domain_error("parallel_efficiency: mean capacity is zero");
  return data / cap;
}

SequentialAccounting sequential_accounting(double c_skg, double mean_recon_rate, double mean_capacity,
                                           const SecurityParams& params) {
  params.validate();
  if (!(c_skg > 0.0)) throw std::invalid_argument("sequential_accounting: C_SKG must be > 0");
  if (!(mean_recon_rate > 0.0)) throw std::domain_error("sequential_accounting: E[C_R] must be > 0");
  if (!(mean_capacity > 0.0)) throw std::domain_error("sequential_accounting: E[C] must be > 0");
  SequentialAccounting a;
  a.m_frames = static_cast<long>(std::ceil(snap(params.kappa * c_skg / mean_recon_rate)));
  a.l_frames = static_cast<long>(std::floor(snap(c_skg / (params.beta * mean_capacity))));
  a.eta = a.l_frames == 0 ? 0.0 : static_cast<double>(a.l_frames) / static_cast<double>(a.l_frames + a.m_frames);
  return a;
}

double sequential_equivalent_frames(int n, const SequentialAccounting& acct) {
  if (n < 1) throw std::invalid_argument("sequential_equivalent_frames: n must be >= 1");
  if (acct.l_frames <= 0) throw std::domain_error("sequential_equivalent_frames: no data frames (L = 0)");
  return static_cast<double>(n) * static_cast<double>(acct.l_frames + acct.m_frames) /
         static_cast<double>(acct.l_frames);
}

double optimal_effective_capacity(const MatrixXd& g_hat_trials, double total_power, double alpha) {
  const auto pool = EffectiveRatePool::from_gains(g_hat_trials, total_power, alpha);
  return pool.rate_of_all(static_cast<double>(pool.n_ranks()));
}

double delay_outage(double theta, double zeta, double d_max, double p_nonempty) {
  if (!(theta >= 0.0) || !(zeta >= 0.0) || !(d_max >= 0.0))
    throw std::invalid_argument("delay_outage: theta, zeta and d_max must be >= 0");
  if (!(p_nonempty >= 0.0 && p_nonempty <= 1.0)) throw std::invalid_argument("delay_outage: p must be in [0, 1]");
  return p_nonempty * std::exp(-theta * zeta * d_max);
}

}  // namespace skg
