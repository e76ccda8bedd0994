// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <span>
#include <stdexcept>

#include "skg/effective_pool.hpp"
#include "skg/scheduler.hpp"
#include "skg/types.hpp"

namespace skg {

struct TrialOutcome {
  double data_rate;
  double capacity;
};

/// E[C_D] / E[C] over Monte Carlo trials (ratio of means).
double parallel_efficiency(std::span<const TrialOutcome> trials);

/// Frame counts of the sequential scheme: M reconciliation frames produce
/// enough key for L data frames.
struct SequentialAccounting {
  long m_frames = 0;
  long l_frames = 0;
  double eta = 0.0;
};

/// M = ceil(kappa C_SKG / E[C_R]), L = floor(C_SKG / (beta E[C])),
/// eta = L / (L + M), and eta = 0 when L = 0. Quotients within 1e-9 of an
/// integer are snapped to it before rounding.
SequentialAccounting sequential_accounting(double c_skg, double mean_recon_rate, double mean_capacity,
                                           const SecurityParams& params);

/// Frame length of the sequential scheme in subcarrier slots, N (L + M) / L.
double sequential_equivalent_frames(int n, const SequentialAccounting& acct);

/// -(1/alpha) sum_i log2 E[2^{-alpha r_i / F}] over the columns of a
/// trials x subcarriers matrix of rates log2(1 + p g); E[sum r] / F at alpha = 0.
template <typename Derived>
double effective_rate(const Eigen::MatrixBase<Derived>& rates, double frame, double alpha) {
  if (!(alpha >= 0.0)) throw std::invalid_argument("effective_rate: alpha must be >= 0");
  return EffectiveRatePool(rates.template cast<double>(), alpha).rate_of_all(frame);
}

/// Effective capacity of the optimal policy over all N ranks, with a
/// per-trial cutoff. Rows of g_hat_trials are per-trial sorted gains.
double optimal_effective_capacity(const MatrixXd& g_hat_trials, double total_power, double alpha);

struct DelayConfig {
  double theta;
  double frame_duration_bandwidth = 1.0;

  double alpha() const { return theta * frame_duration_bandwidth / std::log(2.0); }
};

/// Delay-bound violation probability p exp(-theta zeta D_max).
double delay_outage(double theta, double zeta, double d_max, double p_nonempty);

/// Summary of one operating point.
struct RateReport {
  double capacity = 0.0;
  double data_rate = 0.0;
  double recon_rate = 0.0;
  double skg_rate = 0.0;
  double eta_parallel = 0.0;
  double eta_sequential = 0.0;
  double effective_parallel = 0.0;
  double effective_sequential = 0.0;
  double effective_optimal = 0.0;
};

}  // namespace skg
