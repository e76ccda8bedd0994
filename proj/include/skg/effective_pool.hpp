// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <span>

#include "skg/types.hpp"

namespace skg {

/// Monte Carlo pool of per-rank rates log2(1 + p_i g_i) under a fixed delay
/// exponent: one row per trial, one column per rank (strongest first).
class EffectiveRatePool {
 public:
  EffectiveRatePool(MatrixXd rates, double alpha);

  /// Builds the pool from per-trial sorted gains using the effective-capacity
  /// power policy (waterfilling when alpha == 0) with sum power total_power.
  static EffectiveRatePool from_gains(const MatrixXd& g_hat_trials, double total_power, double alpha);

  const MatrixXd& rates() const { return rates_; }
  double alpha() const { return alpha_; }
  int n_ranks() const { return static_cast<int>(rates_.cols()); }
  int n_trials() const { return static_cast<int>(rates_.rows()); }

  /// -(1/alpha) log2 E[2^{-alpha r_i / frame}] per rank; the mean rate / frame
  /// when alpha == 0. Effective rates of disjoint sets of ranks add.
  VectorXd rank_terms(double frame) const;

  /// Effective rate of the set of ranks with normalisation `frame`.
  double rate(std::span<const int> ranks, double frame) const;

  /// Effective rate of every rank together.
  double rate_of_all(double frame) const { return rank_terms(frame).sum(); }

  double mean_capacity() const;

 private:
  MatrixXd rates_;
  double alpha_;
};

}  // namespace skg
