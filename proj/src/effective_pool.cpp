// SPDX-License-Identifier: Apache-2.0
#include "skg/effective_pool.hpp"

#include <cmath>
#include <stdexcept>

#include "skg/power_allocation.hpp"

namespace skg {

EffectiveRatePool::EffectiveRatePool(MatrixXd rates, double alpha) : rates_(std::move(rates)), alpha_(alpha) {
  if (rates_.rows() == 0 || rates_.cols() == 0) throw std::invalid_argument("EffectiveRatePool: empty pool");
  if (!(alpha_ >= 0.0) || !std::isfinite(alpha_)) throw std::invalid_argument("EffectiveRatePool: alpha must be >= 0");
}

EffectiveRatePool EffectiveRatePool::from_gains(const MatrixXd& g_hat_trials, double total_power, double alpha) {
  MatrixXd rates(g_hat_trials.rows(), g_hat_trials.cols());
  for (Eigen::Index t = 0; t < g_hat_trials.rows(); ++t) {
    const VectorXd g = g_hat_trials.row(t).transpose();
    const auto policy = alpha == 0.0 ? waterfilling(g, total_power) : effective_power_allocation(g, total_power, alpha);
    rates.row(t) = subcarrier_rates(g, policy.powers).transpose();
  }
  return EffectiveRatePool(std::move(rates), alpha);
}

VectorXd EffectiveRatePool::rank_terms(double frame) const {
  if (!(frame > 0.0)) throw std::invalid_argument("EffectiveRatePool: frame must be > 0");
  const auto trials = static_cast<double>(rates_.rows());
  if (alpha_ == 0.0) return rates_.colwise().mean().transpose() / frame;

  VectorXd out(rates_.cols());
  const double scale = -alpha_ * std::log(2.0) / frame;
  for (Eigen::Index i = 0; i < rates_.cols(); ++i) {
    // log E[exp(x)] with x = scale * r, shifted by max(x) and accumulated
    // through expm1 so both tiny and huge exponents stay accurate.
    const Eigen::ArrayXd x = rates_.col(i).array() * scale;
    const double m = x.maxCoeff();
    const double log_mean = m + std::log1p((x - m).expm1().sum() / trials);
    out(i) = -log_mean / (alpha_ * std::log(2.0));
  }
  return out;
}

double EffectiveRatePool::rate(std::span<const int> ranks, double frame) const {
  const VectorXd terms = rank_terms(frame);
  double sum = 0.0;
  for (int r : ranks) {
    if (r < 0 || r >= terms.size()) throw std::invalid_argument("EffectiveRatePool: rank out of range");
    sum += terms(r);
  }
  return sum;
}

double EffectiveRatePool::mean_capacity() const { return rates_.rowwise().sum().mean(); }

}  // namespace skg
