// SPDX-License-Identifier: Apache-2.0
#include <cmath>
#include <random>

#include "catch_amalgamated.hpp"
#include "skg/channel_model.hpp"
#include "skg/power_allocation.hpp"
#include "skg/rate_metrics.hpp"

using namespace skg;
using Catch::Approx;

TEST_CASE("parallel efficiency is a ratio of means") {
  const std::vector<TrialOutcome> t{{9.0, 10.0}, {2.0, 4.0}};
  CHECK(parallel_efficiency(t) == Approx(11.0 / 14.0));
  CHECK_THROWS(parallel_efficiency(std::vector<TrialOutcome>{}));
  CHECK_THROWS_AS(parallel_efficiency(std::vector<TrialOutcome>{{0.0, 0.0}}), std::domain_error);
}

TEST_CASE("sequential frame accounting") {
  const auto a = sequential_accounting(10.0, 7.0, 12.0, {2.0, 0.1});
  CHECK(a.m_frames == 3);
  CHECK(a.l_frames == 8);
  CHECK(a.eta == Approx(8.0 / 11.0));
  CHECK(sequential_equivalent_frames(12, a) == Approx(16.5));

  const auto none = sequential_accounting(1.0, 7.0, 12.0, {2.0, 1.0});
  CHECK(none.l_frames == 0);
  CHECK(none.eta == 0.0);
  CHECK_THROWS_AS(sequential_equivalent_frames(12, none), std::domain_error);

  SequentialAccounting hypothetical;
  hypothetical.m_frames = 0;
  hypothetical.l_frames = 5;
  CHECK(sequential_equivalent_frames(12, hypothetical) == Approx(12.0));

  // 0.3 / (0.1 * 1.0) evaluates to 2.9999999999999996 in binary floating point.
  CHECK(sequential_accounting(0.3, 1.0, 1.0, {1.0, 0.1}).l_frames == 3);
  CHECK_THROWS_AS(sequential_accounting(1.0, 0.0, 1.0, {2.0, 0.1}), std::domain_error);
}

TEST_CASE("effective rate limits and bounds") {
  std::mt19937_64 rng(21);
  std::exponential_distribution<double> expo(0.7);
  MatrixXd rates(2000, 5);
  for (Eigen::Index t = 0; t < rates.rows(); ++t)
    for (Eigen::Index i = 0; i < rates.cols(); ++i) rates(t, i) = expo(rng);
  const double mean = rates.rowwise().sum().mean() / 5.0;
  CHECK(effective_rate(rates, 5.0, 0.0) == Approx(mean));
  CHECK(effective_rate(rates, 5.0, 1e-9) == Approx(mean).epsilon(1e-8));
  double prev = effective_rate(rates, 5.0, 0.0);
  for (double alpha : {1e-6, 1e-3, 0.1, 1.0, 10.0, 100.0, 1e4, 1e6}) {
    const double e = effective_rate(rates, 5.0, alpha);
    CHECK(std::isfinite(e));
    CHECK(e <= prev + 1e-12);
    CHECK(e <= mean + 1e-12);
    prev = e;
  }
  // Large exponents approach the per-rank minimum rate over the frame.
  const double floor_rate = rates.colwise().minCoeff().sum() / 5.0;
  CHECK(effective_rate(rates, 5.0, 1e9) == Approx(floor_rate).epsilon(1e-3));
  // Deterministic rates: the exponent has no effect.
  CHECK(effective_rate(MatrixXd::Constant(10, 3, 2.0), 3.0, 50.0) == Approx(2.0));
}

TEST_CASE("optimal effective capacity") {
  // Equal unit gains with unit power per subcarrier: one bit per subcarrier.
  const MatrixXd equal = MatrixXd::Ones(50, 6);
  for (double alpha : {0.0, 1e-3, 1.0, 1e3}) CHECK(optimal_effective_capacity(equal, 6.0, alpha) == Approx(1.0));

  // Closed form -(1/alpha) sum_i log2 E[(g_i/g0)^{-alpha/(alpha+N)}] when every
  // subcarrier is active (high power), with g0 per trial from the power constraint.
  const int n = 4;
  const double alpha = 3.0;
  const double total = 1e6;
  MatrixXd gains(500, n);
  for (int t = 0; t < 500; ++t) gains.row(t) = sample_channel(ChannelConfig(n, 100.0, 1.0, 0.0, 8), t).g_hat.transpose();
  const double a = alpha / (alpha + n);
  VectorXd acc = VectorXd::Zero(n);
  for (int t = 0; t < 500; ++t) {
    const Eigen::ArrayXd g = gains.row(t).transpose().array();
    REQUIRE((effective_power_allocation(VectorXd(g.matrix()), total, alpha).powers.array() > 0.0).all());
    const double g0 = std::pow(g.pow(-a).sum() / (total + g.inverse().sum()), (alpha + n) / n);
    acc += (g / g0).pow(-a).matrix();
  }
  double closed = 0.0;
  for (int i = 0; i < n; ++i) closed += -std::log2(acc(i) / 500.0) / alpha;
  CHECK(optimal_effective_capacity(gains, total, alpha) == Approx(closed).epsilon(1e-9));
}

TEST_CASE("delay outage and exponent conversion") {
  CHECK(delay_outage(1.0, 2.0, 3.0, 0.5) == Approx(0.5 * std::exp(-6.0)));
  CHECK(delay_outage(0.0, 2.0, 3.0, 0.25) == Approx(0.25));
  CHECK_THROWS_AS(delay_outage(1.0, 1.0, 1.0, 1.5), std::invalid_argument);
  CHECK(DelayConfig{100.0}.alpha() == Approx(100.0 / std::log(2.0)));
  CHECK(DelayConfig{1.0, 2.0}.alpha() == Approx(2.0 / std::log(2.0)));
}
