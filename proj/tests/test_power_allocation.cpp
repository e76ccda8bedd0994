// SPDX-License-Identifier: Apache-2.0
#include <cmath>
#include <random>

#include "catch_amalgamated.hpp"
#include "skg/power_allocation.hpp"

using namespace skg;
using Catch::Approx;

namespace {

VectorXd random_sorted_gains(std::mt19937_64& rng, int n) {
  std::exponential_distribution<double> expo(1.0);
  VectorXd g(n);
  for (int i = 0; i < n; ++i) g(i) = expo(rng);
  std::sort(g.data(), g.data() + n, std::greater<double>());
  return g;
}

// Uniform point on the simplex scaled to `total`.
VectorXd random_feasible(std::mt19937_64& rng, int n, double total) {
  std::exponential_distribution<double> expo(1.0);
  VectorXd p(n);
  for (int i = 0; i < n; ++i) p(i) = expo(rng);
  return p * (total / p.sum());
}

}  // namespace

TEST_CASE("waterfilling closed-form instances") {
  VectorXd g(2);
  g << 4.0, 1.0;
  const auto a = waterfilling(g, 2.0);
  CHECK(a.powers(0) == Approx(1.375));
  CHECK(a.powers(1) == Approx(0.625));
  CHECK(a.multiplier == Approx(1.0 / 1.625));
  CHECK(capacity(g, a) == Approx(std::log2(6.5) + std::log2(1.625)));
  CHECK(capacity(g, a) == Approx(3.4009).margin(1e-4));

  g << 4.0, 0.1;
  const auto b = waterfilling(g, 0.5);
  CHECK(b.powers(0) == Approx(0.5));
  CHECK(b.powers(1) == 0.0);
}

TEST_CASE("waterfilling rejects unusable inputs") {
  CHECK_THROWS_AS(waterfilling(VectorXd::Zero(3), 1.0), std::invalid_argument);
  CHECK_THROWS_AS(waterfilling(VectorXd::Ones(3), 0.0), std::invalid_argument);
  VectorXd g(3);
  g << 2.0, 0.0, 1.0;
  const auto p = waterfilling(g, 3.0);
  CHECK(p.powers(1) == 0.0);
  CHECK(p.powers.sum() == Approx(3.0));
}

TEST_CASE("waterfilling conserves power and satisfies KKT") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 40);
    const VectorXd g = random_sorted_gains(rng, n);
    const double total = 0.1 + 20.0 * std::generate_canonical<double, 53>(rng);
    const auto p = waterfilling(g, total);
    CHECK(std::abs(p.powers.sum() - total) <= 1e-9 * total);
    for (int i = 0; i < n; ++i) {
      CHECK(p.powers(i) >= 0.0);
      if (p.powers(i) > 0.0)
        CHECK(p.powers(i) + 1.0 / g(i) == Approx(1.0 / p.multiplier).epsilon(1e-9));
      else
        CHECK(g(i) <= p.multiplier * (1.0 + 1e-12));
    }
  }
}

TEST_CASE("waterfilling beats random feasible allocations") {
  std::mt19937_64 rng(12);
  const VectorXd g = random_sorted_gains(rng, 10);
  const double best = capacity(g, waterfilling(g, 30.0));
  for (int k = 0; k < 2000; ++k) CHECK(capacity(g, random_feasible(rng, 10, 30.0)) <= best + 1e-12);
}

TEST_CASE("effective policy limits") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 50; ++trial) {
    const VectorXd g = random_sorted_gains(rng, 24);
    const double total = 240.0;
    const auto wf = waterfilling(g, total);
    const auto low = effective_power_allocation(g, total, 1e-6);
    CHECK(std::abs(low.powers.sum() - total) <= 1e-9 * total);
    CHECK((low.powers - wf.powers).cwiseAbs().maxCoeff() <= 1e-6 * total);

    const auto high = effective_power_allocation(g, total, 1e6);
    CHECK(std::abs(high.powers.sum() - total) <= 1e-9 * total);
    CHECK(std::isfinite(high.log_multiplier));
    CHECK(high.log_multiplier < -1000.0);
    CHECK(high.multiplier == 0.0);
    // Channel inversion: every subcarrier active, equal received SNR to first order.
    CHECK((high.powers.array() > 0.0).all());
    const Eigen::ArrayXd snr = high.powers.array() * g.array();
    CHECK((snr.maxCoeff() - snr.minCoeff()) / snr.mean() < 0.05);
  }
}

TEST_CASE("effective policy equalises equal gains and is optimal") {
  const auto eq = effective_power_allocation(VectorXd::Constant(6, 0.7), 6.0, 3.0);
  for (int i = 0; i < 6; ++i) CHECK(eq.powers(i) == Approx(1.0));

  // Objective sum (1 + p g)^{-alpha/N} is minimised by the policy.
  std::mt19937_64 rng(14);
  const VectorXd g = random_sorted_gains(rng, 6);
  const double alpha = 5.0;
  auto objective = [&](const VectorXd& p) {
    return (1.0 + p.array() * g.array()).pow(-alpha / 6.0).sum();
  };
  const auto best = effective_power_allocation(g, 12.0, alpha);
  const double at_best = objective(best.powers);
  for (int k = 0; k < 2000; ++k) CHECK(objective(random_feasible(rng, 6, 12.0)) >= at_best - 1e-12);
}

TEST_CASE("effective policy cutoff matches its closed form") {
  // With every subcarrier active, g_0 = (sum g^{-a} / (P + sum 1/g))^{(alpha+N)/N}
  // where a = alpha/(alpha+N).
  VectorXd g(3);
  g << 3.0, 2.0, 1.5;
  const double alpha = 2.0;
  const double total = 9.0;
  const auto p = effective_power_allocation(g, total, alpha);
  const double a = alpha / (alpha + 3.0);
  const double g0 = std::pow(g.array().pow(-a).sum() / (total + g.array().inverse().sum()), (alpha + 3.0) / 3.0);
  CHECK(p.multiplier == Approx(g0).epsilon(1e-10));
  for (int i = 0; i < 3; ++i)
    CHECK(p.powers(i) == Approx(std::pow(g0, -3.0 / (alpha + 3.0)) * std::pow(g(i), -a) - 1.0 / g(i)));
}

TEST_CASE("float instantiation") {
  Eigen::VectorXf g(2);
  g << 4.0f, 1.0f;
  const auto p = waterfilling(g, 2.0f);
  CHECK(p.powers(0) == Approx(1.375).epsilon(1e-5));
  const auto e = effective_power_allocation(g, 2.0f, 1.0f);
  CHECK(e.powers.sum() == Approx(2.0).epsilon(1e-5));
}
