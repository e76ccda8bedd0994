// SPDX-License-Identifier: Apache-2.0
#include <algorithm>
#include <cmath>
#include <random>

#include "catch_amalgamated.hpp"
#include "skg/channel_model.hpp"

using namespace skg;
using Catch::Approx;

TEST_CASE("channel config rejects invalid parameters") {
  CHECK_THROWS_AS(ChannelConfig(0, 10.0), std::invalid_argument);
  CHECK_THROWS_AS(ChannelConfig(4, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(ChannelConfig(4, 10.0, -1.0), std::invalid_argument);
  CHECK_THROWS_AS(ChannelConfig(4, 10.0, 1.0, -0.1), std::invalid_argument);
  CHECK_NOTHROW(ChannelConfig(1, 1e-3, 0.5, 0.0));
}

TEST_CASE("realizations are reproducible per (seed, trial)") {
  const ChannelConfig cfg(12, 10.0, 1.0, 0.1, 99);
  const auto a = sample_channel(cfg, 5);
  const auto b = sample_channel(cfg, 5);
  const auto c = sample_channel(cfg, 6);
  CHECK(a.h == b.h);
  CHECK(a.obs_alice == b.obs_alice);
  CHECK(a.g_hat == b.g_hat);
  CHECK(a.h != c.h);
  const auto other_seed = sample_channel(ChannelConfig(12, 10.0, 1.0, 0.1, 100), 5);
  CHECK(a.h != other_seed.h);
}

TEST_CASE("stream layout does not depend on the estimation error variance") {
  const auto exact = sample_channel(ChannelConfig(8, 10.0, 1.0, 0.0, 3), 0);
  const auto noisy = sample_channel(ChannelConfig(8, 10.0, 1.0, 0.5, 3), 0);
  CHECK(exact.h == noisy.h);
  CHECK(exact.obs_bob == noisy.obs_bob);
  CHECK(exact.h_hat == exact.h);
  CHECK(noisy.h_hat != noisy.h);
}

TEST_CASE("sorted gains and permutation are consistent") {
  const ChannelConfig cfg(16, 10.0, 1.0, 0.2, 1);
  const auto r = sample_channel(cfg, 0);
  const VectorXd gains = normalized_gains(r.h_hat, cfg.pilot_power, cfg.est_error_variance);
  std::vector<int> seen(r.perm);
  std::sort(seen.begin(), seen.end());
  for (int i = 0; i < 16; ++i) CHECK(seen[i] == i);
  for (int k = 0; k < 16; ++k) {
    CHECK(r.g_hat(k) == gains(r.perm[k]));
    CHECK(r.g_hat(k) == Approx(std::norm(r.h_hat(r.perm[k])) / (0.2 * 10.0 + 1.0)));
    if (k > 0) CHECK(r.g_hat(k - 1) >= r.g_hat(k));
  }
}

TEST_CASE("gain and reciprocity statistics") {
  // sigma^2 = 2: E|h|^2 = 2; x_A - x_B = z_A - z_B has zero mean and variance 2.
  const ChannelConfig cfg(1, 4.0, 2.0, 0.0, 17);
  const int n = 10000;
  double gain = 0.0;
  std::complex<double> diff_mean = 0.0;
  double diff_var = 0.0;
  for (int t = 0; t < n; ++t) {
    const auto r = sample_channel(cfg, t);
    gain += std::norm(r.h(0));
    const auto d = r.obs_alice(0) - r.obs_bob(0);
    diff_mean += d;
    diff_var += std::norm(d);
  }
  CHECK(gain / n == Approx(2.0).epsilon(0.02));
  CHECK(std::abs(diff_mean / double(n)) < 0.05);
  CHECK(diff_var / n == Approx(2.0).epsilon(0.05));
}

TEST_CASE("ordered variance closed form") {
  const VectorXd one = ordered_variance(1, 3.0);
  REQUIRE(one.size() == 1);
  CHECK(one(0) == Approx(3.0));
  const VectorXd two = ordered_variance(2, 1.0);
  CHECK(two(0) == Approx(1.25));
  CHECK(two(1) == Approx(0.25));
  const VectorXd v = ordered_variance(24, 2.0);
  CHECK(v(23) == Approx(2.0 / (24.0 * 24.0)));
  for (int j = 1; j < 24; ++j) CHECK(v(j - 1) > v(j));
  CHECK_THROWS_AS(ordered_variance(0, 1.0), std::invalid_argument);
  const auto vf = ordered_variance<float>(4, 1.0f);
  CHECK(vf(3) == Approx(1.0 / 16.0));
}

TEST_CASE("order-statistic density integrates to one and has the Renyi mean") {
  // Composite Simpson on [0, 60 sigma^2]; the mean of the j-th largest of n
  // exponentials is sigma^2 * sum_{q=j}^{n} 1/q.
  const int n = 12;
  const double sigma2 = 1.5;
  const int steps = 60000;
  const double hi = 60.0 * sigma2;
  const double h = hi / steps;
  for (int j = 1; j <= n; ++j) {
    double mass = 0.0;
    double mean = 0.0;
    for (int k = 0; k <= steps; ++k) {
      const double g = k * h;
      const double w = (k == 0 || k == steps) ? 1.0 : (k % 2 ? 4.0 : 2.0);
      const double f = order_stat_pdf(n, j, sigma2, g);
      mass += w * f;
      mean += w * g * f;
    }
    mass *= h / 3.0;
    mean *= h / 3.0;
    double renyi = 0.0;
    for (int q = j; q <= n; ++q) renyi += sigma2 / q;
    CHECK(mass == Approx(1.0).margin(1e-6));
    CHECK(mean == Approx(renyi).epsilon(1e-6));
  }
}

TEST_CASE("ordered variance matches sorted exponential draws") {
  const int n = 8;
  const int draws = 200000;
  std::mt19937_64 rng(5);
  std::exponential_distribution<double> expo(1.0);
  std::vector<double> x(n), sum(n, 0.0), sum2(n, 0.0);
  for (int d = 0; d < draws; ++d) {
    for (auto& v : x) v = expo(rng);
    std::sort(x.begin(), x.end(), std::greater<double>());
    for (int j = 0; j < n; ++j) {
      sum[j] += x[j];
      sum2[j] += x[j] * x[j];
    }
  }
  const VectorXd v = ordered_variance(n, 1.0);
  for (int j = 0; j < n; ++j) {
    const double m = sum[j] / draws;
    CHECK(sum2[j] / draws - m * m == Approx(v(j)).epsilon(0.03));
  }
}

TEST_CASE("skg rate of ranks") {
  const VectorXd var = VectorXd::Constant(3, 1.0);
  const std::vector<int> one{0};
  CHECK(skg_rate(10.0, var, std::span<const int>(one)) == Approx(std::log2(1.0 + 10.0 / 2.1)));
  const std::vector<int> all{0, 1, 2};
  CHECK(skg_rate(10.0, var, std::span<const int>(all)) == Approx(3.0 * std::log2(1.0 + 10.0 / 2.1)));
  const std::vector<int> bad{3};
  CHECK_THROWS_AS(skg_rate(10.0, var, std::span<const int>(bad)), std::invalid_argument);
}
