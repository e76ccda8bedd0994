// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "skg/types.hpp"

namespace skg {

enum class Regime { Waterfilling, EffectiveCapacity };

/// Per-subcarrier powers plus the Lagrange multiplier that produced them:
/// lambda for waterfilling, the cutoff g_0 for the effective-capacity policy.
/// `log_multiplier` is kept because g_0 underflows for large delay exponents.
template <typename Scalar>
struct PowerPolicy {
  Vector<Scalar> powers;
  Scalar multiplier;
  Scalar log_multiplier;
  Regime regime;
  Scalar alpha;
};

namespace detail {

inline constexpr int kMaxBisection = 400;

template <typename Scalar>
void check_gains(const Vector<Scalar>& g, Scalar total_power) {
  if (g.size() == 0) throw std::invalid_argument("power allocation: empty gain vector");
  if (!(total_power > Scalar(0)) || !std::isfinite(static_cast<double>(total_power)))
    throw std::invalid_argument("power allocation: total_power must be > 0");
  if ((g.array() < Scalar(0)).any() || !g.allFinite())
    throw std::invalid_argument("power allocation: gains must be finite and >= 0");
  if (!(g.array() > Scalar(0)).any()) throw std::invalid_argument("no usable subcarrier");
}

// Bisection on a monotone non-decreasing scalar map `sum(x)` for sum(x) = target,
// starting from sum(lo) <= target <= sum(hi). Returns hi so the caller's
// active set is a superset of the optimum's.
template <typename Scalar, typename F>
Scalar bisect_increasing(F&& sum, Scalar lo, Scalar hi, Scalar target) {
  Scalar s_lo = sum(lo);
  Scalar s_hi = sum(hi);
  // Analytic upper brackets can miss by an ulp; widen until they hold.
  for (int grow = 0; grow < 64 && s_lo <= target && s_hi < target; ++grow) {
    hi += std::max(hi - lo, Scalar(1));
    s_hi = sum(hi);
  }
  if (!(s_lo <= target && target <= s_hi)) throw std::logic_error("bisection: root not bracketed");
  for (int it = 0; it < kMaxBisection; ++it) {
    const Scalar mid = lo + (hi - lo) / Scalar(2);
    if (!(mid > lo && mid < hi)) break;
    const Scalar s_mid = sum(mid);
    if (s_mid < s_lo || s_mid > s_hi) throw std::logic_error("bisection: non-monotone sum");
    if (std::abs(static_cast<double>(s_mid - target)) <= 1e-12 * static_cast<double>(target)) {
      return mid;
    }
    if (s_mid < target) {
      lo = mid;
      s_lo = s_mid;
    } else {
      hi = mid;
      s_hi = s_mid;
    }
  }
  return hi;
}

}  // namespace detail

/// Waterfilling p_j = [1/lambda - 1/g_j]^+ with sum p_j = total_power.
template <typename Derived>
PowerPolicy<typename Derived::Scalar> waterfilling(const Eigen::MatrixBase<Derived>& g_hat,
                                                  typename Derived::Scalar total_power) {
  using Scalar = typename Derived::Scalar;
  const Vector<Scalar> g = g_hat;
  detail::check_gains(g, total_power);
  const Eigen::Index n = g.size();

  auto level_sum = [&](Scalar mu) {
    Scalar s(0);
    for (Eigen::Index i = 0; i < n; ++i)
      if (g(i) > Scalar(0)) s += std::max(mu - Scalar(1) / g(i), Scalar(0));
    return s;
  };
  Scalar max_inv(0);
  for (Eigen::Index i = 0; i < n; ++i)
    if (g(i) > Scalar(0)) max_inv = std::max(max_inv, Scalar(1) / g(i));
  Scalar mu = detail::bisect_increasing(level_sum, Scalar(0), total_power + max_inv, total_power);

  // Closed-form level on the bracketed active set; shrink it if the polish
  // pushes a boundary subcarrier negative.
  std::vector<char> active(n);
  for (Eigen::Index i = 0; i < n; ++i) active[i] = g(i) > Scalar(0) && mu - Scalar(1) / g(i) > Scalar(0);
  for (;;) {
    Scalar inv_sum(0);
    int count = 0;
    for (Eigen::Index i = 0; i < n; ++i)
      if (active[i]) {
        inv_sum += Scalar(1) / g(i);
        ++count;
      }
    if (count == 0) throw std::logic_error("waterfilling: empty active set");
    mu = (total_power + inv_sum) / Scalar(count);
    bool changed = false;
    for (Eigen::Index i = 0; i < n; ++i)
      if (active[i] && mu - Scalar(1) / g(i) < Scalar(0)) {
        active[i] = 0;
        changed = true;
      }
    if (!changed) break;
  }

  PowerPolicy<Scalar> out;
  out.powers = Vector<Scalar>::Zero(n);
  for (Eigen::Index i = 0; i < n; ++i)
    if (active[i]) out.powers(i) = mu - Scalar(1) / g(i);
  out.multiplier = Scalar(1) / mu;
  out.log_multiplier = -std::log(mu);
  out.regime = Regime::Waterfilling;
  out.alpha = Scalar(0);
  return out;
}

/// Power policy maximising the effective capacity at delay exponent alpha,
/// p_i = [A g_i^{eps} - 1]^+ / g_i with eps = N/(alpha+N) and A = g_0^{-eps}.
/// Solved for ln A so that tiny cutoffs g_0 stay representable.
template <typename Derived>
PowerPolicy<typename Derived::Scalar> effective_power_allocation(
    const Eigen::MatrixBase<Derived>& g_hat, typename Derived::Scalar total_power,
    typename Derived::Scalar alpha) {
  using Scalar = typename Derived::Scalar;
  const Vector<Scalar> g = g_hat;
  detail::check_gains(g, total_power);
  if (!(alpha >= Scalar(0)) || !std::isfinite(static_cast<double>(alpha)))
    throw std::invalid_argument("effective_power_allocation: alpha must be finite and >= 0");
  const Eigen::Index n = g.size();
  const Scalar eps = Scalar(n) / (alpha + Scalar(n));

  auto power_at = [&](Scalar log_a, Eigen::Index i) {
    const Scalar x = log_a + eps * std::log(g(i));
    return x > Scalar(0) ? std::expm1(x) / g(i) : Scalar(0);
  };
  auto level_sum = [&](Scalar log_a) {
    Scalar s(0);
    for (Eigen::Index i = 0; i < n; ++i)
      if (g(i) > Scalar(0)) s += power_at(log_a, i);
    return s;
  };
  Scalar lo = std::numeric_limits<Scalar>::infinity();
  Scalar hi = -std::numeric_limits<Scalar>::infinity();
  for (Eigen::Index i = 0; i < n; ++i) {
    if (!(g(i) > Scalar(0))) continue;
    const Scalar lg = std::log(g(i));
    lo = std::min(lo, -eps * lg);
    hi = std::max(hi, std::log1p(total_power * g(i)) - eps * lg);
  }
  Scalar log_a = detail::bisect_increasing(level_sum, lo, hi, total_power);

  std::vector<char> active(n);
  for (Eigen::Index i = 0; i < n; ++i)
    active[i] = g(i) > Scalar(0) && log_a + eps * std::log(g(i)) > Scalar(0);
  for (;;) {
    Scalar inv_sum(0);
    Scalar weight_sum(0);
    int count = 0;
    for (Eigen::Index i = 0; i < n; ++i)
      if (active[i]) {
        inv_sum += Scalar(1) / g(i);
        weight_sum += std::exp((eps - Scalar(1)) * std::log(g(i)));
        ++count;
      }
    if (count == 0) throw std::logic_error("effective_power_allocation: empty active set");
    log_a = std::log(total_power + inv_sum) - std::log(weight_sum);
    bool changed = false;
    for (Eigen::Index i = 0; i < n; ++i)
      if (active[i] && log_a + eps * std::log(g(i)) < Scalar(0)) {
        active[i] = 0;
        changed = true;
      }
    if (!changed) break;
  }

  PowerPolicy<Scalar> out;
  out.powers = Vector<Scalar>::Zero(n);
  for (Eigen::Index i = 0; i < n; ++i)
    if (active[i]) out.powers(i) = power_at(log_a, i);
  if (!out.powers.allFinite() || !(out.powers.sum() > Scalar(0)))
    throw std::domain_error("effective_power_allocation: no positive-power solution");
  out.log_multiplier = -log_a / eps;
  out.multiplier = std::exp(out.log_multiplier);
  out.regime = Regime::EffectiveCapacity;
  out.alpha = alpha;
  return out;
}

/// Per-subcarrier rates log2(1 + g_i p_i).
template <typename DerivedG, typename DerivedP>
Vector<typename DerivedG::Scalar> subcarrier_rates(const Eigen::MatrixBase<DerivedG>& g_hat,
                                                   const Eigen::MatrixBase<DerivedP>& powers) {
  using Scalar = typename DerivedG::Scalar;
  return (g_hat.array() * powers.array()).log1p() / std::log(Scalar(2));
}

template <typename DerivedG, typename DerivedP>
typename DerivedG::Scalar capacity(const Eigen::MatrixBase<DerivedG>& g_hat,
                                   const Eigen::MatrixBase<DerivedP>& powers) {
  return subcarrier_rates(g_hat, powers).sum();
}

template <typename Derived>
typename Derived::Scalar capacity(const Eigen::MatrixBase<Derived>& g_hat,
                                  const PowerPolicy<typename Derived::Scalar>& policy) {
  return capacity(g_hat, policy.powers);
}

}  // namespace skg
