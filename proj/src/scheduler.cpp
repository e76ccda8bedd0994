// SPDX-License-Identifier: Apache-2.0
#include "skg/scheduler.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <stdexcept>

namespace skg {

void SecurityParams::validate() const {
  if (!(kappa > 0.0) || !std::isfinite(kappa)) throw std::invalid_argument("SecurityParams: kappa must be > 0");
  if (!(beta > 0.0) || !std::isfinite(beta)) throw std::invalid_argument("SecurityParams: beta must be > 0");
}

double knapsack_budget(double capacity, const SecurityParams& params) {
  params.validate();
  if (!(capacity >= 0.0)) throw std::invalid_argument("knapsack_budget: capacity must be >= 0");
  return capacity / (1.0 + params.kappa * params.beta);
}

std::int64_t grid_cells_up(double value, double resolution) {
  auto c = static_cast<std::int64_t>(std::ceil(value / resolution));
  while (c > 0 && static_cast<double>(c - 1) * resolution >= value) --c;
  while (static_cast<double>(c) * resolution < value) ++c;
  return c;
}

std::int64_t grid_cells_down(double value, double resolution) {
  auto c = static_cast<std::int64_t>(std::floor(value / resolution));
  while (static_cast<double>(c + 1) * resolution <= value) ++c;
  while (c > 0 && static_cast<double>(c) * resolution > value) --c;
  return c;
}

namespace {

void check_rates(const VectorXd& rates) {
  if (rates.size() == 0) throw std::invalid_argument("scheduler: empty rate vector");
  if (!rates.allFinite() || (rates.array() < 0.0).any())
    throw std::invalid_argument("scheduler: rates must be finite and >= 0");
}

void check_budget(double budget) {
  if (!(budget >= 0.0) || !std::isfinite(budget)) throw std::invalid_argument("scheduler: budget must be >= 0");
}

Allocation finish(const VectorXd& rates, double budget, std::vector<int> data_set) {
  std::sort(data_set.begin(), data_set.end());
  Allocation a;
  a.rates = rates;
  a.budget = budget;
  std::vector<char> in(rates.size(), 0);
  for (int i : data_set) {
    in[i] = 1;
    a.achieved += rates(i);
  }
  for (int i = 0; i < rates.size(); ++i)
    if (!in[i]) a.recon_set.push_back(i);
  a.data_set = std::move(data_set);
  if (a.data_set.empty()) {
    double min_positive = std::numeric_limits<double>::infinity();
    for (int i = 0; i < rates.size(); ++i)
      if (rates(i) > 0.0) min_positive = std::min(min_positive, rates(i));
    a.infeasible = !(budget >= min_positive);
  }
  return a;
}

}  // namespace

SubsetSumTable::SubsetSumTable(const VectorXd& rates, double resolution, double max_budget)
    : rates_(rates), resolution_(resolution) {
  check_rates(rates);
  check_budget(max_budget);
  if (!(resolution > 0.0)) throw std::invalid_argument("SubsetSumTable: resolution must be > 0");
  if (rates.size() >= std::numeric_limits<std::uint16_t>::max())
    throw std::invalid_argument("SubsetSumTable: too many items");
  capacity_cells_ = grid_cells_down(max_budget, resolution);
  weights_.resize(rates.size());
  int n_items = 0;
  for (int i = 0; i < rates.size(); ++i) {
    weights_[i] = rates(i) > 0.0 ? grid_cells_up(rates(i), resolution) : 0;
    if (weights_[i] > 0 && weights_[i] <= capacity_cells_) ++n_items;
  }
  // The sparse list holds at most 2^n sums; the dense bitset costs one bit per cell.
  sparse_ = n_items < 40 && (std::int64_t{1} << n_items) < (capacity_cells_ + 1) / 64;
  if (sparse_)
    build_sparse();
  else
    build_dense();
}

void SubsetSumTable::build_dense() {
  const std::int64_t cells = capacity_cells_ + 1;
  const std::int64_t words = (cells + 63) / 64;
  reach_.assign(words, 0);
  first_.assign(cells, 0);
  reach_[0] = 1;
  const std::uint64_t tail_mask = (cells % 64 == 0) ? ~0ULL : ((1ULL << (cells % 64)) - 1);

  for (int k = 0; k < static_cast<int>(weights_.size()); ++k) {
    const std::int64_t w = weights_[k];
    if (w <= 0 || w > capacity_cells_) continue;
    const std::int64_t ws = w / 64;
    const int bs = static_cast<int>(w % 64);
    // High to low so that every source word read is still the pre-item state.
    for (std::int64_t i = words - 1; i >= ws; --i) {
      std::uint64_t src = reach_[i - ws] << bs;
      if (bs != 0 && i - ws - 1 >= 0) src |= reach_[i - ws - 1] >> (64 - bs);
      if (i == words - 1) src &= tail_mask;
      std::uint64_t fresh = src & ~reach_[i];
      reach_[i] |= fresh;
      while (fresh != 0) {
        const int b = std::countr_zero(fresh);
        first_[i * 64 + b] = static_cast<std::uint16_t>(k + 1);
        fresh &= fresh - 1;
      }
    }
  }
}

void SubsetSumTable::build_sparse() {
  arena_.clear();
  arena_.push_back({0, -1, -1});
  frontier_.assign(1, 0);
  std::vector<std::int32_t> next;
  for (int k = 0; k < static_cast<int>(weights_.size()); ++k) {
    const std::int64_t w = weights_[k];
    if (w <= 0 || w > capacity_cells_) continue;
    next.clear();
    next.reserve(frontier_.size() * 2);
    std::size_t a = 0;
    std::size_t b = 0;
    while (a < frontier_.size() || b < frontier_.size()) {
      const std::int64_t sa =
          a < frontier_.size() ? arena_[frontier_[a]].sum : std::numeric_limits<std::int64_t>::max();
      std::int64_t sb = std::numeric_limits<std::int64_t>::max();
      if (b < frontier_.size()) {
        sb = arena_[frontier_[b]].sum + w;
        if (sb > capacity_cells_) {
          b = frontier_.size();
          sb = std::numeric_limits<std::int64_t>::max();
        }
      }
      if (sa == std::numeric_limits<std::int64_t>::max() && sb == sa) break;
      if (sa <= sb) {
        next.push_back(frontier_[a++]);
        if (sa == sb) ++b;
      } else {
        arena_.push_back({sb, frontier_[b], k});
        next.push_back(static_cast<std::int32_t>(arena_.size() - 1));
        ++b;
      }
    }
    frontier_.swap(next);
  }
}

std::vector<int> SubsetSumTable::reconstruct(std::int64_t cell) const {
  std::vector<int> items;
  if (sparse_) {
    for (std::int32_t s = static_cast<std::int32_t>(cell); s >= 0 && arena_[s].item >= 0; s = arena_[s].prev)
      items.push_back(arena_[s].item);
    return items;
  }
  while (cell > 0) {
    const int k = first_[cell] - 1;
    if (k < 0) throw std::logic_error("SubsetSumTable: broken back-pointer");
    items.push_back(k);
    cell -= weights_[k];
  }
  return items;
}

Allocation SubsetSumTable::best_within(double budget) const {
  check_budget(budget);
  const std::int64_t limit = std::min(grid_cells_down(budget, resolution_), capacity_cells_);
  std::vector<int> items;
  if (sparse_) {
    // Largest reachable sum <= limit; frontier_ is sorted by sum.
    auto it = std::upper_bound(frontier_.begin(), frontier_.end(), limit,
                               [&](std::int64_t v, std::int32_t s) { return v < arena_[s].sum; });
    if (it != frontier_.begin()) items = reconstruct(*(it - 1));
  } else {
    for (std::int64_t i = limit / 64; i >= 0; --i) {
      std::uint64_t word = reach_[i];
      if (i == limit / 64) {
        const int top = static_cast<int>(limit % 64);
        if (top < 63) word &= (1ULL << (top + 1)) - 1;
      }
      if (word != 0) {
        items = reconstruct(i * 64 + 63 - std::countl_zero(word));
        break;
      }
    }
  }
  return finish(rates_, budget, std::move(items));
}

Allocation solve_dp(const VectorXd& rates, double budget, double resolution) {
  return SubsetSumTable(rates, resolution, budget).best_within(budget);
}

Allocation solve_greedy(const VectorXd& rates, double budget) {
  check_rates(rates);
  check_budget(budget);
  std::vector<int> data;
  double used = 0.0;
  for (int i = 0; i < rates.size(); ++i) {
    if (rates(i) > 0.0 && used + rates(i) <= budget) {
      used += rates(i);
      data.push_back(i);
    }
  }
  return finish(rates, budget, std::move(data));
}

Allocation solve_bruteforce(const VectorXd& rates, double budget) {
  check_rates(rates);
  check_budget(budget);
  if (rates.size() > 24) throw std::invalid_argument("oracle size limit");
  const int n = static_cast<int>(rates.size());
  std::uint32_t best_mask = 0;
  double best = 0.0;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    double sum = 0.0;
    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      if (mask & (1u << i)) {
        if (rates(i) <= 0.0) ok = false;
        sum += rates(i);
      }
    if (ok && sum <= budget && sum > best) {
      best = sum;
      best_mask = mask;
    }
  }
  std::vector<int> data;
  for (int i = 0; i < n; ++i)
    if (best_mask & (1u << i)) data.push_back(i);
  return finish(rates, budget, std::move(data));
}

Allocation solve_greedy_effective(const EffectiveRatePool& pool, const SecurityParams& params,
                                  ParallelFrame frame) {
  params.validate();
  const int n = pool.n_ranks();
  const double kb = params.kappa * params.beta;
  const VectorXd terms = pool.rank_terms(static_cast<double>(n));

  // Per-rank terms depend only on the frame size, so cache them per size.
  std::map<int, VectorXd> by_frame;
  auto set_rate = [&](const std::vector<int>& set, int frame_size) {
    auto it = by_frame.find(frame_size);
    if (it == by_frame.end()) it = by_frame.emplace(frame_size, pool.rank_terms(frame_size)).first;
    double sum = 0.0;
    for (int r : set) sum += it->second(r);
    return sum;
  };

  std::vector<int> data;
  std::vector<int> candidate;
  std::vector<int> complement;
  for (int i = 0; i < n; ++i) {
    if (!(terms(i) > 0.0)) continue;
    candidate = data;
    candidate.push_back(i);
    std::sort(candidate.begin(), candidate.end());
    complement.clear();
    for (int j = 0, c = 0; j < n; ++j) {
      if (c < static_cast<int>(candidate.size()) && candidate[c] == j)
        ++c;
      else
        complement.push_back(j);
    }
    if (complement.empty()) continue;
    double lhs = 0.0;
    double rhs = 0.0;
    if (frame == ParallelFrame::FullBand) {
      lhs = set_rate(candidate, n);
      rhs = set_rate(complement, n);
    } else {
      const int fd = static_cast<int>(candidate.size());
      const int fr = static_cast<int>(complement.size());
      lhs = fd * set_rate(candidate, fd);
      rhs = fr * set_rate(complement, fr);
    }
    if (kb * lhs <= rhs) data = candidate;
  }

  Allocation a = finish(terms, 0.0, data);
  if (frame == ParallelFrame::FullBand) {
    a.budget = terms.sum() / (1.0 + kb);
  } else {
    const int fd = std::max(static_cast<int>(a.data_set.size()), 1);
    const int fr = static_cast<int>(a.recon_set.size());
    a.rates = pool.rank_terms(fd);
    a.achieved = a.data_set.empty() ? 0.0 : set_rate(a.data_set, fd);
    a.budget = fr == 0 ? 0.0 : fr * set_rate(a.recon_set, fr) / (kb * fd);
  }
  a.infeasible = a.data_set.empty();
  return a;
}

Allocation solve_dp_effective(const EffectiveRatePool& pool, const SecurityParams& params,
                              double resolution) {
  params.validate();
  const auto n = static_cast<double>(pool.n_ranks());
  const VectorXd terms = pool.rank_terms(n);
  // Knapsack on per-frame throughputs so the grid resolution is in bits.
  const VectorXd throughput = (terms.array() * n).max(0.0).matrix();
  const double budget = throughput.sum() / (1.0 + params.kappa * params.beta);
  Allocation a = solve_dp(throughput, budget, resolution);
  a.rates = terms;
  a.budget = budget / n;
  a.achieved = 0.0;
  for (int i : a.data_set) a.achieved += terms(i);
  return a;
}

}  // namespace skg
