// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <vector>

#include "skg/effective_pool.hpp"
#include "skg/types.hpp"

namespace skg {

/// kappa: syndrome bits per key bit (code rate kappa/(kappa+1));
/// beta: key bits consumed per data bit.
struct SecurityParams {
  double kappa;
  double beta;

  void validate() const;
};

/// Partition of the ranks into data set D and reconciliation set D-breve.
/// Indices are 0-based ranks into `rates` (0 is the strongest subcarrier).
struct Allocation {
  std::vector<int> data_set;
  std::vector<int> recon_set;
  VectorXd rates;
  double budget = 0.0;
  double achieved = 0.0;
  bool infeasible = false;
};

/// Knapsack budget C / (1 + kappa beta).
double knapsack_budget(double capacity, const SecurityParams& params);

inline constexpr double kDefaultResolution = 1e-4;

/// Exact 0-1 subset-sum dynamic program on the rate grid of `resolution`.
/// Item weights round up and budgets round down to the grid, so every
/// returned set satisfies the real-valued budget. Built once for the largest
/// budget of interest and then queried for any smaller budget.
class SubsetSumTable {
 public:
  SubsetSumTable(const VectorXd& rates, double resolution, double max_budget);

  Allocation best_within(double budget) const;

  double resolution() const { return resolution_; }

 private:
  struct SparseState {
    std::int64_t sum;
    std::int32_t prev;
    std::int32_t item;
  };

  void build_dense();
  void build_sparse();
  std::vector<int> reconstruct(std::int64_t cell) const;

  VectorXd rates_;
  double resolution_;
  std::vector<std::int64_t> weights_;
  std::int64_t capacity_cells_ = 0;
  bool sparse_ = false;
  // Dense representation: reachability bitset and the item that first
  // reached each cell (item index + 1, 0 for the empty sum).
  std::vector<std::uint64_t> reach_;
  std::vector<std::uint16_t> first_;
  // Sparse representation: sorted reachable sums with back-pointers.
  std::vector<SparseState> arena_;
  std::vector<std::int32_t> frontier_;
};

/// Rounds a non-negative rate up (or down) to an integer number of grid cells.
std::int64_t grid_cells_up(double value, double resolution);
std::int64_t grid_cells_down(double value, double resolution);

Allocation solve_dp(const VectorXd& rates, double budget, double resolution = kDefaultResolution);

/// Scan in the given order (descending for the half-optimality guarantee),
/// keeping every item that still fits.
Allocation solve_greedy(const VectorXd& rates, double budget);

/// Exhaustive oracle over all 2^N subsets; refuses N > 24.
Allocation solve_bruteforce(const VectorXd& rates, double budget);

/// How the parallel scheme normalises its data-set effective rate.
enum class ParallelFrame {
  FullBand,         // frame of N subcarriers for both sets
  DataSubcarriers,  // frame of |D| for D and |D-breve| for D-breve
};

/// Greedy partition in the delay-limited regime: ranks join D strongest
/// first while the effective data rate stays within the effective
/// reconciliation rate divided by kappa*beta. `rates` in the result holds the
/// per-rank effective throughputs.
Allocation solve_greedy_effective(const EffectiveRatePool& pool, const SecurityParams& params,
                                  ParallelFrame frame = ParallelFrame::FullBand);

/// Knapsack counterpart of solve_greedy_effective under the full-band frame,
/// where per-rank effective throughputs are additive.
Allocation solve_dp_effective(const EffectiveRatePool& pool, const SecurityParams& params,
                              double resolution = kDefaultResolution);

}  // namespace skg
