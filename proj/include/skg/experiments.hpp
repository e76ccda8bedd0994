// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "skg/csv.hpp"
#include "skg/scheduler.hpp"

namespace skg {

/// Parses "a:b:Klog" (K log-spaced points), "a:b:Klin" (K linear points) or
/// a comma-separated list.
std::vector<double> parse_grid(const std::string& text);
std::vector<int> parse_int_list(const std::string& text);

struct ExperimentConfig {
  std::vector<int> n_subcarriers{12};
  std::vector<double> snr_db{10.0};
  std::vector<double> kappa{2.0};
  std::vector<double> beta = parse_grid("1e-4:1:25log");
  std::vector<double> theta{1e-4, 100.0};
  std::vector<double> sigma_e2{0.0};
  double gain_variance = 1.0;
  double frame_duration_bandwidth = 1.0;
  int trials = 1000;
  std::uint64_t seed = 42;
  int threads = 0;
  int batches = 20;
  double dp_resolution = kDefaultResolution;
  ParallelFrame parallel_frame = ParallelFrame::FullBand;

  void validate() const;
};

/// Long-term regime: parallel (greedy and knapsack) against sequential
/// efficiency for every (N, SNR, sigma_e^2, kappa, beta).
CsvTable run_efficiency(const ExperimentConfig& cfg);

/// Mean data-set size |D| over the same grid.
CsvTable run_set_size(const ExperimentConfig& cfg);

/// Delay-limited regime: effective rates of both schemes per theta.
CsvTable run_effective_rate(const ExperimentConfig& cfg);

struct ProtocolDemoOptions {
  int n_subcarriers = 64;
  double snr_db = 45.0;
  int key_len_bits = 64;
  int puf_response_len = 32;
  double puf_noise_sigma = 0.01;
  int enrolled_crps = 4;
  std::optional<long> tamper_bit;
  bool exhaust_crps = false;
  std::uint64_t seed = 42;
};

/// Authentication, key generation, sealed message and 0-RTT resumption, with
/// a transcript on `out`. Returns the process exit status.
int run_protocol_demo(const ProtocolDemoOptions& opts, std::ostream& out);

/// Quick invariant checks on small instances; returns the exit status.
int run_selftest(std::ostream& out);

}  // namespace skg
