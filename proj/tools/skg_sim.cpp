// SPDX-License-Identifier: Apache-2.0
// skg-sim: experiment driver for the pipelined SKG simulator.

#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "skg/experiments.hpp"

namespace {

struct Options {
  std::string n = "12";
  std::string snr_db = "10";
  std::string kappa = "2";
  std::string beta_grid = "1e-4:1:25log";
  std::string theta = "0.0001,100";
  std::string sigma_e2 = "0";
  std::string parallel_frame = "full";
  double gain_variance = 1.0;
  double frame_bandwidth = 1.0;
  int trials = 1000;
  std::uint64_t seed = 42;
  int threads = 0;
  int batches = 20;
  double dp_resolution = skg::kDefaultResolution;
  std::string out;
  std::optional<long> tamper_bit;
  bool exhaust_crps = false;
  int key_bits = 64;
};

skg::ExperimentConfig to_config(const Options& o) {
  skg::ExperimentConfig cfg;
  cfg.n_subcarriers = skg::parse_int_list(o.n);
  cfg.snr_db = skg::parse_grid(o.snr_db);
  cfg.kappa = skg::parse_grid(o.kappa);
  cfg.beta = skg::parse_grid(o.beta_grid);
  cfg.theta = skg::parse_grid(o.theta);
  cfg.sigma_e2 = skg::parse_grid(o.sigma_e2);
  cfg.gain_variance = o.gain_variance;
  cfg.frame_duration_bandwidth = o.frame_bandwidth;
  cfg.trials = o.trials;
  cfg.seed = o.seed;
  cfg.threads = o.threads;
  cfg.batches = o.batches;
  cfg.dp_resolution = o.dp_resolution;
  if (o.parallel_frame == "full")
    cfg.parallel_frame = skg::ParallelFrame::FullBand;
  else if (o.parallel_frame == "data")
    cfg.parallel_frame = skg::ParallelFrame::DataSubcarriers;
  else
    throw std::invalid_argument("--parallel-frame must be 'full' or 'data'");
  cfg.validate();
  return cfg;
}

int emit(const skg::CsvTable& table, const std::string& path) {
  if (path.empty() || path == "-") {
    table.write(std::cout);
    return 0;
  }
  std::ofstream f(path);
  if (!f) {
    std::cerr << "error: cannot open " << path << " for writing\n";
    return 1;
  }
  table.write(f);
  return f.good() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pipelined secret-key generation simulator"};
  app.set_config("--config", "", "Flat key = value file; command-line options take precedence");
  Options o;
  std::string experiment;

  app.add_option("experiment", experiment, "efficiency | set_size | effective_rate | protocol_demo | selftest")
      ->required()
      ->check(CLI::IsMember({"efficiency", "set_size", "effective_rate", "protocol_demo", "selftest"}));
  app.add_option("--n", o.n, "Subcarrier counts, e.g. 12 or 12,64")->capture_default_str()
      ->delimiter(',')
      ->multi_option_policy(CLI::MultiOptionPolicy::Join);
  app.add_option("--snr-db", o.snr_db, "Pilot SNR grid in dB")->capture_default_str()
      ->delimiter(',')
      ->multi_option_policy(CLI::MultiOptionPolicy::Join);
  app.add_option("--kappa", o.kappa, "Syndrome-to-key ratios")->capture_default_str()
      ->delimiter(',')
      ->multi_option_policy(CLI::MultiOptionPolicy::Join);
  app.add_option("--beta-grid", o.beta_grid, "Key-to-data ratios: a:b:Klog, a:b:Klin or a list")
      ->capture_default_str()
      ->delimiter(',')
      ->multi_option_policy(CLI::MultiOptionPolicy::Join);
  app.add_option("--theta", o.theta, "Delay exponents (effective_rate)")->capture_default_str()
      ->delimiter(',')
      ->multi_option_policy(CLI::MultiOptionPolicy::Join);
  app.add_option("--sigma-e2", o.sigma_e2, "Channel estimation error variances")->capture_default_str()
      ->delimiter(',')
      ->multi_option_policy(CLI::MultiOptionPolicy::Join);
  app.add_option("--parallel-frame", o.parallel_frame, "Parallel normalisation in effective_rate: full or data")
      ->capture_default_str();
  app.add_option("--gain-variance", o.gain_variance, "Channel gain variance")->capture_default_str();
  app.add_option("--frame-bandwidth", o.frame_bandwidth, "Frame duration times bandwidth (effective_rate)")
      ->capture_default_str();
  app.add_option("--trials", o.trials, "Monte Carlo trials")->capture_default_str()->check(CLI::PositiveNumber);
  app.add_option("--seed", o.seed, "Master seed")->capture_default_str();
  app.add_option("--threads", o.threads, "Worker threads (0 = all cores)")->capture_default_str();
  app.add_option("--batches", o.batches, "Batches for standard errors")->capture_default_str();
  app.add_option("--dp-resolution", o.dp_resolution, "Knapsack rate grid in bits")->capture_default_str();
  app.add_option("--out", o.out, "Output CSV path (stdout if omitted)");
  app.add_option("--key-bits", o.key_bits, "Session key length (protocol_demo)")->capture_default_str();
  app.add_option("--tamper-bit", o.tamper_bit, "Flip this bit of the extended ciphertext (protocol_demo)");
  app.add_flag("--exhaust-crps", o.exhaust_crps, "Enrol a single CRP and run out of them (protocol_demo)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (experiment == "efficiency") return emit(skg::run_efficiency(to_config(o)), o.out);
    if (experiment == "set_size") return emit(skg::run_set_size(to_config(o)), o.out);
    if (experiment == "effective_rate") return emit(skg::run_effective_rate(to_config(o)), o.out);
    if (experiment == "protocol_demo") {
      skg::ProtocolDemoOptions d;
      // The demo defaults differ from the experiment grids; only explicit values override them.
      if (app.count("--n") > 0) d.n_subcarriers = skg::parse_int_list(o.n).front();
      if (app.count("--snr-db") > 0) d.snr_db = skg::parse_grid(o.snr_db).front();
      d.key_len_bits = o.key_bits;
      d.seed = o.seed;
      d.tamper_bit = o.tamper_bit;
      d.exhaust_crps = o.exhaust_crps;
      return skg::run_protocol_demo(d, std::cout);
    }
    return skg::run_selftest(std::cout);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
