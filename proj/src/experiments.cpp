// SPDX-License-Identifier: Apache-2.0
#include "skg/experiments.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <sstream>
#include <stdexcept>

#include "skg/ae_skg.hpp"
#include "skg/channel_model.hpp"
#include "skg/parallel.hpp"
#include "skg/power_allocation.hpp"
#include "skg/puf_auth.hpp"
#include "skg/rate_metrics.hpp"
#include "skg/rng.hpp"

namespace skg {

std::vector<double> parse_grid(const std::string& text) {
  std::vector<double> out;
  const auto first = text.find(':');
  if (first == std::string::npos) {
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (item.empty()) continue;
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument("bad grid value: " + item);
    }
    if (out.empty()) throw std::invalid_argument("empty grid");
    return out;
  }
  const auto second = text.find(':', first + 1);
  if (second == std::string::npos) throw std::invalid_argument("grid must be a:b:Klog, a:b:Klin or a list");
  const double a = std::stod(text.substr(0, first));
  const double b = std::stod(text.substr(first + 1, second - first - 1));
  std::string rest = text.substr(second + 1);
  bool log_spaced = true;
  if (rest.size() > 3 && rest.compare(rest.size() - 3, 3, "log") == 0) {
    rest.resize(rest.size() - 3);
  } else if (rest.size() > 3 && rest.compare(rest.size() - 3, 3, "lin") == 0) {
    rest.resize(rest.size() - 3);
    log_spaced = false;
  } else {
    throw std::invalid_argument("grid count must end in 'log' or 'lin'");
  }
  const int k = std::stoi(rest);
  if (k < 1) throw std::invalid_argument("grid needs at least one point");
  if (log_spaced && !(a > 0.0 && b > 0.0)) throw std::invalid_argument("log grid needs positive endpoints");
  if (k == 1) return {a};
  for (int i = 0; i < k; ++i) {
    const double f = static_cast<double>(i) / (k - 1);
    if (i == 0)
      out.push_back(a);
    else if (i == k - 1)
      out.push_back(b);
    else if (log_spaced)
      out.push_back(std::pow(10.0, std::log10(a) + f * (std::log10(b) - std::log10(a))));
    else
      out.push_back(a + f * (b - a));
  }
  return out;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  for (double v : parse_grid(text)) {
    if (v != std::floor(v)) throw std::invalid_argument("expected integers: " + text);
    out.push_back(static_cast<int>(v));
  }
  return out;
}

void ExperimentConfig::validate() const {
  if (n_subcarriers.empty() || snr_db.empty() || kappa.empty() || beta.empty() || theta.empty() || sigma_e2.empty())
    throw std::invalid_argument("experiment grids must be non-empty");
  for (int n : n_subcarriers)
    if (n < 1) throw std::invalid_argument("n must be >= 1");
  for (double k : kappa)
    if (!(k > 0.0)) throw std::invalid_argument("kappa must be > 0");
  for (double b : beta)
    if (!(b > 0.0)) throw std::invalid_argument("beta must be > 0");
  for (double t : theta)
    if (!(t >= 0.0)) throw std::invalid_argument("theta must be >= 0");
  for (double s : sigma_e2)
    if (!(s >= 0.0)) throw std::invalid_argument("sigma_e2 must be >= 0");
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  if (batches < 1) throw std::invalid_argument("batches must be >= 1");
  if (batches > trials) throw std::invalid_argument("batches must not exceed trials");
  if (!(dp_resolution > 0.0)) throw std::invalid_argument("dp_resolution must be > 0");
  if (!(gain_variance > 0.0)) throw std::invalid_argument("gain_variance must be > 0");
}

namespace {

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

struct Stat {
  double value = 0.0;
  double se = 0.0;
};

// Batch-means standard error of a statistic computed on contiguous trial
// blocks; the point estimate uses all trials.
template <typename F>
Stat batched(int trials, int batches, F&& statistic) {
  Stat s;
  s.value = statistic(0, trials);
  const int b = std::min(batches, trials);
  if (b < 2) return s;
  std::vector<double> values(b);
  for (int i = 0; i < b; ++i) {
    const int lo = static_cast<int>(static_cast<long long>(i) * trials / b);
    const int hi = static_cast<int>(static_cast<long long>(i + 1) * trials / b);
    values[i] = statistic(lo, hi);
  }
  double mean = 0.0;
  for (double v : values) mean += v;
  mean /= b;
  double var = 0.0;
  for (double v : values) var += (v - mean) * (v - mean);
  var /= (b - 1);
  s.se = std::sqrt(var / b);
  return s;
}

double sum_range(const std::vector<double>& x, int lo, int hi, std::size_t stride = 1, std::size_t offset = 0) {
  double s = 0.0;
  for (int t = lo; t < hi; ++t) s += x[static_cast<std::size_t>(t) * stride + offset];
  return s;
}

struct LongTermPoint {
  int n;
  double snr_db;
  double sigma_e2;
  double kappa;
  double beta;
  double mean_capacity;
  Stat eta_greedy;
  Stat eta_dp;
  Stat eta_sequential;
  long m_frames;
  long l_frames;
  double mean_gap;
  Stat d_greedy;
  Stat d_dp;
};

double skg_rate_unordered(int n, double pilot_power, double gain_variance) {
  const VectorXd v = VectorXd::Constant(n, gain_variance);
  std::vector<int> all(n);
  for (int i = 0; i < n; ++i) all[i] = i;
  return skg_rate(pilot_power, v, std::span<const int>(all));
}

std::vector<LongTermPoint> long_term_points(const ExperimentConfig& cfg) {
  cfg.validate();
  std::vector<LongTermPoint> points;
  const int trials = cfg.trials;
  const std::size_t combos = cfg.kappa.size() * cfg.beta.size();
  double min_kb = std::numeric_limits<double>::infinity();
  for (double k : cfg.kappa)
    for (double b : cfg.beta) min_kb = std::min(min_kb, k * b);

  for (int n : cfg.n_subcarriers) {
    for (double snr : cfg.snr_db) {
      for (double se2 : cfg.sigma_e2) {
        const double p = db_to_linear(snr);
        const ChannelConfig ch(n, p, cfg.gain_variance, se2, cfg.seed);
        std::vector<double> cap(trials);
        // Per trial and (kappa, beta): greedy rate, knapsack rate, |D| of each.
        std::vector<double> g_rate(trials * combos), dp_rate(trials * combos);
        std::vector<double> g_size(trials * combos), dp_size(trials * combos);
        parallel_for(trials, cfg.threads, [&](std::size_t t) {
          const auto real = sample_channel(ch, t);
          const auto policy = waterfilling(real.g_hat, n * p);
          const VectorXd rates = subcarrier_rates(real.g_hat, policy.powers);
          const double c = rates.sum();
          cap[t] = c;
          const SubsetSumTable table(rates, cfg.dp_resolution, c / (1.0 + min_kb));
          for (std::size_t ki = 0; ki < cfg.kappa.size(); ++ki) {
            for (std::size_t bi = 0; bi < cfg.beta.size(); ++bi) {
              const std::size_t idx = t * combos + ki * cfg.beta.size() + bi;
              const double budget = knapsack_budget(c, {cfg.kappa[ki], cfg.beta[bi]});
              const auto g = solve_greedy(rates, budget);
              const auto d = table.best_within(budget);
              g_rate[idx] = g.achieved;
              dp_rate[idx] = d.achieved;
              g_size[idx] = static_cast<double>(g.data_set.size());
              dp_size[idx] = static_cast<double>(d.data_set.size());
            }
          }
        });

        const double c_skg = skg_rate_unordered(n, p, cfg.gain_variance);
        for (std::size_t ki = 0; ki < cfg.kappa.size(); ++ki) {
          for (std::size_t bi = 0; bi < cfg.beta.size(); ++bi) {
            const std::size_t off = ki * cfg.beta.size() + bi;
            const SecurityParams sp{cfg.kappa[ki], cfg.beta[bi]};
            LongTermPoint pt{};
            pt.n = n;
            pt.snr_db = snr;
            pt.sigma_e2 = se2;
            pt.kappa = sp.kappa;
            pt.beta = sp.beta;
            pt.mean_capacity = sum_range(cap, 0, trials) / trials;
            pt.eta_greedy = batched(trials, cfg.batches, [&](int lo, int hi) {
              return sum_range(g_rate, lo, hi, combos, off) / sum_range(cap, lo, hi);
            });
            pt.eta_dp = batched(trials, cfg.batches, [&](int lo, int hi) {
              return sum_range(dp_rate, lo, hi, combos, off) / sum_range(cap, lo, hi);
            });
            pt.eta_sequential = batched(trials, cfg.batches, [&](int lo, int hi) {
              const double ec = sum_range(cap, lo, hi) / (hi - lo);
              return sequential_accounting(c_skg, ec, ec, sp).eta;
            });
            const auto acct = sequential_accounting(c_skg, pt.mean_capacity, pt.mean_capacity, sp);
            pt.m_frames = acct.m_frames;
            pt.l_frames = acct.l_frames;
            double gap = 0.0;
            for (int t = 0; t < trials; ++t) {
              const double dp = dp_rate[t * combos + off];
              const double g = g_rate[t * combos + off];
              gap += dp > 0.0 ? (dp - g) / dp : 0.0;
            }
            pt.mean_gap = gap / trials;
            pt.d_greedy = batched(trials, cfg.batches, [&](int lo, int hi) {
              return sum_range(g_size, lo, hi, combos, off) / (hi - lo);
            });
            pt.d_dp = batched(trials, cfg.batches, [&](int lo, int hi) {
              return sum_range(dp_size, lo, hi, combos, off) / (hi - lo);
            });
            points.push_back(pt);
          }
        }
      }
    }
  }
  return points;
}

}  // namespace

CsvTable run_efficiency(const ExperimentConfig& cfg) {
  CsvTable table("efficiency", 1,
                 {"n", "snr_db", "sigma_e2", "kappa", "beta", "trials", "mean_capacity", "eta_parallel_greedy",
                  "se_parallel_greedy", "eta_parallel_dp", "se_parallel_dp", "eta_sequential", "se_sequential",
                  "m_frames", "l_frames", "mean_gap_greedy_dp"});
  for (const auto& p : long_term_points(cfg)) {
    table.add_row({static_cast<long long>(p.n), p.snr_db, p.sigma_e2, p.kappa, p.beta,
                   static_cast<long long>(cfg.trials), p.mean_capacity, p.eta_greedy.value, p.eta_greedy.se,
                   p.eta_dp.value, p.eta_dp.se, p.eta_sequential.value, p.eta_sequential.se,
                   static_cast<long long>(p.m_frames), static_cast<long long>(p.l_frames), p.mean_gap});
  }
  return table;
}

CsvTable run_set_size(const ExperimentConfig& cfg) {
  CsvTable table("set_size", 1,
                 {"n", "snr_db", "sigma_e2", "kappa", "beta", "trials", "mean_d_greedy", "se_d_greedy", "mean_d_dp",
                  "se_d_dp", "eta_parallel_greedy", "eta_parallel_dp", "eta_sequential"});
  for (const auto& p : long_term_points(cfg)) {
    table.add_row({static_cast<long long>(p.n), p.snr_db, p.sigma_e2, p.kappa, p.beta,
                   static_cast<long long>(cfg.trials), p.d_greedy.value, p.d_greedy.se, p.d_dp.value, p.d_dp.se,
                   p.eta_greedy.value, p.eta_dp.value, p.eta_sequential.value});
  }
  return table;
}

namespace {

struct EffectiveEval {
  double parallel_greedy = 0.0;
  double parallel_dp = 0.0;
  double sequential = 0.0;
  double optimal = 0.0;
  int d_greedy = 0;
  int d_dp = 0;
  long m_frames = 0;
  long l_frames = 0;
};

EffectiveEval evaluate_effective(const EffectiveRatePool& pool, const SecurityParams& sp, double c_skg,
                                 const ExperimentConfig& cfg, bool with_dp) {
  EffectiveEval e;
  const int n = pool.n_ranks();
  const auto g = solve_greedy_effective(pool, sp, cfg.parallel_frame);
  e.parallel_greedy = g.achieved;
  e.d_greedy = static_cast<int>(g.data_set.size());
  if (with_dp && cfg.parallel_frame == ParallelFrame::FullBand) {
    const auto d = solve_dp_effective(pool, sp, cfg.dp_resolution);
    e.parallel_dp = d.achieved;
    e.d_dp = static_cast<int>(d.data_set.size());
  } else {
    e.parallel_dp = std::numeric_limits<double>::quiet_NaN();
    e.d_dp = -1;
  }
  const double ec = pool.mean_capacity();
  const auto acct = sequential_accounting(c_skg, ec, ec, sp);
  e.m_frames = acct.m_frames;
  e.l_frames = acct.l_frames;
  e.sequential = acct.l_frames == 0 ? 0.0 : pool.rate_of_all(sequential_equivalent_frames(n, acct));
  e.optimal = pool.rate_of_all(n);
  return e;
}

}  // namespace

CsvTable run_effective_rate(const ExperimentConfig& cfg) {
  cfg.validate();
  CsvTable table("effective_rate", 1,
                 {"n", "snr_db", "sigma_e2", "kappa", "theta", "alpha", "beta", "trials", "parallel_frame",
                  "ec_optimal", "ec_parallel_greedy", "se_parallel_greedy", "ec_parallel_dp", "ec_sequential",
                  "se_sequential", "diff_greedy_sequential", "se_diff_greedy_sequential", "d_greedy", "d_dp",
                  "m_frames", "l_frames"});
  const int trials = cfg.trials;
  const char* frame_name = cfg.parallel_frame == ParallelFrame::FullBand ? "full" : "data";
  for (int n : cfg.n_subcarriers) {
    for (double snr : cfg.snr_db) {
      for (double se2 : cfg.sigma_e2) {
        const double p = db_to_linear(snr);
        const ChannelConfig ch(n, p, cfg.gain_variance, se2, cfg.seed);
        MatrixXd gains(trials, n);
        parallel_for(trials, cfg.threads, [&](std::size_t t) {
          gains.row(static_cast<Eigen::Index>(t)) = sample_channel(ch, t).g_hat.transpose();
        });
        const double c_skg = skg_rate_unordered(n, p, cfg.gain_variance);
        for (double theta : cfg.theta) {
          const double alpha = DelayConfig{theta, cfg.frame_duration_bandwidth}.alpha();
          MatrixXd rates(trials, n);
          parallel_for(trials, cfg.threads, [&](std::size_t t) {
            const auto ti = static_cast<Eigen::Index>(t);
            const VectorXd g = gains.row(ti).transpose();
            const auto policy = alpha == 0.0 ? waterfilling(g, n * p) : effective_power_allocation(g, n * p, alpha);
            rates.row(ti) = subcarrier_rates(g, policy.powers).transpose();
          });
          const EffectiveRatePool pool(rates, alpha);
          const int b = std::min(cfg.batches, trials);
          std::vector<EffectiveRatePool> batch_pools;
          if (b >= 2) {
            for (int i = 0; i < b; ++i) {
              const int lo = static_cast<int>(static_cast<long long>(i) * trials / b);
              const int hi = static_cast<int>(static_cast<long long>(i + 1) * trials / b);
              batch_pools.emplace_back(rates.middleRows(lo, hi - lo), alpha);
            }
          }
          for (double kappa : cfg.kappa) {
            for (double beta : cfg.beta) {
              const SecurityParams sp{kappa, beta};
              const auto full = evaluate_effective(pool, sp, c_skg, cfg, true);
              std::vector<EffectiveEval> per_batch(batch_pools.size());
              parallel_for(batch_pools.size(), cfg.threads, [&](std::size_t i) {
                per_batch[i] = evaluate_effective(batch_pools[i], sp, c_skg, cfg, false);
              });
              auto se_of = [&](auto&& field) {
                if (per_batch.size() < 2) return 0.0;
                double mean = 0.0;
                for (const auto& e : per_batch) mean += field(e);
                mean /= static_cast<double>(per_batch.size());
                double var = 0.0;
                for (const auto& e : per_batch) var += (field(e) - mean) * (field(e) - mean);
                var /= static_cast<double>(per_batch.size() - 1);
                return std::sqrt(var / static_cast<double>(per_batch.size()));
              };
              table.add_row({static_cast<long long>(n), snr, se2, kappa, theta, alpha, beta,
                             static_cast<long long>(trials), std::string(frame_name), full.optimal,
                             full.parallel_greedy, se_of([](const EffectiveEval& e) { return e.parallel_greedy; }),
                             full.parallel_dp, full.sequential,
                             se_of([](const EffectiveEval& e) { return e.sequential; }),
                             full.parallel_greedy - full.sequential,
                             se_of([](const EffectiveEval& e) { return e.parallel_greedy - e.sequential; }),
                             static_cast<long long>(full.d_greedy), static_cast<long long>(full.d_dp),
                             static_cast<long long>(full.m_frames), static_cast<long long>(full.l_frames)});
            }
          }
        }
      }
    }
  }
  return table;
}

int run_protocol_demo(const ProtocolDemoOptions& opts, std::ostream& out) {
  const double p = db_to_linear(opts.snr_db);
  const ChannelConfig ch(opts.n_subcarriers, p, 1.0, 0.0, opts.seed);
  const SkgConfig cfg = SkgConfig::for_subcarriers(opts.n_subcarriers, opts.key_len_bits);
  out << "protocol_demo: N=" << opts.n_subcarriers << " pilot_snr_db=" << opts.snr_db << " code=" << cfg.code.name()
      << " key_bits=" << cfg.key_len_bits << " max_key_bits=" << cfg.budget.max_key_bits() << '\n';

  // Step 1: PUF authentication of the node by the verifier.
  const PufDevice device("node-A", splitmix64(opts.seed ^ 0xA11CEULL), opts.puf_response_len, opts.puf_noise_sigma);
  PufVerifier verifier(SkgConfig::for_subcarriers(opts.puf_response_len, 32, 2.0), splitmix64(opts.seed + 1));
  verifier.enroll(device, opts.exhaust_crps ? 1 : opts.enrolled_crps);
  auto device_rng = make_stream(opts.seed, 0, 0x9F);
  {
    const auto challenge = verifier.issue_challenge(device.id());
    const bool ok = verifier.verify(challenge, device.measure(challenge.challenge, device_rng));
    out << "puf_auth: device=" << device.id() << " result=" << (ok ? "accepted" : "rejected")
        << " crps_left=" << verifier.remaining(device.id()) << '\n';
    if (!ok) {
      out << "authentication failure\n";
      return 1;
    }
  }

  // Step 2: key generation with the first data packet sealed alongside.
  const auto block0 = sample_channel(ch, 0);
  Sealer alice(block0.obs_alice, cfg);
  const std::string text = "telemetry frame 0001";
  const Bytes message(text.begin(), text.end());
  Bytes wire = alice.seal(message).encode();
  out << "session: syndrome_bits=" << alice.offer().syndrome.size() << " wire_bytes=" << wire.size() << '\n';
  if (opts.tamper_bit) {
    const long k = *opts.tamper_bit;
    if (k < 0 || static_cast<std::size_t>(k) >= wire.size() * 8) {
      out << "error: --tamper-bit out of range [0, " << wire.size() * 8 << ")\n";
      return 2;
    }
    wire[static_cast<std::size_t>(k / 8)] ^= static_cast<std::uint8_t>(0x80u >> (k % 8));
    out << "tamper: flipped bit " << k << '\n';
  }

  const auto ext = ExtendedCiphertext::decode(wire);
  std::optional<KeyMaterial> bob_key;
  OpenResult result = OpenError::Malformed;
  if (ext) {
    if (const auto syndrome = decode_syndrome(ext->syndrome)) {
      bob_key = skg_receive(block0.obs_bob, *syndrome, cfg);
      result = bob_key ? open_with_key(*bob_key, 0, *ext, {}) : OpenResult(OpenError::ReconciliationFailure);
    }
  }
  if (const auto* err = std::get_if<OpenError>(&result)) {
    out << "integrity failure";
    if (*err != OpenError::IntegrityFailure) out << " (" << to_string(*err) << ")";
    out << '\n';
    return 1;
  }
  const Bytes& plain = std::get<Bytes>(result);
  out << "open: plaintext=\"" << std::string(plain.begin(), plain.end())
      << "\" keys_match=" << (*bob_key == alice.offer().key ? "yes" : "no") << '\n';

  const auto eve = open(block0.obs_eve, cfg, *ext);
  out << "eavesdropper: "
      << (std::holds_alternative<OpenError>(eve) ? to_string(std::get<OpenError>(eve)) : "decrypted") << '\n';

  ResumptionState alice_state = derive_resumption_state(alice.offer().key, 2 * opts.n_subcarriers);
  std::map<Bytes, ResumptionState> bob_cache;
  {
    ResumptionState s = derive_resumption_state(*bob_key, 2 * opts.n_subcarriers);
    bob_cache.emplace(s.lookup_id, std::move(s));
  }

  if (opts.exhaust_crps) {
    try {
      verifier.issue_challenge(device.id());
      out << "puf_auth: unexpected fresh challenge\n";
      return 1;
    } catch (const ProtocolError& e) {
      out << "puf_auth: " << e.what() << "; falling back to 0-RTT resumption\n";
    }
  }

  // Step 3: 0-RTT resumption on the next coherence block.
  const auto block1 = sample_channel(ch, 1);
  Sealer alice2(block1.obs_alice, cfg, alice_state);
  const std::string text2 = "telemetry frame 0002";
  ResumptionMessage msg{alice_state.lookup_id,
                        alice2.seal(Bytes(text2.begin(), text2.end()), alice_state.lookup_id)};
  const Bytes wire2 = msg.encode();
  const auto received = ResumptionMessage::decode(wire2);
  auto it = received ? bob_cache.find(received->lookup_id) : bob_cache.end();
  if (it == bob_cache.end()) {
    out << "resumption: unknown lookup id\n";
    return 1;
  }
  const auto r2 = open_resumption(block1.obs_bob, cfg, it->second, received->body, received->lookup_id);
  if (const auto* err = std::get_if<OpenError>(&r2)) {
    out << "resumption: " << to_string(*err) << '\n';
    return 1;
  }
  const Bytes& plain2 = std::get<Bytes>(r2);
  out << "resumption: plaintext=\"" << std::string(plain2.begin(), plain2.end()) << "\" wire_bytes=" << wire2.size()
      << '\n';
  try {
    (void)open_resumption(block1.obs_bob, cfg, it->second, received->body, received->lookup_id);
    out << "resumption replay: accepted\n";
    return 1;
  } catch (const ProtocolError& e) {
    out << "resumption replay: rejected (" << e.what() << ")\n";
  }
  return 0;
}

int run_selftest(std::ostream& out) {
  int failures = 0;
  auto check = [&](const char* name, bool ok) {
    out << (ok ? "ok   " : "FAIL ") << name << '\n';
    if (!ok) ++failures;
  };

  const ChannelConfig ch(12, 10.0, 1.0, 0.0, 7);
  const auto real = sample_channel(ch, 0);
  const auto wf = waterfilling(real.g_hat, 120.0);
  check("waterfilling conserves power", std::abs(wf.powers.sum() - 120.0) <= 1e-9 * 120.0);
  const auto ep = effective_power_allocation(real.g_hat, 120.0, 1e6 / std::log(2.0));
  check("effective policy conserves power", std::abs(ep.powers.sum() - 120.0) <= 1e-9 * 120.0);

  const VectorXd rates = subcarrier_rates(real.g_hat, wf.powers);
  const double budget = knapsack_budget(rates.sum(), {2.0, 0.1});
  const auto dp = solve_dp(rates, budget, 1e-6);
  const auto bf = solve_bruteforce(rates, budget);
  const auto g = solve_greedy(rates, budget);
  check("knapsack matches exhaustive search", std::abs(dp.achieved - bf.achieved) <= 12 * 1e-6);
  check("greedy within half of optimum", g.achieved >= 0.5 * bf.achieved && g.achieved <= budget);

  const SkgConfig cfg = SkgConfig::for_subcarriers(64, 64);
  const ChannelConfig quiet(64, db_to_linear(45.0), 1.0, 0.0, 11);
  const auto block = sample_channel(quiet, 0);
  Sealer alice(block.obs_alice, cfg);
  const Bytes msg{1, 2, 3, 4, 5};
  const auto ext = alice.seal(msg);
  const auto opened = open(block.obs_bob, cfg, ext);
  check("seal/open round trip", std::holds_alternative<Bytes>(opened) && std::get<Bytes>(opened) == msg);
  check("eavesdropper rejected", std::holds_alternative<OpenError>(open(block.obs_eve, cfg, ext)));

  out << (failures == 0 ? "selftest passed" : "selftest FAILED") << '\n';
  return failures == 0 ? 0 : 1;
}

}  // namespace skg
