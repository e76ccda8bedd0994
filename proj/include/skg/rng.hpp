// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>

namespace skg {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// Counter-based stream selection: the engine for (seed, domain, index) does
// not depend on how many other streams were drawn before it, so trials can be
// generated in any order or on any thread.
inline std::mt19937_64 make_stream(std::uint64_t master_seed, std::uint64_t index,
                                   std::uint64_t domain = 0) {
  std::uint64_t s = splitmix64(master_seed ^ splitmix64(domain + 0x5EED));
  s = splitmix64(s ^ splitmix64(index));
  return std::mt19937_64(s);
}

// CN(0, variance): real and imaginary parts each N(0, variance / 2).
template <typename Engine>
std::complex<double> complex_normal(Engine& engine, double variance) {
  std::normal_distribution<double> normal;
  const double scale = std::sqrt(variance / 2.0);
  const double re = normal(engine);
  const double im = normal(engine);
  return {scale * re, scale * im};
}

}  // namespace skg
