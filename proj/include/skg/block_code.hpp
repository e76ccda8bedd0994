// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "skg/gf2.hpp"

namespace skg {

/// Binary linear block code given by a full-rank parity-check matrix, with a
/// syndrome table covering every error pattern of weight <= t. Syndromes
/// outside the table are reported as uncorrectable.
class BlockCode {
 public:
  BlockCode(std::string name, BitMatrix parity_check, int correctable_weight);

  /// Hamming(7,4): kappa = 3/4.
  static BlockCode hamming74();
  /// Extended Hamming(8,4): kappa = 1, corrects one error and flags two.
  static BlockCode extended_hamming84();

  const std::string& name() const { return name_; }
  int n() const { return static_cast<int>(h_.cols()); }
  int k() const { return n() - r(); }
  int r() const { return static_cast<int>(h_.rows()); }
  double kappa() const { return static_cast<double>(r()) / static_cast<double>(k()); }
  const BitMatrix& parity_check() const { return h_; }

  BitVector syndrome(const BitVector& block) const;
  std::optional<BitVector> error_pattern(const BitVector& syndrome) const;

 private:
  std::string name_;
  BitMatrix h_;
  std::vector<std::optional<BitVector>> table_;
};

}  // namespace skg
