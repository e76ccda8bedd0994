// SPDX-License-Identifier: Apache-2.0
#include "skg/block_code.hpp"

#include <stdexcept>

namespace skg {

namespace {

std::size_t syndrome_index(const BitVector& s) {
  std::size_t idx = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i) idx = (idx << 1) | (s(i) & 1);
  return idx;
}

// Calls f on every length-n pattern of exactly `weight` ones.
template <typename F>
void for_each_pattern(int n, int weight, F&& f) {
  std::vector<int> pos(weight);
  for (int i = 0; i < weight; ++i) pos[i] = i;
  if (weight > n) return;
  for (;;) {
    BitVector e = BitVector::Zero(n);
    for (int p : pos) e(p) = 1;
    f(e);
    int i = weight - 1;
    while (i >= 0 && pos[i] == n - weight + i) --i;
    if (i < 0) return;
    ++pos[i];
    for (int j = i + 1; j < weight; ++j) pos[j] = pos[j - 1] + 1;
  }
}

}  // namespace

BlockCode::BlockCode(std::string name, BitMatrix parity_check, int correctable_weight)
    : name_(std::move(name)), h_(std::move(parity_check)) {
  if (h_.rows() < 1 || h_.cols() <= h_.rows()) throw std::invalid_argument("BlockCode: need 0 < r < n");
  if ((h_.array() > 1).any()) throw std::invalid_argument("BlockCode: entries must be 0 or 1");
  if (h_.rows() > 20) throw std::invalid_argument("BlockCode: syndrome table too large");
  if (gf2_rank(h_) != h_.rows()) throw std::invalid_argument("BlockCode: parity-check matrix is rank deficient");
  table_.assign(std::size_t{1} << h_.rows(), std::nullopt);
  std::vector<int> weight_of(table_.size(), -1);
  std::vector<char> ambiguous(table_.size(), 0);
  for (int w = 0; w <= correctable_weight; ++w) {
    for_each_pattern(n(), w, [&](const BitVector& e) {
      const std::size_t idx = syndrome_index(gf2_multiply(h_, e));
      if (weight_of[idx] < 0) {
        weight_of[idx] = w;
        table_[idx] = e;
      } else if (weight_of[idx] == w) {
        ambiguous[idx] = 1;
      }
    });
  }
  for (std::size_t i = 0; i < table_.size(); ++i)
    if (ambiguous[i]) table_[i].reset();
  if (!table_[0] || hamming_weight(*table_[0]) != 0) throw std::logic_error("BlockCode: broken syndrome table");
}

BlockCode BlockCode::hamming74() {
  BitMatrix h(3, 7);
  for (int c = 0; c < 7; ++c)
    for (int r = 0; r < 3; ++r) h(r, c) = static_cast<std::uint8_t>(((c + 1) >> (2 - r)) & 1);
  return BlockCode("hamming74", h, 1);
}

BlockCode BlockCode::extended_hamming84() {
  BitMatrix h = BitMatrix::Zero(4, 8);
  for (int c = 0; c < 7; ++c)
    for (int r = 0; r < 3; ++r) h(r, c) = static_cast<std::uint8_t>(((c + 1) >> (2 - r)) & 1);
  h.row(3).setOnes();
  return BlockCode("ext_hamming84", h, 1);
}

BitVector BlockCode::syndrome(const BitVector& block) const {
  if (block.size() != n()) throw std::invalid_argument("BlockCode::syndrome: block length mismatch");
  return gf2_multiply(h_, block);
}

std::optional<BitVector> BlockCode::error_pattern(const BitVector& syndrome) const {
  if (syndrome.size() != r()) throw std::invalid_argument("BlockCode::error_pattern: syndrome length mismatch");
  return table_[syndrome_index(syndrome)];
}

}  // namespace skg
