// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>

#include "skg/types.hpp"

namespace skg {

using BitVector = Eigen::Matrix<std::uint8_t, Eigen::Dynamic, 1>;
using BitMatrix = Eigen::Matrix<std::uint8_t, Eigen::Dynamic, Eigen::Dynamic>;

/// H v over GF(2).
BitVector gf2_multiply(const BitMatrix& h, const BitVector& v);

int gf2_rank(BitMatrix m);

BitVector gf2_xor(const BitVector& a, const BitVector& b);

int hamming_weight(const BitVector& v);

/// MSB-first packing, zero padded to whole bytes.
Bytes pack_bits(const BitVector& bits);
BitVector unpack_bits(const Bytes& bytes, int n_bits);

}  // namespace skg
