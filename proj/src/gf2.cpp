// SPDX-License-Identifier: Apache-2.0
#include "skg/gf2.hpp"

#include <stdexcept>
#include <utility>

namespace skg {

BitVector gf2_multiply(const BitMatrix& h, const BitVector& v) {
  if (h.cols() != v.size()) throw std::invalid_argument("gf2_multiply: dimension mismatch");
  const Eigen::VectorXi prod = h.cast<int>() * v.cast<int>();
  return prod.unaryExpr([](int x) { return static_cast<std::uint8_t>(x & 1); });
}

int gf2_rank(BitMatrix m) {
  int rank = 0;
  for (Eigen::Index col = 0; col < m.cols() && rank < m.rows(); ++col) {
    Eigen::Index pivot = -1;
    for (Eigen::Index r = rank; r < m.rows(); ++r)
      if (m(r, col) & 1) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    m.row(pivot).swap(m.row(rank));
    for (Eigen::Index r = 0; r < m.rows(); ++r)
      if (r != rank && (m(r, col) & 1))
        for (Eigen::Index c = 0; c < m.cols(); ++c) m(r, c) ^= m(rank, c);
    ++rank;
  }
  return rank;
}

BitVector gf2_xor(const BitVector& a, const BitVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("gf2_xor: length mismatch");
  BitVector out(a.size());
  for (Eigen::Index i = 0; i < a.size(); ++i) out(i) = (a(i) ^ b(i)) & 1;
  return out;
}

int hamming_weight(const BitVector& v) {
  int w = 0;
  for (Eigen::Index i = 0; i < v.size(); ++i) w += v(i) & 1;
  return w;
}

Bytes pack_bits(const BitVector& bits) {
  Bytes out((bits.size() + 7) / 8, 0);
  for (Eigen::Index i = 0; i < bits.size(); ++i)
    if (bits(i) & 1) out[i / 8] |= static_cast<std::uint8_t>(0x80u >> (i % 8));
  return out;
}

BitVector unpack_bits(const Bytes& bytes, int n_bits) {
  if (n_bits < 0 || static_cast<std::size_t>(n_bits) > bytes.size() * 8)
    throw std::invalid_argument("unpack_bits: not enough bytes");
  BitVector out(n_bits);
  for (int i = 0; i < n_bits; ++i) out(i) = (bytes[i / 8] >> (7 - i % 8)) & 1;
  return out;
}

}  // namespace skg
