// SPDX-License-Identifier: Apache-2.0
#include "skg/skg_protocol.hpp"

#include <cmath>

#include "skg/crypto.hpp"

namespace skg {

namespace {

constexpr std::string_view kAmplifyTag = "skg/privacy-amplification/v1";
constexpr std::string_view kLookupTag = "skg/resumption-lookup/v1";
constexpr std::string_view kResumptionTag = "skg/resumption-secret/v1";

int block_count(Eigen::Index n_bits, const BlockCode& code) {
  return static_cast<int>((n_bits + code.n() - 1) / code.n());
}

BitVector padded(const BitVector& bits, const BlockCode& code) {
  BitVector out = BitVector::Zero(static_cast<Eigen::Index>(block_count(bits.size(), code)) * code.n());
  out.head(bits.size()) = bits;
  return out;
}

}  // namespace

QuantizedVector quantize(const VectorXcd& observation, double guard_band) {
  if (!(guard_band >= 0.0)) throw std::invalid_argument("quantize: guard_band must be >= 0");
  QuantizedVector q;
  const Eigen::Index n = observation.size();
  q.bits.resize(2 * n);
  q.erasures.resize(2 * n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double parts[2] = {observation(i).real(), observation(i).imag()};
    for (int c = 0; c < 2; ++c) {
      q.bits(2 * i + c) = parts[c] >= 0.0 ? 1 : 0;
      q.erasures(2 * i + c) = std::abs(parts[c]) < guard_band ? 1 : 0;
    }
  }
  return q;
}

BitVector compute_syndrome(const BitVector& bits, const BlockCode& code) {
  if (bits.size() == 0) throw std::invalid_argument("compute_syndrome: empty bit vector");
  const BitVector full = padded(bits, code);
  const int blocks = block_count(bits.size(), code);
  BitVector s(static_cast<Eigen::Index>(blocks) * code.r());
  for (int b = 0; b < blocks; ++b)
    s.segment(static_cast<Eigen::Index>(b) * code.r(), code.r()) = code.syndrome(full.segment(b * code.n(), code.n()));
  return s;
}

std::optional<BitVector> reconcile(const BitVector& local, const BitVector& remote_syndrome, const BlockCode& code) {
  const int blocks = block_count(local.size(), code);
  if (remote_syndrome.size() != static_cast<Eigen::Index>(blocks) * code.r()) return std::nullopt;
  BitVector full = padded(local, code);
  for (int b = 0; b < blocks; ++b) {
    auto block = full.segment(static_cast<Eigen::Index>(b) * code.n(), code.n());
    const BitVector diff =
        gf2_xor(code.syndrome(block), remote_syndrome.segment(static_cast<Eigen::Index>(b) * code.r(), code.r()));
    const auto e = code.error_pattern(diff);
    if (!e) return std::nullopt;
    block = gf2_xor(block, *e);
  }
  if (hamming_weight(full.tail(full.size() - local.size())) != 0) return std::nullopt;
  return BitVector(full.head(local.size()));
}

int AmplificationBudget::max_key_bits() const {
  const double v = h_xa - i_xa_xe - h_xa_given_xb - r0;
  return v > 0.0 ? static_cast<int>(std::floor(v)) : 0;
}

Bytes KeyMaterial::serialize() const {
  Bytes out;
  crypto::append_u32(out, static_cast<std::uint32_t>(encryption_bits));
  out.insert(out.end(), encryption_key.begin(), encryption_key.end());
  crypto::append_u32(out, static_cast<std::uint32_t>(integrity_bits));
  out.insert(out.end(), integrity_key.begin(), integrity_key.end());
  return out;
}

KeyMaterial privacy_amplify(const BitVector& bits, const AmplificationBudget& budget, int key_len_bits,
                            int disclosed_bits) {
  if (key_len_bits < 2 || key_len_bits > 256)
    throw std::invalid_argument("privacy_amplify: key length must be in [2, 256] bits");
  if (disclosed_bits < 0) throw std::invalid_argument("privacy_amplify: disclosed_bits must be >= 0");
  if (key_len_bits > budget.max_key_bits() || key_len_bits + disclosed_bits > bits.size())
    throw ProtocolError("amplification budget exceeded");

  Bytes input;
  crypto::append_u32(input, static_cast<std::uint32_t>(bits.size()));
  const Bytes packed = pack_bits(bits);
  input.insert(input.end(), packed.begin(), packed.end());
  const auto digest = crypto::tagged_hash(kAmplifyTag, input);
  const BitVector all = unpack_bits(Bytes(digest.begin(), digest.end()), key_len_bits);

  KeyMaterial k;
  k.encryption_bits = key_len_bits / 2;
  k.integrity_bits = key_len_bits - k.encryption_bits;
  k.encryption_key = pack_bits(all.head(k.encryption_bits));
  k.integrity_key = pack_bits(all.tail(k.integrity_bits));
  return k;
}

SkgConfig SkgConfig::for_subcarriers(int n_subcarriers, int key_len_bits, double r0, BlockCode code) {
  if (n_subcarriers < 1) throw std::invalid_argument("SkgConfig: n_subcarriers must be >= 1");
  SkgConfig cfg{std::move(code), {}, key_len_bits, 0.0};
  const int bits = 2 * n_subcarriers;
  cfg.budget.h_xa = bits;
  cfg.budget.i_xa_xe = 0.0;
  cfg.budget.h_xa_given_xb = static_cast<double>(block_count(bits, cfg.code)) * cfg.code.r();
  cfg.budget.r0 = r0;
  return cfg;
}

namespace {

SkgOffer generate_from_bits(BitVector bits, const SkgConfig& cfg) {
  SkgOffer offer;
  offer.syndrome = compute_syndrome(bits, cfg.code);
  offer.key = privacy_amplify(bits, cfg.budget, cfg.key_len_bits, static_cast<int>(offer.syndrome.size()));
  offer.bits = std::move(bits);
  return offer;
}

std::optional<KeyMaterial> receive_from_bits(const BitVector& bits, const BitVector& syndrome, const SkgConfig& cfg) {
  const auto reconciled = reconcile(bits, syndrome, cfg.code);
  if (!reconciled) return std::nullopt;
  return privacy_amplify(*reconciled, cfg.budget, cfg.key_len_bits, static_cast<int>(syndrome.size()));
}

}  // namespace

SkgOffer skg_generate(const VectorXcd& observation, const SkgConfig& cfg) {
  return generate_from_bits(quantize(observation, cfg.guard_band).bits, cfg);
}

std::optional<KeyMaterial> skg_receive(const VectorXcd& observation, const BitVector& syndrome,
                                       const SkgConfig& cfg) {
  return receive_from_bits(quantize(observation, cfg.guard_band).bits, syndrome, cfg);
}

Bytes encode_syndrome(const BitVector& syndrome) {
  Bytes out;
  crypto::append_u32(out, static_cast<std::uint32_t>(syndrome.size()));
  const Bytes packed = pack_bits(syndrome);
  out.insert(out.end(), packed.begin(), packed.end());
  return out;
}

std::optional<BitVector> decode_syndrome(std::span<const std::uint8_t> wire) {
  if (wire.size() < 4) return std::nullopt;
  const std::uint64_t n_bits = crypto::read_u32(wire);
  if (wire.size() != 4 + (n_bits + 7) / 8) return std::nullopt;
  const Bytes body(wire.begin() + 4, wire.end());
  const auto bits = unpack_bits(body, static_cast<int>(n_bits));
  // Canonical form only: padding bits must be zero.
  if (pack_bits(bits) != body) return std::nullopt;
  return bits;
}

void ResumptionState::consume() {
  if (consumed) throw ProtocolError("resumption secret already consumed");
  consumed = true;
}

ResumptionState derive_resumption_state(const KeyMaterial& key, int n_bits) {
  if (n_bits < 1) throw std::invalid_argument("derive_resumption_state: n_bits must be >= 1");
  const Bytes material = key.serialize();
  ResumptionState state;
  const auto lookup = crypto::tagged_hash(kLookupTag, material);
  state.lookup_id.assign(lookup.begin(), lookup.begin() + 16);

  Bytes stream;
  for (std::uint32_t counter = 0; stream.size() * 8 < static_cast<std::size_t>(n_bits); ++counter) {
    Bytes block = material;
    crypto::append_u32(block, counter);
    const auto d = crypto::tagged_hash(kResumptionTag, block);
    stream.insert(stream.end(), d.begin(), d.end());
  }
  state.secret = unpack_bits(stream, n_bits);
  return state;
}

SkgOffer resumption_generate(const VectorXcd& observation, const SkgConfig& cfg, ResumptionState& state) {
  const BitVector bits = quantize(observation, cfg.guard_band).bits;
  if (state.secret.size() != bits.size()) throw std::invalid_argument("resumption secret length mismatch");
  state.consume();
  return generate_from_bits(gf2_xor(bits, state.secret), cfg);
}

std::optional<KeyMaterial> resumption_receive(const VectorXcd& observation, const BitVector& syndrome,
                                              const SkgConfig& cfg, ResumptionState& state) {
  const BitVector bits = quantize(observation, cfg.guard_band).bits;
  if (state.secret.size() != bits.size()) throw std::invalid_argument("resumption secret length mismatch");
  state.consume();
  return receive_from_bits(gf2_xor(bits, state.secret), syndrome, cfg);
}

}  // namespace skg
