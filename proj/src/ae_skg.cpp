// SPDX-License-Identifier: Apache-2.0
#include "skg/ae_skg.hpp"

#include <algorithm>

namespace skg {

namespace {

constexpr std::string_view kCipherKeyTag = "skg/cipher-key/v1";
constexpr std::string_view kMacTag = "skg/mac/v1";

std::array<std::uint8_t, 16> counter_iv(std::uint64_t nonce) {
  // 96-bit nonce (high 32 bits zero) followed by a 32-bit block counter.
  std::array<std::uint8_t, 16> iv{};
  for (int i = 0; i < 8; ++i) iv[4 + i] = static_cast<std::uint8_t>(nonce >> (56 - 8 * i));
  return iv;
}

crypto::Digest cipher_key(const KeyMaterial& key) {
  Bytes material;
  crypto::append_u32(material, static_cast<std::uint32_t>(key.encryption_bits));
  material.insert(material.end(), key.encryption_key.begin(), key.encryption_key.end());
  return crypto::tagged_hash(kCipherKeyTag, material);
}

Bytes mac_input(std::uint64_t nonce, const Bytes& syndrome, const Bytes& ciphertext,
                std::span<const std::uint8_t> assoc_data) {
  Bytes in(kMacTag.begin(), kMacTag.end());
  const auto iv = counter_iv(nonce);
  in.insert(in.end(), iv.begin(), iv.begin() + 12);
  crypto::append_u32(in, static_cast<std::uint32_t>(syndrome.size()));
  in.insert(in.end(), syndrome.begin(), syndrome.end());
  crypto::append_u32(in, static_cast<std::uint32_t>(ciphertext.size()));
  in.insert(in.end(), ciphertext.begin(), ciphertext.end());
  crypto::append_u32(in, static_cast<std::uint32_t>(assoc_data.size()));
  in.insert(in.end(), assoc_data.begin(), assoc_data.end());
  return in;
}

// Reads [u32 len][bytes] at `pos`, advancing it.
std::optional<Bytes> read_field(std::span<const std::uint8_t> wire, std::size_t& pos) {
  if (wire.size() - pos < 4) return std::nullopt;
  const std::size_t len = crypto::read_u32(wire.subspan(pos));
  pos += 4;
  if (wire.size() - pos < len) return std::nullopt;
  Bytes out(wire.begin() + static_cast<std::ptrdiff_t>(pos), wire.begin() + static_cast<std::ptrdiff_t>(pos + len));
  pos += len;
  return out;
}

}  // namespace

Tag sign(std::span<const std::uint8_t> integrity_key, std::span<const std::uint8_t> data) {
  return crypto::hmac_sha256(integrity_key, data);
}

bool verify(std::span<const std::uint8_t> integrity_key, std::span<const std::uint8_t> data, const Tag& tag) {
  const Tag expected = sign(integrity_key, data);
  return crypto::constant_time_equal(expected, tag);
}

Bytes ExtendedCiphertext::encode() const {
  Bytes out;
  crypto::append_u32(out, static_cast<std::uint32_t>(syndrome.size()));
  out.insert(out.end(), syndrome.begin(), syndrome.end());
  crypto::append_u32(out, static_cast<std::uint32_t>(ciphertext.size()));
  out.insert(out.end(), ciphertext.begin(), ciphertext.end());
  out.insert(out.end(), tag.begin(), tag.end());
  return out;
}

std::optional<ExtendedCiphertext> ExtendedCiphertext::decode(std::span<const std::uint8_t> wire) {
  std::size_t pos = 0;
  ExtendedCiphertext ext;
  auto s = read_field(wire, pos);
  if (!s) return std::nullopt;
  auto c = read_field(wire, pos);
  if (!c) return std::nullopt;
  if (wire.size() - pos != ext.tag.size()) return std::nullopt;
  std::copy(wire.begin() + static_cast<std::ptrdiff_t>(pos), wire.end(), ext.tag.begin());
  ext.syndrome = std::move(*s);
  ext.ciphertext = std::move(*c);
  return ext;
}

std::string_view to_string(OpenError e) {
  switch (e) {
    case OpenError::Malformed:
      return "malformed extended ciphertext";
    case OpenError::ReconciliationFailure:
      return "reconciliation failure";
    case OpenError::IntegrityFailure:
      return "integrity failure";
  }
  return "unknown";
}

ExtendedCiphertext seal_with_key(const KeyMaterial& key, std::uint64_t nonce, Bytes syndrome_wire,
                                 std::span<const std::uint8_t> message, std::span<const std::uint8_t> assoc_data) {
  ExtendedCiphertext ext;
  ext.syndrome = std::move(syndrome_wire);
  ext.ciphertext = crypto::aes256_ctr(cipher_key(key), counter_iv(nonce), message);
  ext.tag = sign(key.integrity_key, mac_input(nonce, ext.syndrome, ext.ciphertext, assoc_data));
  return ext;
}

OpenResult open_with_key(const KeyMaterial& key, std::uint64_t nonce, const ExtendedCiphertext& ext,
                         std::span<const std::uint8_t> assoc_data) {
  if (!verify(key.integrity_key, mac_input(nonce, ext.syndrome, ext.ciphertext, assoc_data), ext.tag))
    return OpenError::IntegrityFailure;
  return crypto::aes256_ctr(cipher_key(key), counter_iv(nonce), ext.ciphertext);
}

Sealer::Sealer(const VectorXcd& observation, const SkgConfig& cfg)
    : offer_(skg_generate(observation, cfg)), syndrome_wire_(encode_syndrome(offer_.syndrome)) {}

Sealer::Sealer(const VectorXcd& observation, const SkgConfig& cfg, ResumptionState& resumption)
    : offer_(resumption_generate(observation, cfg, resumption)), syndrome_wire_(encode_syndrome(offer_.syndrome)) {}

ExtendedCiphertext Sealer::seal(std::span<const std::uint8_t> message, std::span<const std::uint8_t> assoc_data) {
  return seal_with_key(offer_.key, nonce_++, syndrome_wire_, message, assoc_data);
}

OpenResult open(const VectorXcd& observation, const SkgConfig& cfg, const ExtendedCiphertext& ext,
                std::span<const std::uint8_t> assoc_data, std::uint64_t nonce) {
  const auto syndrome = decode_syndrome(ext.syndrome);
  if (!syndrome) return OpenError::Malformed;
  const auto key = skg_receive(observation, *syndrome, cfg);
  if (!key) return OpenError::ReconciliationFailure;
  return open_with_key(*key, nonce, ext, assoc_data);
}

OpenResult open_resumption(const VectorXcd& observation, const SkgConfig& cfg, ResumptionState& state,
                           const ExtendedCiphertext& ext, std::span<const std::uint8_t> assoc_data,
                           std::uint64_t nonce) {
  const auto syndrome = decode_syndrome(ext.syndrome);
  if (!syndrome) return OpenError::Malformed;
  const auto key = resumption_receive(observation, *syndrome, cfg, state);
  if (!key) return OpenError::ReconciliationFailure;
  return open_with_key(*key, nonce, ext, assoc_data);
}

Bytes ResumptionMessage::encode() const {
  Bytes out;
  crypto::append_u32(out, static_cast<std::uint32_t>(lookup_id.size()));
  out.insert(out.end(), lookup_id.begin(), lookup_id.end());
  const Bytes b = body.encode();
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

std::optional<ResumptionMessage> ResumptionMessage::decode(std::span<const std::uint8_t> wire) {
  std::size_t pos = 0;
  auto id = read_field(wire, pos);
  if (!id) return std::nullopt;
  auto body = ExtendedCiphertext::decode(wire.subspan(pos));
  if (!body) return std::nullopt;
  return ResumptionMessage{std::move(*id), std::move(*body)};
}

}  // namespace skg
