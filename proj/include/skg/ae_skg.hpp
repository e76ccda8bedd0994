// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <variant>

#include "skg/crypto.hpp"
#include "skg/skg_protocol.hpp"

namespace skg {

using Tag = crypto::Digest;

Tag sign(std::span<const std::uint8_t> integrity_key, std::span<const std::uint8_t> data);
bool verify(std::span<const std::uint8_t> integrity_key, std::span<const std::uint8_t> data, const Tag& tag);

/// Reconciliation message, ciphertext and tag sent together.
/// Wire: [u32 len s][s][u32 len c][c][32-byte tag], big-endian lengths.
/// Associated data is bound by the tag but never transmitted.
struct ExtendedCiphertext {
  Bytes syndrome;
  Bytes ciphertext;
  Tag tag{};

  Bytes encode() const;
  static std::optional<ExtendedCiphertext> decode(std::span<const std::uint8_t> wire);
};

enum class OpenError { Malformed, ReconciliationFailure, IntegrityFailure };

std::string_view to_string(OpenError e);

using OpenResult = std::variant<Bytes, OpenError>;

/// Encrypt-then-MAC under a session key. Nonces are a 96-bit counter per key.
ExtendedCiphertext seal_with_key(const KeyMaterial& key, std::uint64_t nonce, Bytes syndrome_wire,
                                 std::span<const std::uint8_t> message, std::span<const std::uint8_t> assoc_data);

OpenResult open_with_key(const KeyMaterial& key, std::uint64_t nonce, const ExtendedCiphertext& ext,
                         std::span<const std::uint8_t> assoc_data);

/// Sender side of a session: generates the key from its observation and
/// seals messages under successive nonces starting at 0.
class Sealer {
 public:
  Sealer(const VectorXcd& observation, const SkgConfig& cfg);
  Sealer(const VectorXcd& observation, const SkgConfig& cfg, ResumptionState& resumption);

  ExtendedCiphertext seal(std::span<const std::uint8_t> message, std::span<const std::uint8_t> assoc_data = {});

  const SkgOffer& offer() const { return offer_; }
  std::uint64_t next_nonce() const { return nonce_; }

 private:
  SkgOffer offer_;
  Bytes syndrome_wire_;
  std::uint64_t nonce_ = 0;
};

/// Receiver side: reconciles with the syndrome carried in `ext`, amplifies
/// and then checks the tag before decrypting.
OpenResult open(const VectorXcd& observation, const SkgConfig& cfg, const ExtendedCiphertext& ext,
                std::span<const std::uint8_t> assoc_data = {}, std::uint64_t nonce = 0);

OpenResult open_resumption(const VectorXcd& observation, const SkgConfig& cfg, ResumptionState& state,
                           const ExtendedCiphertext& ext, std::span<const std::uint8_t> assoc_data = {},
                           std::uint64_t nonce = 0);

/// 0-RTT message: the public lookup id followed by the extended ciphertext,
/// which binds the id as associated data.
struct ResumptionMessage {
  Bytes lookup_id;
  ExtendedCiphertext body;

  Bytes encode() const;
  static std::optional<ResumptionMessage> decode(std::span<const std::uint8_t> wire);
};

}  // namespace skg
