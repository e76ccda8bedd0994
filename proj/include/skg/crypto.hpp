// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string_view>

#include "skg/types.hpp"

namespace skg::crypto {

using Digest = std::array<std::uint8_t, 32>;

Digest sha256(std::span<const std::uint8_t> data);

/// SHA-256 over a domain-separation tag followed by the payload.
Digest tagged_hash(std::string_view tag, std::span<const std::uint8_t> data);

Digest hmac_sha256(std::span<const std::uint8_t> key, std::span<const std::uint8_t> data);

/// AES-256 in counter mode; the same call encrypts and decrypts.
Bytes aes256_ctr(const Digest& key, const std::array<std::uint8_t, 16>& iv, std::span<const std::uint8_t> data);

bool constant_time_equal(std::span<const std::uint8_t> a, std::span<const std::uint8_t> b);

void append_u32(Bytes& out, std::uint32_t v);
std::uint32_t read_u32(std::span<const std::uint8_t> in);

}  // namespace skg::crypto
