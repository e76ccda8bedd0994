// SPDX-License-Identifier: Apache-2.0
#include "skg/crypto.hpp"

#include <memory>
#include <stdexcept>

#include <openssl/crypto.h>
#include <openssl/evp.h>
#include <openssl/hmac.h>

namespace skg::crypto {

Digest sha256(std::span<const std::uint8_t> data) {
  Digest out{};
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), out.data(), &len, EVP_sha256(), nullptr) != 1 || len != out.size())
    throw std::runtime_error("sha256 failed");
  return out;
}

Digest tagged_hash(std::string_view tag, std::span<const std::uint8_t> data) {
  Bytes buf;
  buf.reserve(4 + tag.size() + data.size());
  append_u32(buf, static_cast<std::uint32_t>(tag.size()));
  buf.insert(buf.end(), tag.begin(), tag.end());
  buf.insert(buf.end(), data.begin(), data.end());
  return sha256(buf);
}

Digest hmac_sha256(std::span<const std::uint8_t> key, std::span<const std::uint8_t> data) {
  Digest out{};
  unsigned int len = 0;
  static const std::uint8_t empty = 0;
  if (HMAC(EVP_sha256(), key.empty() ? &empty : key.data(), static_cast<int>(key.size()), data.data(), data.size(),
           out.data(), &len) == nullptr ||
      len != out.size())
    throw std::runtime_error("hmac-sha256 failed");
  return out;
}

Bytes aes256_ctr(const Digest& key, const std::array<std::uint8_t, 16>& iv, std::span<const std::uint8_t> data) {
  std::unique_ptr<EVP_CIPHER_CTX, decltype(&EVP_CIPHER_CTX_free)> ctx(EVP_CIPHER_CTX_new(), &EVP_CIPHER_CTX_free);
  if (!ctx) throw std::runtime_error("aes-ctr: context allocation failed");
  Bytes out(data.size() + 16);
  int len = 0;
  int tail = 0;
  if (EVP_EncryptInit_ex(ctx.get(), EVP_aes_256_ctr(), nullptr, key.data(), iv.data()) != 1 ||
      EVP_EncryptUpdate(ctx.get(), out.data(), &len, data.data(), static_cast<int>(data.size())) != 1 ||
      EVP_EncryptFinal_ex(ctx.get(), out.data() + len, &tail) != 1)
    throw std::runtime_error("aes-ctr failed");
  out.resize(static_cast<std::size_t>(len + tail));
  return out;
}

bool constant_time_equal(std::span<const std::uint8_t> a, std::span<const std::uint8_t> b) {
  return a.size() == b.size() && CRYPTO_memcmp(a.data(), b.data(), a.size()) == 0;
}

void append_u32(Bytes& out, std::uint32_t v) {
  out.push_back(static_cast<std::uint8_t>(v >> 24));
  out.push_back(static_cast<std::uint8_t>(v >> 16));
  out.push_back(static_cast<std::uint8_t>(v >> 8));
  out.push_back(static_cast<std::uint8_t>(v));
}

std::uint32_t read_u32(std::span<const std::uint8_t> in) {
  if (in.size() < 4) throw std::invalid_argument("read_u32: short buffer");
  return (std::uint32_t{in[0]} << 24) | (std::uint32_t{in[1]} << 16) | (std::uint32_t{in[2]} << 8) | in[3];
}

}  // namespace skg::crypto
