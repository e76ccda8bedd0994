// SPDX-License-Identifier: Apache-2.0
#include <cstdio>
#include <string>

#include "catch_amalgamated.hpp"
#include "skg/ae_skg.hpp"
#include "skg/channel_model.hpp"

using namespace skg;

namespace {

Bytes hex(const std::string& s) {
  Bytes out;
  for (std::size_t i = 0; i + 1 < s.size(); i += 2) out.push_back(static_cast<std::uint8_t>(std::stoul(s.substr(i, 2), nullptr, 16)));
  return out;
}

template <typename Container>
std::string to_hex(const Container& c) {
  std::string out;
  char buf[3];
  for (auto b : c) {
    std::snprintf(buf, sizeof buf, "%02x", static_cast<unsigned>(b));
    out += buf;
  }
  return out;
}

Bytes text(const std::string& s) { return Bytes(s.begin(), s.end()); }

KeyMaterial small_key() {
  KeyMaterial k;
  k.encryption_key = {0xF0};
  k.integrity_key = {0x78};
  k.encryption_bits = 6;
  k.integrity_bits = 6;
  return k;
}

}  // namespace

TEST_CASE("crypto primitives match published vectors") {
  CHECK(to_hex(crypto::sha256(text("abc"))) == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
  CHECK(to_hex(crypto::hmac_sha256(Bytes(20, 0x0b), text("Hi There"))) ==
        "b0344c61d8db38535ca8afceaf0bf12b881dc200c9833da726e9376c2e32cff7");

  crypto::Digest key{};
  const Bytes k = hex("603deb1015ca71be2b73aef0857d77811f352c073b6108d72d9810a30914dff4");
  std::copy(k.begin(), k.end(), key.begin());
  std::array<std::uint8_t, 16> iv{};
  const Bytes i = hex("f0f1f2f3f4f5f6f7f8f9fafbfcfdfeff");
  std::copy(i.begin(), i.end(), iv.begin());
  const Bytes pt = hex("6bc1bee22e409f96e93d7e117393172aae2d8a571e03ac9c9eb76fac45af8e51");
  const Bytes ct = crypto::aes256_ctr(key, iv, pt);
  CHECK(to_hex(ct) == "601ec313775789a5b7a7f504bbf3d228f443e3ca4d62b59aca84e990cacaf5c5");
  CHECK(crypto::aes256_ctr(key, iv, ct) == pt);

  CHECK(crypto::constant_time_equal(text("ab"), text("ab")));
  CHECK_FALSE(crypto::constant_time_equal(text("ab"), text("ac")));
  CHECK_FALSE(crypto::constant_time_equal(text("ab"), text("abc")));
}

TEST_CASE("seal under a fixed key matches an independent computation") {
  const auto ext = seal_with_key(small_key(), 5, hex("00000009b380"), text("attack at dawn"), text("hdr"));
  CHECK(to_hex(ext.ciphertext) == "3625c3abd3da2e07f75c80ae3f2c");
  CHECK(to_hex(ext.tag) == "0fa7fdbb6e09fe9e05a98451604889d926ecfecbb252f38752d5cfee9a5e6c9a");
  CHECK(std::get<Bytes>(open_with_key(small_key(), 5, ext, text("hdr"))) == text("attack at dawn"));
  CHECK(std::get<OpenError>(open_with_key(small_key(), 6, ext, text("hdr"))) == OpenError::IntegrityFailure);
  CHECK(std::get<OpenError>(open_with_key(small_key(), 5, ext, text("hdX"))) == OpenError::IntegrityFailure);
  auto other = small_key();
  other.integrity_key = {0x7C};
  CHECK(std::get<OpenError>(open_with_key(other, 5, ext, text("hdr"))) == OpenError::IntegrityFailure);
}

TEST_CASE("extended ciphertext wire format") {
  const auto ext = seal_with_key(small_key(), 0, hex("00000009b380"), text("hello"), {});
  const Bytes wire = ext.encode();
  CHECK(wire.size() == 4 + 6 + 4 + 5 + 32);
  const auto back = ExtendedCiphertext::decode(wire);
  REQUIRE(back.has_value());
  CHECK(back->syndrome == ext.syndrome);
  CHECK(back->ciphertext == ext.ciphertext);
  CHECK(back->tag == ext.tag);
  for (std::size_t cut = 0; cut < wire.size(); ++cut)
    CHECK_FALSE(ExtendedCiphertext::decode(std::span(wire).first(cut)).has_value());
  Bytes longer = wire;
  longer.push_back(0);
  CHECK_FALSE(ExtendedCiphertext::decode(longer).has_value());
  Bytes huge = wire;
  huge[0] = 0xFF;
  CHECK_FALSE(ExtendedCiphertext::decode(huge).has_value());
}

TEST_CASE("session round trip and tamper detection") {
  const auto cfg = SkgConfig::for_subcarriers(64, 64);
  const auto ch = sample_channel(ChannelConfig(64, std::pow(10.0, 4.5), 1.0, 0.0, 17), 0);
  Sealer alice(ch.obs_alice, cfg);
  const Bytes ad = text("session-1");
  const auto first = alice.seal(text("first message"), ad);
  const auto second = alice.seal(text("second"), ad);
  CHECK(alice.next_nonce() == 2);
  CHECK(std::get<Bytes>(open(ch.obs_bob, cfg, first, ad, 0)) == text("first message"));
  CHECK(std::get<Bytes>(open(ch.obs_bob, cfg, second, ad, 1)) == text("second"));
  CHECK(std::get<OpenError>(open(ch.obs_bob, cfg, second, ad, 0)) == OpenError::IntegrityFailure);
  CHECK(std::get<OpenError>(open(ch.obs_bob, cfg, first, text("session-2"), 0)) == OpenError::IntegrityFailure);

  // Every single-bit flip of the wire form is rejected.
  const Bytes wire = first.encode();
  for (std::size_t bit = 0; bit < wire.size() * 8; ++bit) {
    Bytes w = wire;
    w[bit / 8] ^= static_cast<std::uint8_t>(0x80u >> (bit % 8));
    const auto ext = ExtendedCiphertext::decode(w);
    if (!ext) continue;
    const auto r = open(ch.obs_bob, cfg, *ext, ad, 0);
    CHECK(std::holds_alternative<OpenError>(r));
  }

  const auto eve = open(ch.obs_eve, cfg, first, ad, 0);
  CHECK(std::holds_alternative<OpenError>(eve));

  ExtendedCiphertext bad = first;
  bad.syndrome.back() |= 0x01;
  CHECK(std::get<OpenError>(open(ch.obs_bob, cfg, bad, ad, 0)) == OpenError::Malformed);
  CHECK(to_string(OpenError::IntegrityFailure) == "integrity failure");
}

TEST_CASE("resumption message") {
  const auto cfg = SkgConfig::for_subcarriers(64, 64);
  const auto ch = sample_channel(ChannelConfig(64, std::pow(10.0, 4.5), 1.0, 0.0, 19), 0);
  const Sealer first(ch.obs_alice, cfg);
  auto alice_state = derive_resumption_state(first.offer().key, 128);
  auto bob_state = derive_resumption_state(first.offer().key, 128);

  const auto ch2 = sample_channel(ChannelConfig(64, std::pow(10.0, 4.5), 1.0, 0.0, 19), 1);
  Sealer resumed(ch2.obs_alice, cfg, alice_state);
  const ResumptionMessage msg{alice_state.lookup_id, resumed.seal(text("0-rtt"), alice_state.lookup_id)};
  const Bytes wire = msg.encode();
  const auto back = ResumptionMessage::decode(wire);
  REQUIRE(back.has_value());
  CHECK(back->lookup_id == bob_state.lookup_id);
  CHECK(std::get<Bytes>(open_resumption(ch2.obs_bob, cfg, bob_state, back->body, back->lookup_id)) == text("0-rtt"));
  CHECK_THROWS_AS(open_resumption(ch2.obs_bob, cfg, bob_state, back->body, back->lookup_id), ProtocolError);

  Bytes truncated = wire;
  truncated.pop_back();
  CHECK_FALSE(ResumptionMessage::decode(truncated).has_value());
}
