// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "skg/crypto.hpp"
#include "skg/skg_protocol.hpp"
#include "skg/types.hpp"

namespace skg {

/// Simulated PUF: a device-specific Gaussian latent vector per challenge,
/// observed through additive CN(0, noise_sigma^2) noise on every read.
class PufDevice {
 public:
  PufDevice(std::string device_id, std::uint64_t device_secret, int response_len, double noise_sigma);

  const std::string& id() const { return id_; }
  int response_len() const { return response_len_; }

  VectorXcd latent(const Bytes& challenge) const;
  VectorXcd measure(const Bytes& challenge, std::mt19937_64& rng) const;

 private:
  std::string id_;
  std::uint64_t secret_;
  int response_len_;
  double noise_sigma_;
};

/// Enrolment record: challenge, public helper data (syndrome of the
/// quantised response) and a digest of the derived key.
struct CrpRecord {
  Bytes challenge;
  BitVector helper;
  crypto::Digest key_digest{};
  bool used = false;
};

class CrpDatabase {
 public:
  void add(const std::string& device_id, CrpRecord record);
  std::size_t remaining(const std::string& device_id) const;
  /// Removes and returns a uniformly chosen unused record.
  std::optional<CrpRecord> take(const std::string& device_id, std::mt19937_64& rng);

 private:
  std::map<std::string, std::vector<CrpRecord>> records_;
};

struct Challenge {
  std::string device_id;
  Bytes challenge;
};

/// Verifier holding the enrolment database. Each CRP is used once and
/// deleted whether or not authentication succeeds.
class PufVerifier {
 public:
  PufVerifier(SkgConfig cfg, std::uint64_t seed);

  void enroll(const PufDevice& device, int n_crps);

  /// Picks a fresh challenge for the device; throws "enrolment exhausted"
  /// when none is left.
  Challenge issue_challenge(const std::string& device_id);

  /// Checks a response against the pending challenge and forgets it.
  bool verify(const Challenge& challenge, const VectorXcd& response);

  std::size_t remaining(const std::string& device_id) const { return db_.remaining(device_id); }
  const SkgConfig& config() const { return cfg_; }

 private:
  struct Pending {
    std::string device_id;
    CrpRecord record;
  };

  SkgConfig cfg_;
  std::mt19937_64 rng_;
  CrpDatabase db_;
  std::vector<Pending> pending_;
};

/// Digest of key material as stored at enrolment.
crypto::Digest key_digest(const KeyMaterial& key);

}  // namespace skg
