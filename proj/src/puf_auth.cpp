// SPDX-License-Identifier: Apache-2.0
#include "skg/puf_auth.hpp"

#include <algorithm>
#include <stdexcept>

#include "skg/rng.hpp"

namespace skg {

namespace {

constexpr std::string_view kLatentTag = "skg/puf-latent/v1";
constexpr std::string_view kKeyDigestTag = "skg/puf-key-digest/v1";

}  // namespace

PufDevice::PufDevice(std::string device_id, std::uint64_t device_secret, int response_len, double noise_sigma)
    : id_(std::move(device_id)), secret_(device_secret), response_len_(response_len), noise_sigma_(noise_sigma) {
  if (response_len < 1) throw std::invalid_argument("PufDevice: response_len must be >= 1");
  if (!(noise_sigma >= 0.0)) throw std::invalid_argument("PufDevice: noise_sigma must be >= 0");
}

VectorXcd PufDevice::latent(const Bytes& challenge) const {
  Bytes material;
  for (int i = 0; i < 8; ++i) material.push_back(static_cast<std::uint8_t>(secret_ >> (8 * i)));
  material.insert(material.end(), challenge.begin(), challenge.end());
  const auto d = crypto::tagged_hash(kLatentTag, material);
  std::uint64_t seed = 0;
  for (int i = 0; i < 8; ++i) seed = (seed << 8) | d[i];
  std::mt19937_64 engine(seed);
  VectorXcd v(response_len_);
  for (int i = 0; i < response_len_; ++i) v(i) = complex_normal(engine, 1.0);
  return v;
}

VectorXcd PufDevice::measure(const Bytes& challenge, std::mt19937_64& rng) const {
  VectorXcd v = latent(challenge);
  for (int i = 0; i < response_len_; ++i) v(i) += complex_normal(rng, noise_sigma_ * noise_sigma_);
  return v;
}

void CrpDatabase::add(const std::string& device_id, CrpRecord record) {
  records_[device_id].push_back(std::move(record));
}

std::size_t CrpDatabase::remaining(const std::string& device_id) const {
  const auto it = records_.find(device_id);
  if (it == records_.end()) return 0;
  return static_cast<std::size_t>(
      std::count_if(it->second.begin(), it->second.end(), [](const CrpRecord& r) { return !r.used; }));
}

std::optional<CrpRecord> CrpDatabase::take(const std::string& device_id, std::mt19937_64& rng) {
  auto it = records_.find(device_id);
  if (it == records_.end() || it->second.empty()) return std::nullopt;
  auto& list = it->second;
  std::uniform_int_distribution<std::size_t> pick(0, list.size() - 1);
  const std::size_t i = pick(rng);
  CrpRecord r = std::move(list[i]);
  list[i] = std::move(list.back());
  list.pop_back();
  r.used = true;
  return r;
}

crypto::Digest key_digest(const KeyMaterial& key) { return crypto::tagged_hash(kKeyDigestTag, key.serialize()); }

PufVerifier::PufVerifier(SkgConfig cfg, std::uint64_t seed) : cfg_(std::move(cfg)), rng_(seed) {}

void PufVerifier::enroll(const PufDevice& device, int n_crps) {
  if (n_crps < 0) throw std::invalid_argument("enroll: n_crps must be >= 0");
  for (int i = 0; i < n_crps; ++i) {
    CrpRecord r;
    r.challenge.resize(16);
    for (auto& b : r.challenge) b = static_cast<std::uint8_t>(rng_());
    const SkgOffer offer = skg_generate(device.latent(r.challenge), cfg_);
    r.helper = offer.syndrome;
    r.key_digest = key_digest(offer.key);
    db_.add(device.id(), std::move(r));
  }
}

Challenge PufVerifier::issue_challenge(const std::string& device_id) {
  auto record = db_.take(device_id, rng_);
  if (!record) throw ProtocolError("enrolment exhausted");
  Challenge c{device_id, record->challenge};
  pending_.push_back({device_id, std::move(*record)});
  return c;
}

bool PufVerifier::verify(const Challenge& challenge, const VectorXcd& response) {
  const auto it = std::find_if(pending_.begin(), pending_.end(), [&](const Pending& p) {
    return p.device_id == challenge.device_id && p.record.challenge == challenge.challenge;
  });
  if (it == pending_.end()) return false;
  const CrpRecord record = std::move(it->record);
  pending_.erase(it);
  const auto key = skg_receive(response, record.helper, cfg_);
  if (!key) return false;
  return crypto::constant_time_equal(key_digest(*key), record.key_digest);
}

}  // namespace skg
