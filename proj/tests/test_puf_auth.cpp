// SPDX-License-Identifier: Apache-2.0
#include <random>
#include <set>

#include "catch_amalgamated.hpp"
#include "skg/puf_auth.hpp"

using namespace skg;

namespace {

SkgConfig puf_config() { return SkgConfig::for_subcarriers(32, 32, 2.0); }

}  // namespace

TEST_CASE("puf latent is device and challenge specific") {
  const PufDevice a("dev-a", 1, 32, 0.01);
  const PufDevice b("dev-b", 2, 32, 0.01);
  const Bytes c1{1, 2, 3};
  const Bytes c2{1, 2, 4};
  CHECK(a.latent(c1) == a.latent(c1));
  CHECK(a.latent(c1) != a.latent(c2));
  CHECK(a.latent(c1) != b.latent(c1));
  CHECK(a.latent(c1).size() == 32);

  std::mt19937_64 rng(1);
  const VectorXcd m1 = a.measure(c1, rng);
  const VectorXcd m2 = a.measure(c1, rng);
  CHECK(m1 != m2);
  CHECK((m1 - a.latent(c1)).cwiseAbs().maxCoeff() < 0.1);
  CHECK_THROWS(PufDevice("x", 0, 0, 0.01));
  CHECK_THROWS(PufDevice("x", 0, 4, -1.0));
}

TEST_CASE("crp database takes each record once") {
  CrpDatabase db;
  for (std::uint8_t i = 0; i < 5; ++i) db.add("d", CrpRecord{Bytes{i}, {}, {}, false});
  std::mt19937_64 rng(2);
  std::set<Bytes> seen;
  for (int i = 0; i < 5; ++i) {
    const auto r = db.take("d", rng);
    REQUIRE(r.has_value());
    seen.insert(r->challenge);
  }
  CHECK(seen.size() == 5);
  CHECK(db.remaining("d") == 0);
  CHECK_FALSE(db.take("d", rng).has_value());
  CHECK_FALSE(db.take("unknown", rng).has_value());
}

TEST_CASE("verifier authenticates the enrolled device only") {
  const PufDevice device("dev-a", 7, 32, 0.01);
  const PufDevice clone("dev-a", 8, 32, 0.01);
  PufVerifier verifier(puf_config(), 3);
  verifier.enroll(device, 40);
  CHECK(verifier.remaining("dev-a") == 40);
  std::mt19937_64 rng(4);

  int accepted = 0;
  for (int i = 0; i < 20; ++i) {
    const auto ch = verifier.issue_challenge("dev-a");
    CHECK(ch.challenge.size() == 16);
    if (verifier.verify(ch, device.measure(ch.challenge, rng))) ++accepted;
  }
  CHECK(accepted >= 19);

  int forged = 0;
  for (int i = 0; i < 20; ++i) {
    const auto ch = verifier.issue_challenge("dev-a");
    if (verifier.verify(ch, clone.measure(ch.challenge, rng))) ++forged;
  }
  CHECK(forged == 0);
  CHECK(verifier.remaining("dev-a") == 0);
  CHECK_THROWS_WITH(verifier.issue_challenge("dev-a"), "enrolment exhausted");
}

TEST_CASE("challenges are single use") {
  const PufDevice device("dev-a", 7, 32, 0.01);
  PufVerifier verifier(puf_config(), 5);
  verifier.enroll(device, 2);
  std::mt19937_64 rng(6);
  const auto ch = verifier.issue_challenge("dev-a");
  const VectorXcd response = device.measure(ch.challenge, rng);
  CHECK(verifier.verify(ch, response));
  CHECK_FALSE(verifier.verify(ch, response));
  CHECK(verifier.remaining("dev-a") == 1);
}
