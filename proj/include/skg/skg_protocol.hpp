// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string>

#include "skg/block_code.hpp"
#include "skg/gf2.hpp"
#include "skg/types.hpp"

namespace skg {

class ProtocolError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two bits per subcarrier: signs of the real and imaginary parts.
/// `erasures` flags components whose magnitude falls inside the guard band;
/// it stays local and is never serialised.
struct QuantizedVector {
  BitVector bits;
  BitVector erasures;
};

QuantizedVector quantize(const VectorXcd& observation, double guard_band = 0.0);

/// Syndrome of `bits` zero-padded to a whole number of code blocks.
BitVector compute_syndrome(const BitVector& bits, const BlockCode& code);

/// Corrects `local` towards the vector that produced `remote_syndrome`.
/// nullopt when a block syndrome is uncorrectable or a correction lands on
/// padding (a certain miscorrection).
std::optional<BitVector> reconcile(const BitVector& local, const BitVector& remote_syndrome, const BlockCode& code);

/// Entropy bookkeeping of the key: H(X_A) - I(X_A;X_E) - H(X_A|X_B) - r0.
struct AmplificationBudget {
  double h_xa = 0.0;
  double i_xa_xe = 0.0;
  double h_xa_given_xb = 0.0;
  double r0 = 0.0;

  int max_key_bits() const;
};

/// Session key split into an encryption half and an integrity half.
struct KeyMaterial {
  Bytes encryption_key;
  Bytes integrity_key;
  int encryption_bits = 0;
  int integrity_bits = 0;

  int bits() const { return encryption_bits + integrity_bits; }
  Bytes serialize() const;
  bool operator==(const KeyMaterial&) const = default;
};

/// SHA-256 privacy amplification of the reconciled bits to key_len_bits,
/// given that disclosed_bits of syndrome were published.
KeyMaterial privacy_amplify(const BitVector& bits, const AmplificationBudget& budget, int key_len_bits,
                            int disclosed_bits);

struct SkgConfig {
  BlockCode code = BlockCode::hamming74();
  AmplificationBudget budget;
  int key_len_bits = 64;
  double guard_band = 0.0;

  /// Budget that admits any key allowed by the syndrome leakage of an
  /// n_subcarriers observation with r0 bits of margin.
  static SkgConfig for_subcarriers(int n_subcarriers, int key_len_bits, double r0 = 4.0,
                                   BlockCode code = BlockCode::hamming74());
};

/// Everything the sending side produces in one key-generation round.
struct SkgOffer {
  KeyMaterial key;
  BitVector syndrome;
  BitVector bits;
};

SkgOffer skg_generate(const VectorXcd& observation, const SkgConfig& cfg);

std::optional<KeyMaterial> skg_receive(const VectorXcd& observation, const BitVector& syndrome,
                                       const SkgConfig& cfg);

/// Wire form of a reconciliation message: u32 big-endian bit length, then
/// the bits MSB first, zero padded to a byte boundary.
Bytes encode_syndrome(const BitVector& syndrome);
std::optional<BitVector> decode_syndrome(std::span<const std::uint8_t> wire);

/// Secret shared after a successful session for one 0-RTT resumption; the
/// lookup id names it publicly.
struct ResumptionState {
  Bytes lookup_id;
  BitVector secret;
  bool consumed = false;

  /// Marks the state used; throws if it already was.
  void consume();
};

ResumptionState derive_resumption_state(const KeyMaterial& key, int n_bits);

/// Key generation with the resumption secret folded into the quantised bits
/// before the syndrome is computed. Consumes `state`.
SkgOffer resumption_generate(const VectorXcd& observation, const SkgConfig& cfg, ResumptionState& state);

std::optional<KeyMaterial> resumption_receive(const VectorXcd& observation, const BitVector& syndrome,
                                              const SkgConfig& cfg, ResumptionState& state);

}  // namespace skg
