// SPDX-License-Identifier: Apache-2.0
#ifndef VKEX_CRYPTO_CONCRETE_HPP
#define VKEX_CRYPTO_CONCRETE_HPP

#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "vkex/bytes.hpp"
#include "vkex/rng.hpp"

namespace vkex {

/// AEAD sequence nonce: direction bit in the high bit of the leading byte,
/// message counter in the trailing 8 bytes. Never transmitted.
struct SeqNonce {
  bool responder_direction = false;
  std::uint64_t counter = 0;

  bool operator<(const SeqNonce& o) const {
    return std::tie(responder_direction, counter) < std::tie(o.responder_direction, o.counter);
  }
  bool operator==(const SeqNonce& o) const = default;
};

/// Thrown when a (key, nonce) pair would be sealed twice.
struct NonceReuseFault : std::logic_error {
  NonceReuseFault() : std::logic_error("aead seal: (key, nonce) pair reused") {}
};

/// Byte-level backend: X25519 / Ed25519 / ChaCha20-Poly1305-IETF / SHA-256,
/// HKDF-SHA256 for derivation. All values fixed-length per the wire format.
struct ConcreteBackend {
  static constexpr bool is_symbolic = false;

  using Rand = DetRng;
  using SecretScalar = SecureArray<32>;
  using PublicShare = ByteArray<32>;
  using SharedSecret = SecureArray<32>;
  using SymmetricKey = SecureArray<32>;
  using SigningKey = SecureArray<64>;
  using VerificationKey = ByteArray<32>;
  using Signature = ByteArray<64>;
  using Digest = ByteArray<32>;
  using Nonce = ByteArray<16>;  // 128-bit random nonce
  using Ciphertext = Bytes;
  using Plaintext = Bytes;
  using IdValue = UserId;
  using Sas = std::uint16_t;
  using TranscriptEntry = Bytes;

  static std::pair<SecretScalar, PublicShare> gen_keypair(Rand& rng);
  /// Rejects low-order / invalid peer encodings by returning nullopt.
  static std::optional<SharedSecret> dh(const SecretScalar& secret, const PublicShare& peer);

  static Ciphertext aead_seal(const SymmetricKey& key, const SeqNonce& n,
                              std::span<const std::uint8_t> aad,
                              std::span<const std::uint8_t> plaintext);
  static std::optional<Plaintext> aead_open(const SymmetricKey& key, const SeqNonce& n,
                                            std::span<const std::uint8_t> aad,
                                            const Ciphertext& ct);
  /// Raw 12-byte-nonce entry point, used by the standard-vector tests.
  static Ciphertext aead_seal_raw(const SymmetricKey& key, const ByteArray<12>& nonce,
                                  std::span<const std::uint8_t> aad,
                                  std::span<const std::uint8_t> plaintext);
  static std::optional<Plaintext> aead_open_raw(const SymmetricKey& key, const ByteArray<12>& nonce,
                                                std::span<const std::uint8_t> aad,
                                                const Ciphertext& ct);

  static std::pair<SigningKey, VerificationKey> gen_signing_keypair(Rand& rng);
  static std::pair<SigningKey, VerificationKey> signing_keypair_from_seed(const ByteArray<32>& seed);
  static Signature sign(const SigningKey& sk, const Digest& digest);
  static bool verify(const VerificationKey& vk, const Digest& digest, const Signature& sig);

  static Digest hash(std::span<const std::uint8_t> data);
  static Nonce random_nonce(Rand& rng);

  /// Hash commitment binding a key share before its reveal.
  static Digest commit_hash(const PublicShare& pub, const Nonce& salt);

  /// HKDF-SHA256 (RFC 5869 construction over libsodium HMAC).
  static SymmetricKey hkdf_extract(std::span<const std::uint8_t> salt,
                                   std::span<const std::uint8_t> ikm);
  static Bytes hkdf_expand(const SymmetricKey& prk, const std::string& info, std::size_t len);

  /// Canonical digest over length-prefixed frame encodings; order-sensitive.
  static Digest transcript_digest(const std::vector<TranscriptEntry>& entries);

  static IdValue id_value(const UserId& id) { return id; }

  static Plaintext encode_identity(const IdValue& id, const Nonce& n,
                                   const std::optional<Signature>& sig);
  struct IdentityParts {
    IdValue id{};
    Nonce nonce{};
    std::optional<Signature> sig;
  };
  static std::optional<IdentityParts> decode_identity(const Plaintext& pt);

  static Plaintext encode_ctl(std::uint8_t ctl);
  static std::optional<std::uint8_t> decode_ctl(const Plaintext& pt);
};

SeqNonce ctl_nonce(bool responder_direction, std::uint8_t ctl);

/// Per-key sealing handle tracking used nonces. A repeated (key, nonce) seal
/// is a programmed fault, not a recoverable error.
template <typename B>
class Sealer {
 public:
  Sealer() = default;
  explicit Sealer(typename B::SymmetricKey key) : key_(std::move(key)) {}

  typename B::Ciphertext seal(const SeqNonce& n, std::span<const std::uint8_t> aad,
                              const typename B::Plaintext& pt) {
    if (!used_.insert(n).second) throw NonceReuseFault{};
    return B::aead_seal(key_, n, aad, pt);
  }

  std::optional<typename B::Plaintext> open(const SeqNonce& n, std::span<const std::uint8_t> aad,
                                            const typename B::Ciphertext& ct) const {
    return B::aead_open(key_, n, aad, ct);
  }

  const typename B::SymmetricKey& key() const { return key_; }

 private:
  typename B::SymmetricKey key_{};
  std::set<SeqNonce> used_;
};

}  // namespace vkex

#endif  // VKEX_CRYPTO_CONCRETE_HPP
