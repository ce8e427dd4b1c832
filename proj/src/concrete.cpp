// SPDX-License-Identifier: Apache-2.0
#include "vkex/crypto/concrete.hpp"

#include <sodium.h>

#include <cstring>

namespace vkex {

namespace {

void ensure_sodium() {
  static const int rc = sodium_init();
  if (rc < 0) throw std::runtime_error("sodium_init failed");
}

ByteArray<12> seq_to_iv(const SeqNonce& n) {
  ByteArray<12> iv{};
  iv[0] = n.responder_direction ? 0x80 : 0x00;
  for (int i = 0; i < 8; ++i)
    iv[4 + i] = static_cast<std::uint8_t>((n.counter >> (8 * (7 - i))) & 0xFF);
  return iv;
}

}  // namespace

SeqNonce ctl_nonce(bool responder_direction, std::uint8_t ctl) {
  // request -> counter 0, confirm -> counter 1
  return SeqNonce{responder_direction, ctl == 0x01 ? 0u : 1u};
}

std::pair<ConcreteBackend::SecretScalar, ConcreteBackend::PublicShare>
ConcreteBackend::gen_keypair(Rand& rng) {
  ensure_sodium();
  SecretScalar sk;
  rng.fill({sk.data(), sk.size()});
  PublicShare pk{};
  crypto_scalarmult_base(pk.data(), sk.data());
  return {std::move(sk), pk};
}

std::optional<ConcreteBackend::SharedSecret> ConcreteBackend::dh(const SecretScalar& secret,
                                                                 const PublicShare& peer) {
  ensure_sodium();
  SharedSecret out;
  if (crypto_scalarmult(out.data(), secret.data(), peer.data()) != 0) return std::nullopt;
  return out;
}

ConcreteBackend::Ciphertext ConcreteBackend::aead_seal_raw(const SymmetricKey& key,
                                                           const ByteArray<12>& nonce,
                                                           std::span<const std::uint8_t> aad,
                                                           std::span<const std::uint8_t> pt) {
  ensure_sodium();
  Ciphertext ct(pt.size() + crypto_aead_chacha20poly1305_ietf_ABYTES);
  unsigned long long clen = 0;
  crypto_aead_chacha20poly1305_ietf_encrypt(ct.data(), &clen, pt.data(), pt.size(), aad.data(),
                                            aad.size(), nullptr, nonce.data(), key.data());
  ct.resize(clen);
  return ct;
}

std::optional<ConcreteBackend::Plaintext> ConcreteBackend::aead_open_raw(
    const SymmetricKey& key, const ByteArray<12>& nonce, std::span<const std::uint8_t> aad,
    const Ciphertext& ct) {
  ensure_sodium();
  if (ct.size() < crypto_aead_chacha20poly1305_ietf_ABYTES) return std::nullopt;
  Plaintext pt(ct.size() - crypto_aead_chacha20poly1305_ietf_ABYTES);
  unsigned long long plen = 0;
  if (crypto_aead_chacha20poly1305_ietf_decrypt(pt.data(), &plen, nullptr, ct.data(), ct.size(),
                                                aad.data(), aad.size(), nonce.data(),
                                                key.data()) != 0)
    return std::nullopt;
  pt.resize(plen);
  return pt;
}

ConcreteBackend::Ciphertext ConcreteBackend::aead_seal(const SymmetricKey& key, const SeqNonce& n,
                                                       std::span<const std::uint8_t> aad,
                                                       std::span<const std::uint8_t> pt) {
  return aead_seal_raw(key, seq_to_iv(n), aad, pt);
}

std::optional<ConcreteBackend::Plaintext> ConcreteBackend::aead_open(
    const SymmetricKey& key, const SeqNonce& n, std::span<const std::uint8_t> aad,
    const Ciphertext& ct) {
  return aead_open_raw(key, seq_to_iv(n), aad, ct);
}

std::pair<ConcreteBackend::SigningKey, ConcreteBackend::VerificationKey>
ConcreteBackend::gen_signing_keypair(Rand& rng) {
  ByteArray<32> seed{};
  rng.fill(seed);
  return signing_keypair_from_seed(seed);
}

std::pair<ConcreteBackend::SigningKey, ConcreteBackend::VerificationKey>
ConcreteBackend::signing_keypair_from_seed(const ByteArray<32>& seed) {
  ensure_sodium();
  SigningKey sk;
  VerificationKey vk{};
  crypto_sign_seed_keypair(vk.data(), sk.data(), seed.data());
  return {std::move(sk), vk};
}

ConcreteBackend::Signature ConcreteBackend::sign(const SigningKey& sk, const Digest& digest) {
  ensure_sodium();
  Signature sig{};
  unsigned long long slen = 0;
  crypto_sign_detached(sig.data(), &slen, digest.data(), digest.size(), sk.data());
  return sig;
}

bool ConcreteBackend::verify(const VerificationKey& vk, const Digest& digest,
                             const Signature& sig) {
  ensure_sodium();
  return crypto_sign_verify_detached(sig.data(), digest.data(), digest.size(), vk.data()) == 0;
}

ConcreteBackend::Digest ConcreteBackend::hash(std::span<const std::uint8_t> data) {
  ensure_sodium();
  Digest d{};
  crypto_hash_sha256(d.data(), data.data(), data.size());
  return d;
}

ConcreteBackend::Nonce ConcreteBackend::random_nonce(Rand& rng) {
  Nonce n{};
  rng.fill(n);
  return n;
}

ConcreteBackend::Digest ConcreteBackend::commit_hash(const PublicShare& pub, const Nonce& salt) {
  Bytes buf;
  buf.insert(buf.end(), pub.begin(), pub.end());
  buf.insert(buf.end(), salt.begin(), salt.end());
  return hash(buf);
}

ConcreteBackend::SymmetricKey ConcreteBackend::hkdf_extract(std::span<const std::uint8_t> salt,
                                                            std::span<const std::uint8_t> ikm) {
  ensure_sodium();
  // PRK = HMAC-SHA256(key = salt, msg = ikm); empty salt means a zero key.
  static const ByteArray<32> zero_salt{};
  const std::uint8_t* key = salt.empty() ? zero_salt.data() : salt.data();
  std::size_t key_len = salt.empty() ? zero_salt.size() : salt.size();
  crypto_auth_hmacsha256_state st;
  crypto_auth_hmacsha256_init(&st, key, key_len);
  crypto_auth_hmacsha256_update(&st, ikm.data(), ikm.size());
  ByteArray<32> prk{};
  crypto_auth_hmacsha256_final(&st, prk.data());
  return SymmetricKey(prk);
}

Bytes ConcreteBackend::hkdf_expand(const SymmetricKey& prk, const std::string& info,
                                   std::size_t len) {
  ensure_sodium();
  Bytes okm;
  ByteArray<32> t{};
  std::size_t tlen = 0;
  std::uint8_t block = 1;
  while (okm.size() < len) {
    crypto_auth_hmacsha256_state st;
    crypto_auth_hmacsha256_init(&st, prk.data(), prk.size());
    if (tlen > 0) crypto_auth_hmacsha256_update(&st, t.data(), tlen);
    crypto_auth_hmacsha256_update(&st, reinterpret_cast<const std::uint8_t*>(info.data()),
                                  info.size());
    crypto_auth_hmacsha256_update(&st, &block, 1);
    crypto_auth_hmacsha256_final(&st, t.data());
    tlen = 32;
    std::size_t take = std::min<std::size_t>(32, len - okm.size());
    okm.insert(okm.end(), t.begin(), t.begin() + take);
    ++block;
  }
  return okm;
}

ConcreteBackend::Digest ConcreteBackend::transcript_digest(
    const std::vector<TranscriptEntry>& entries) {
  Bytes buf;
  for (const auto& e : entries) {
    put_u32_be(buf, static_cast<std::uint32_t>(e.size()));
    buf.insert(buf.end(), e.begin(), e.end());
  }
  return hash(buf);
}

ConcreteBackend::Plaintext ConcreteBackend::encode_identity(const IdValue& id, const Nonce& n,
                                                            const std::optional<Signature>& sig) {
  Plaintext pt;
  pt.insert(pt.end(), id.begin(), id.end());
  pt.insert(pt.end(), n.begin(), n.end());
  pt.push_back(sig ? 0x01 : 0x00);
  if (sig) pt.insert(pt.end(), sig->begin(), sig->end());
  return pt;
}

std::optional<ConcreteBackend::IdentityParts> ConcreteBackend::decode_identity(
    const Plaintext& pt) {
  if (pt.size() != 33 && pt.size() != 97) return std::nullopt;
  IdentityParts parts;
  std::memcpy(parts.id.data(), pt.data(), 16);
  std::memcpy(parts.nonce.data(), pt.data() + 16, 16);
  if (pt[32] == 0x01) {
    if (pt.size() != 97) return std::nullopt;
    Signature sig{};
    std::memcpy(sig.data(), pt.data() + 33, 64);
    parts.sig = sig;
  } else if (pt[32] == 0x00) {
    if (pt.size() != 33) return std::nullopt;
  } else {
    return std::nullopt;
  }
  return parts;
}

ConcreteBackend::Plaintext ConcreteBackend::encode_ctl(std::uint8_t ctl) { return Plaintext{ctl}; }

std::optional<std::uint8_t> ConcreteBackend::decode_ctl(const Plaintext& pt) {
  if (pt.size() != 1 || (pt[0] != 0x01 && pt[0] != 0x02)) return std::nullopt;
  return pt[0];
}

}  // namespace vkex
