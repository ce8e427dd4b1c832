// SPDX-License-Identifier: Apache-2.0
#ifndef VKEX_CRYPTO_SYMBOLIC_HPP
#define VKEX_CRYPTO_SYMBOLIC_HPP

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "vkex/bytes.hpp"
#include "vkex/crypto/concrete.hpp"
#include "vkex/sym/term.hpp"

namespace vkex {

/// Deterministic source of fresh symbolic atoms plus numeric draws for the
/// protocol plumbing (role nonces). Namespaced per endpoint per trial.
class FreshSource {
 public:
  FreshSource(std::string ns, std::uint64_t seed) : ns_(std::move(ns)), state_(seed) {}

  sym::Term fresh_atom(const char* prefix) {
    return sym::Term::atom(std::string(prefix) + ns_ + ":" + std::to_string(counter_++));
  }

  std::uint64_t next_u64() {
    // splitmix64
    state_ += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  const std::string& ns() const { return ns_; }

 private:
  std::string ns_;
  std::uint64_t state_;
  std::uint64_t counter_ = 0;
};

/// Term-level backend: the same protocol code runs over the symbolic algebra,
/// assuming perfect primitives. Sealing ignores nonces and aad; tampering is
/// any term substitution, which decryption detects as a key/shape mismatch.
struct SymbolicBackend {
  static constexpr bool is_symbolic = true;

  using Rand = FreshSource;
  using Term = sym::Term;
  using SecretScalar = Term;
  using PublicShare = Term;
  using SharedSecret = Term;
  using SymmetricKey = Term;
  using SigningKey = Term;
  using VerificationKey = Term;
  using Signature = Term;
  using Digest = Term;
  using Nonce = Term;
  using Ciphertext = Term;
  using Plaintext = Term;
  using IdValue = Term;
  using Sas = Term;
  using TranscriptEntry = Term;

  static std::pair<SecretScalar, PublicShare> gen_keypair(Rand& rng) {
    Term scalar = rng.fresh_atom("sca:");
    return {scalar, Term::exp_g(scalar)};
  }

  static std::optional<SharedSecret> dh(const SecretScalar& secret, const PublicShare& peer) {
    return Term::dh(secret, peer);
  }

  static Ciphertext aead_seal(const SymmetricKey& key, const SeqNonce&,
                              std::span<const std::uint8_t>, const Plaintext& pt) {
    return Term::senc(pt, key);
  }

  static std::optional<Plaintext> aead_open(const SymmetricKey& key, const SeqNonce&,
                                            std::span<const std::uint8_t>, const Ciphertext& ct) {
    if (!ct.valid() || ct.kind() != sym::TermKind::Senc || !(ct.child(1) == key))
      return std::nullopt;
    return ct.child(0);
  }

  static std::pair<SigningKey, VerificationKey> signing_keypair_from_name(const std::string& name) {
    return {Term::atom("sk:" + name), Term::atom("vk:" + name)};
  }

  static Signature sign(const SigningKey& sk, const Digest& digest) {
    return Term::sig(digest, sk);
  }

  static bool verify(const VerificationKey& vk, const Digest& digest, const Signature& sig) {
    if (!sig.valid() || sig.kind() != sym::TermKind::Sig) return false;
    if (!(sig.child(0) == digest)) return false;
    const Term& sk = sig.child(1);
    if (!vk.is_atom_with_prefix("vk:") || !sk.is_atom_with_prefix("sk:")) return false;
    return vk.name().substr(3) == sk.name().substr(3);
  }

  static Digest hash_term(const Term& t) { return Term::hash(t); }

  static Nonce random_nonce(Rand& rng) { return rng.fresh_atom("n:"); }

  static Digest commit_hash(const PublicShare& pub, const Nonce& salt) {
    return Term::hash(Term::pair(pub, salt));
  }

  static Digest transcript_digest(const std::vector<TranscriptEntry>& entries) {
    return Term::hash(fold_pairs(entries));
  }

  static Term fold_pairs(const std::vector<Term>& ts) {
    if (ts.empty()) return Term::atom("nil");
    Term acc = ts.back();
    for (std::size_t i = ts.size() - 1; i-- > 0;) acc = Term::pair(ts[i], acc);
    return acc;
  }

  static SymmetricKey kdf(const std::string& label, const SharedSecret& z, const Digest& td) {
    return Term::kdf(label, z, td);
  }

  static IdValue id_value(const UserId& id) { return Term::atom("id:" + user_id_name(id)); }

  static Plaintext encode_identity(const IdValue& id, const Nonce& n,
                                   const std::optional<Signature>& sig) {
    Term tail = sig ? *sig : Term::atom("nosig");
    return Term::pair(id, Term::pair(n, tail));
  }

  struct IdentityParts {
    IdValue id;
    Nonce nonce;
    std::optional<Signature> sig;
  };

  static std::optional<IdentityParts> decode_identity(const Plaintext& pt) {
    using sym::TermKind;
    if (!pt.valid() || pt.kind() != TermKind::Pair) return std::nullopt;
    const Term& inner = pt.child(1);
    if (inner.kind() != TermKind::Pair) return std::nullopt;
    IdentityParts parts{pt.child(0), inner.child(0), std::nullopt};
    const Term& tail = inner.child(1);
    if (tail.kind() == TermKind::Sig) parts.sig = tail;
    else if (!(tail == Term::atom("nosig"))) return std::nullopt;
    return parts;
  }

  static Plaintext encode_ctl(std::uint8_t ctl) {
    return Term::atom(ctl == 0x01 ? "ctl:req" : "ctl:conf");
  }

  static std::optional<std::uint8_t> decode_ctl(const Plaintext& pt) {
    if (pt == Term::atom("ctl:req")) return 0x01;
    if (pt == Term::atom("ctl:conf")) return 0x02;
    return std::nullopt;
  }
};

}  // namespace vkex

#endif  // VKEX_CRYPTO_SYMBOLIC_HPP
