// SPDX-License-Identifier: Apache-2.0
#ifndef VKEX_KEY_SCHEDULE_HPP
#define VKEX_KEY_SCHEDULE_HPP

#include <stdexcept>
#include <vector>

#include "vkex/crypto/concrete.hpp"
#include "vkex/crypto/symbolic.hpp"

namespace vkex {

inline constexpr const char* kLabelAdhoc1 = "adhoc1";  // initiator identity block
inline constexpr const char* kLabelAdhoc2 = "adhoc2";  // responder identity block
inline constexpr const char* kLabelAdhoc3 = "adhoc3";  // SAS control messages
inline constexpr const char* kLabelSession = "sess";
inline constexpr const char* kLabelSas = "sas";

/// Append-only canonical record of the exchanged frames. Both honest parties
/// hold identical transcripts after an unmodified exchange.
template <typename B>
class Transcript {
 public:
  void append(typename B::TranscriptEntry entry) { entries_.push_back(std::move(entry)); }

  typename B::Digest digest() const {
    if (entries_.empty()) throw std::logic_error("transcript digest over empty transcript");
    return B::transcript_digest(entries_);
  }

  std::size_t size() const { return entries_.size(); }
  const std::vector<typename B::TranscriptEntry>& entries() const { return entries_; }

 private:
  std::vector<typename B::TranscriptEntry> entries_;
};

/// The three ad-hoc protection keys, the session key, and the SAS.
template <typename B>
struct KeySchedule {
  typename B::SymmetricKey k1;
  typename B::SymmetricKey k2;
  typename B::SymmetricKey k3;
  typename B::SymmetricKey session_key;
  typename B::Sas sas;
};

/// Extract-then-expand derivation with five fixed labels. The SAS comes from
/// its own label, so uttering it aloud reveals nothing about the session key.
template <typename B>
KeySchedule<B> derive_schedule(const typename B::SharedSecret& z, const typename B::Digest& td) {
  if constexpr (B::is_symbolic) {
    return KeySchedule<B>{
        B::kdf(kLabelAdhoc1, z, td), B::kdf(kLabelAdhoc2, z, td), B::kdf(kLabelAdhoc3, z, td),
        B::kdf(kLabelSession, z, td), B::kdf(kLabelSas, z, td)};
  } else {
    auto prk = B::hkdf_extract(std::span<const std::uint8_t>(td.data(), td.size()), z.span());
    auto expand_key = [&](const char* label) {
      Bytes okm = B::hkdf_expand(prk, label, 32);
      ByteArray<32> out{};
      std::copy(okm.begin(), okm.end(), out.begin());
      return typename B::SymmetricKey(out);
    };
    KeySchedule<B> ks{expand_key(kLabelAdhoc1), expand_key(kLabelAdhoc2), expand_key(kLabelAdhoc3),
                      expand_key(kLabelSession), {}};
    Bytes sas_bytes = B::hkdf_expand(prk, kLabelSas, 32);
    ks.sas = static_cast<std::uint16_t>((sas_bytes[0] << 8) | sas_bytes[1]);
    return ks;
  }
}

}  // namespace vkex

#endif  // VKEX_KEY_SCHEDULE_HPP
