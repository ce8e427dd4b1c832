// SPDX-License-Identifier: Apache-2.0
#include "vkex/rng.hpp"

#include <sodium.h>

#include <cstring>

namespace vkex {

namespace {
void ensure_sodium() {
  static const int rc = sodium_init();
  if (rc < 0) throw std::runtime_error("sodium_init failed");
}
}  // namespace

DetRng::DetRng(std::uint64_t seed) {
  ensure_sodium();
  Bytes ikm;
  const char* tag = "vkex.rng.v1";
  ikm.insert(ikm.end(), tag, tag + std::strlen(tag));
  for (int i = 0; i < 8; ++i) ikm.push_back(static_cast<std::uint8_t>((seed >> (8 * i)) & 0xFF));
  crypto_hash_sha256(key_.data(), ikm.data(), ikm.size());
  pos_ = buf_.size();
}

void DetRng::refill() {
  std::uint8_t nonce[8];
  for (int i = 0; i < 8; ++i) nonce[i] = static_cast<std::uint8_t>((block_ >> (8 * i)) & 0xFF);
  ++block_;
  buf_.fill(0);
  crypto_stream_chacha20(buf_.data(), buf_.size(), nonce, key_.data());
  pos_ = 0;
}

void DetRng::fill(std::span<std::uint8_t> out) {
  std::size_t done = 0;
  while (done < out.size()) {
    if (pos_ == buf_.size()) refill();
    std::size_t n = std::min(out.size() - done, buf_.size() - pos_);
    std::memcpy(out.data() + done, buf_.data() + pos_, n);
    pos_ += n;
    done += n;
  }
}

std::uint64_t DetRng::next_u64() {
  std::uint8_t b[8];
  fill(b);
  std::uint64_t v = 0;
  for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(b[i]) << (8 * i);
  return v;
}

double DetRng::next_unit() {
  return static_cast<double>(next_u64() >> 11) * (1.0 / 9007199254740992.0);
}

std::uint64_t DetRng::next_below(std::uint64_t bound_inclusive) {
  if (bound_inclusive == UINT64_MAX) return next_u64();
  std::uint64_t n = bound_inclusive + 1;
  // rejection sampling, unbiased
  std::uint64_t limit = UINT64_MAX - (UINT64_MAX % n);
  for (;;) {
    std::uint64_t v = next_u64();
    if (v < limit || limit == 0) return v % n;
  }
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t lane, std::uint64_t index) {
  ensure_sodium();
  std::uint8_t in[24];
  for (int i = 0; i < 8; ++i) in[i] = static_cast<std::uint8_t>((seed >> (8 * i)) & 0xFF);
  for (int i = 0; i < 8; ++i) in[8 + i] = static_cast<std::uint8_t>((lane >> (8 * i)) & 0xFF);
  for (int i = 0; i < 8; ++i) in[16 + i] = static_cast<std::uint8_t>((index >> (8 * i)) & 0xFF);
  std::uint8_t h[32];
  crypto_hash_sha256(h, in, sizeof in);
  std::uint64_t v = 0;
  for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(h[i]) << (8 * i);
  return v;
}

}  // namespace vkex
