// SPDX-License-Identifier: Apache-2.0
#ifndef VKEX_RNG_HPP
#define VKEX_RNG_HPP

#include <cstdint>
#include <span>
#include <string>

#include "vkex/bytes.hpp"

namespace vkex {

/// Seedable deterministic CSPRNG (ChaCha20 keystream keyed from the seed).
/// One instance per session; identical seeds reproduce identical draws.
class DetRng {
 public:
  explicit DetRng(std::uint64_t seed);

  void fill(std::span<std::uint8_t> out);
  std::uint64_t next_u64();
  /// Uniform double in [0, 1), 53-bit resolution.
  double next_unit();
  /// Uniform integer in [0, bound] (bound inclusive).
  std::uint64_t next_below(std::uint64_t bound_inclusive);

 private:
  void refill();

  ByteArray<32> key_{};
  ByteArray<4096> buf_{};
  std::size_t pos_ = 0;
  std::uint64_t block_ = 0;
};

/// Derives an independent child seed, for fanning one scenario seed out to
/// per-trial and per-endpoint generators.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t lane, std::uint64_t index);

}  // namespace vkex

#endif  // VKEX_RNG_HPP
