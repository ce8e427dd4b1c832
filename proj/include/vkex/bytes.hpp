// SPDX-License-Identifier: Apache-2.0
#ifndef VKEX_BYTES_HPP
#define VKEX_BYTES_HPP

#include <array>
#include <cstdint>
#include <cstring>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace vkex {

using Bytes = std::vector<std::uint8_t>;

template <std::size_t N>
using ByteArray = std::array<std::uint8_t, N>;

/// Fixed-size byte array wiped on destruction. Used for secret material
/// (scalars, symmetric keys, signing keys) so session teardown leaves no
/// copies behind.
template <std::size_t N>
class SecureArray {
 public:
  SecureArray() { bytes_.fill(0); }
  explicit SecureArray(const ByteArray<N>& b) : bytes_(b) {}
  ~SecureArray() { wipe(); }

  SecureArray(const SecureArray&) = default;
  SecureArray& operator=(const SecureArray&) = default;
  SecureArray(SecureArray&& other) noexcept : bytes_(other.bytes_) { other.wipe(); }
  SecureArray& operator=(SecureArray&& other) noexcept {
    if (this != &other) {
      bytes_ = other.bytes_;
      other.wipe();
    }
    return *this;
  }

  std::uint8_t* data() { return bytes_.data(); }
  const std::uint8_t* data() const { return bytes_.data(); }
  static constexpr std::size_t size() { return N; }
  std::span<const std::uint8_t> span() const { return {bytes_.data(), N}; }
  const ByteArray<N>& raw() const { return bytes_; }

  void wipe() {
    // volatile write loop; not relying on the optimizer's goodwill
    volatile std::uint8_t* p = bytes_.data();
    for (std::size_t i = 0; i < N; ++i) p[i] = 0;
  }

  bool operator==(const SecureArray& o) const { return bytes_ == o.bytes_; }

 private:
  ByteArray<N> bytes_;
};

inline std::string to_hex(std::span<const std::uint8_t> data) {
  static const char* digits = "0123456789abcdef";
  std::string out;
  out.reserve(data.size() * 2);
  for (std::uint8_t b : data) {
    out.push_back(digits[b >> 4]);
    out.push_back(digits[b & 0xF]);
  }
  return out;
}

inline std::string to_hex(const Bytes& b) { return to_hex(std::span<const std::uint8_t>(b)); }

template <std::size_t N>
std::string to_hex(const ByteArray<N>& a) {
  return to_hex(std::span<const std::uint8_t>(a.data(), N));
}

inline int hex_nibble(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

inline Bytes from_hex(const std::string& hex) {
  if (hex.size() % 2 != 0) throw std::invalid_argument("odd hex length");
  Bytes out(hex.size() / 2);
  for (std::size_t i = 0; i < out.size(); ++i) {
    int hi = hex_nibble(hex[2 * i]);
    int lo = hex_nibble(hex[2 * i + 1]);
    if (hi < 0 || lo < 0) throw std::invalid_argument("bad hex digit");
    out[i] = static_cast<std::uint8_t>((hi << 4) | lo);
  }
  return out;
}

template <std::size_t N>
ByteArray<N> array_from_hex(const std::string& hex) {
  Bytes b = from_hex(hex);
  if (b.size() != N) throw std::invalid_argument("hex length mismatch");
  ByteArray<N> out{};
  std::memcpy(out.data(), b.data(), N);
  return out;
}

inline void put_u16_be(Bytes& out, std::uint16_t v) {
  out.push_back(static_cast<std::uint8_t>(v >> 8));
  out.push_back(static_cast<std::uint8_t>(v & 0xFF));
}

inline void put_u32_be(Bytes& out, std::uint32_t v) {
  out.push_back(static_cast<std::uint8_t>(v >> 24));
  out.push_back(static_cast<std::uint8_t>((v >> 16) & 0xFF));
  out.push_back(static_cast<std::uint8_t>((v >> 8) & 0xFF));
  out.push_back(static_cast<std::uint8_t>(v & 0xFF));
}

inline void put_u64_be(Bytes& out, std::uint64_t v) {
  put_u32_be(out, static_cast<std::uint32_t>(v >> 32));
  put_u32_be(out, static_cast<std::uint32_t>(v & 0xFFFFFFFFu));
}

inline std::uint16_t get_u16_be(std::span<const std::uint8_t> in) {
  return static_cast<std::uint16_t>((in[0] << 8) | in[1]);
}

inline std::uint32_t get_u32_be(std::span<const std::uint8_t> in) {
  return (static_cast<std::uint32_t>(in[0]) << 24) | (static_cast<std::uint32_t>(in[1]) << 16) |
         (static_cast<std::uint32_t>(in[2]) << 8) | static_cast<std::uint32_t>(in[3]);
}

inline std::uint64_t get_u64_be(std::span<const std::uint8_t> in) {
  return (static_cast<std::uint64_t>(get_u32_be(in)) << 32) | get_u32_be(in.subspan(4));
}

/// Fixed 16-byte user identifier.
using UserId = ByteArray<16>;

inline UserId user_id_from_name(const std::string& name) {
  if (name.size() > 16) throw std::invalid_argument("user id name too long");
  UserId id{};
  std::memcpy(id.data(), name.data(), name.size());
  return id;
}

inline std::string user_id_name(const UserId& id) {
  std::string s;
  for (std::uint8_t c : id) {
    if (c == 0) break;
    s.push_back(static_cast<char>(c));
  }
  return s;
}

}  // namespace vkex

#endif  // VKEX_BYTES_HPP
