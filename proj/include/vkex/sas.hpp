// SPDX-License-Identifier: Apache-2.0
#ifndef VKEX_SAS_HPP
#define VKEX_SAS_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace vkex {

/// 16-bit short authentication string value.
using SasValue = std::uint16_t;

enum class SasObligation : std::uint8_t { Optional, Mandatory };

enum class VerificationOutcome : std::uint8_t { Match, Mismatch, Skipped };

enum class VocalResult : std::uint8_t { Match, Mismatch, Skipped, PolicyViolation };

struct WordListError {
  std::string message;
};

/// Two disjoint 256-word lists: the high byte renders from the even list, the
/// low byte from the odd list, so a transposed utterance never parses.
class WordList {
 public:
  static const WordList& builtin();
  /// Loads the external format: 512 lines, lowercase, lines 1-256 even list,
  /// 257-512 odd list.
  static std::optional<WordList> load(const std::string& path, WordListError* err = nullptr);
  static std::optional<WordList> from_lines(const std::vector<std::string>& lines,
                                            WordListError* err = nullptr);

  const std::string& even(std::uint8_t index) const { return even_[index]; }
  const std::string& odd(std::uint8_t index) const { return odd_[index]; }

  std::optional<std::uint8_t> even_index(const std::string& word) const;
  std::optional<std::uint8_t> odd_index(const std::string& word) const;

 private:
  WordList() = default;
  std::array<std::string, 256> even_;
  std::array<std::string, 256> odd_;
};

/// Zero-padded 5-digit decimal rendering.
std::string render_digits(SasValue s);

/// (even_words[high byte], odd_words[low byte]).
std::pair<std::string, std::string> render_words(SasValue s, const WordList& wl);

struct ParseError {
  std::string message;
};

/// Inverse of whichever rendering matches; case and whitespace tolerant for
/// words, exactly five digits for the decimal form.
std::optional<SasValue> parse_rendering(const std::string& input, const WordList& wl,
                                        ParseError* err = nullptr);

/// Models the vocal equality check over the authenticated voice channel.
/// An absent utterance means the user skipped the comparison, which is only
/// permitted when the policy does not mandate it.
VocalResult vocal_compare(SasValue local, std::optional<SasValue> peer_utterance,
                          SasObligation policy);

}  // namespace vkex

#endif  // VKEX_SAS_HPP
