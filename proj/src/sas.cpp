// SPDX-License-Identifier: Apache-2.0
#include "vkex/sas.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace vkex {

namespace {

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

std::vector<std::string> tokens(const std::string& input) {
  std::istringstream is(input);
  std::vector<std::string> out;
  std::string w;
  while (is >> w) out.push_back(lower(w));
  return out;
}

}  // namespace

// Defined in words.cpp (generated alongside data/sas_words.txt).
extern const char* const kEvenWords[256];
extern const char* const kOddWords[256];

const WordList& WordList::builtin() {
  static const WordList wl = [] {
    WordList w;
    for (int i = 0; i < 256; ++i) {
      w.even_[i] = kEvenWords[i];
      w.odd_[i] = kOddWords[i];
    }
    return w;
  }();
  return wl;
}

std::optional<WordList> WordList::from_lines(const std::vector<std::string>& lines,
                                             WordListError* err) {
  auto fail = [&](const std::string& m) -> std::optional<WordList> {
    if (err) err->message = m;
    return std::nullopt;
  };
  if (lines.size() != 512) return fail("word list must have 512 lines, got " +
                                       std::to_string(lines.size()));
  WordList wl;
  std::unordered_set<std::string> even_seen, odd_seen;
  for (std::size_t i = 0; i < 512; ++i) {
    const std::string& w = lines[i];
    if (w.empty()) return fail("empty word at line " + std::to_string(i + 1));
    for (char c : w)
      if (!std::islower(static_cast<unsigned char>(c)))
        return fail("word not lowercase at line " + std::to_string(i + 1));
    if (i < 256) {
      if (!even_seen.insert(w).second) return fail("duplicate even word: " + w);
      wl.even_[i] = w;
    } else {
      if (!odd_seen.insert(w).second) return fail("duplicate odd word: " + w);
      wl.odd_[i - 256] = w;
    }
  }
  for (const auto& w : odd_seen)
    if (even_seen.count(w)) return fail("word in both lists: " + w);
  return wl;
}

std::optional<WordList> WordList::load(const std::string& path, WordListError* err) {
  std::ifstream in(path);
  if (!in) {
    if (err) err->message = "cannot open word list: " + path;
    return std::nullopt;
  }
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(line);
  }
  return from_lines(lines, err);
}

std::optional<std::uint8_t> WordList::even_index(const std::string& word) const {
  std::string w = lower(word);
  for (int i = 0; i < 256; ++i)
    if (even_[i] == w) return static_cast<std::uint8_t>(i);
  return std::nullopt;
}

std::optional<std::uint8_t> WordList::odd_index(const std::string& word) const {
  std::string w = lower(word);
  for (int i = 0; i < 256; ++i)
    if (odd_[i] == w) return static_cast<std::uint8_t>(i);
  return std::nullopt;
}

std::string render_digits(SasValue s) {
  char buf[6];
  std::snprintf(buf, sizeof buf, "%05u", static_cast<unsigned>(s));
  return buf;
}

std::pair<std::string, std::string> render_words(SasValue s, const WordList& wl) {
  return {wl.even(static_cast<std::uint8_t>(s >> 8)), wl.odd(static_cast<std::uint8_t>(s & 0xFF))};
}

std::optional<SasValue> parse_rendering(const std::string& input, const WordList& wl,
                                        ParseError* err) {
  auto fail = [&](const std::string& m) -> std::optional<SasValue> {
    if (err) err->message = m;
    return std::nullopt;
  };
  auto toks = tokens(input);
  if (toks.size() == 1 && !toks[0].empty() &&
      std::all_of(toks[0].begin(), toks[0].end(),
                  [](unsigned char c) { return std::isdigit(c); })) {
    if (toks[0].size() != 5) return fail("numeric SAS must be exactly 5 digits");
    unsigned long v = std::stoul(toks[0]);
    if (v > 65535) return fail("numeric SAS out of range");
    return static_cast<SasValue>(v);
  }
  if (toks.size() == 2) {
    auto hi = wl.even_index(toks[0]);
    auto lo = wl.odd_index(toks[1]);
    if (!hi) return fail("unknown even-position word: " + toks[0]);
    if (!lo) return fail("unknown odd-position word: " + toks[1]);
    return static_cast<SasValue>((static_cast<SasValue>(*hi) << 8) | *lo);
  }
  return fail("expected 5 digits or two words");
}

VocalResult vocal_compare(SasValue local, std::optional<SasValue> peer_utterance,
                          SasObligation policy) {
  if (!peer_utterance) {
    return policy == SasObligation::Mandatory ? VocalResult::PolicyViolation : VocalResult::Skipped;
  }
  return local == *peer_utterance ? VocalResult::Match : VocalResult::Mismatch;
}

}  // namespace vkex
