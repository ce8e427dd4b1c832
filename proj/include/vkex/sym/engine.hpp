// SPDX-License-Identifier: Apache-2.0
#ifndef VKEX_SYM_ENGINE_HPP
#define VKEX_SYM_ENGINE_HPP

#include <unordered_set>
#include <vector>

#include "vkex/sym/term.hpp"

namespace vkex::sym {

inline constexpr int kDefaultDepthBound = 6;

/// A set of terms the adversary holds. After close_knowledge it is saturated:
/// a fixpoint of the decomposition rules, with Diffie-Hellman completion over
/// the scalar atoms and group elements present.
class Knowledge {
 public:
  Knowledge() = default;
  explicit Knowledge(std::vector<Term> terms);

  void add(const Term& t) { terms_.insert(t); }
  bool contains(const Term& t) const { return terms_.count(t) > 0; }
  std::size_t size() const { return terms_.size(); }
  const std::unordered_set<Term, TermHash>& terms() const { return terms_; }

  /// Sorted canonical s-expressions, for golden-file comparison.
  std::vector<std::string> canonical_listing() const;

  bool subset_of(const Knowledge& other) const;

 private:
  std::unordered_set<Term, TermHash> terms_;
};

/// Saturates `initial` under the adversary deduction rules:
///   - unpairing, and decryption of senc(m, k) once k is derivable,
///   - exp(g, x) for every derivable scalar atom x,
///   - dh(x, exp(g, y)) whenever scalar x and the group element are derivable.
/// Synthesis-only rules (pairing, hashing, kdf, senc, sig composition) do not
/// enlarge the stored set; `derivable` decides them on demand. The result is
/// a fixpoint: closing it again adds nothing, and membership of any goal term
/// agrees with the bounded least fixpoint of the full rule set.
Knowledge close_knowledge(const Knowledge& initial, int depth_bound = kDefaultDepthBound);

/// True iff `goal` lies in the closure of `k`, composing at most
/// `depth_bound` constructor levels above already-derivable terms.
bool derivable(const Term& goal, const Knowledge& k, int depth_bound = kDefaultDepthBound);

}  // namespace vkex::sym

#endif  // VKEX_SYM_ENGINE_HPP
