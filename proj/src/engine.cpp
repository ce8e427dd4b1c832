// SPDX-License-Identifier: Apache-2.0
#include "vkex/sym/engine.hpp"

#include <algorithm>
#include <unordered_map>

namespace vkex::sym {

Knowledge::Knowledge(std::vector<Term> terms) {
  for (auto& t : terms) terms_.insert(std::move(t));
}

std::vector<std::string> Knowledge::canonical_listing() const {
  std::vector<std::string> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) out.push_back(t.to_sexpr());
  std::sort(out.begin(), out.end());
  return out;
}

bool Knowledge::subset_of(const Knowledge& other) const {
  for (const auto& t : terms_)
    if (!other.contains(t)) return false;
  return true;
}

namespace {

/// Synthesis check against a fixed saturated set. Depth budget counts
/// constructor applications above set members; set members cost nothing.
class Synth {
 public:
  Synth(const Knowledge& k, int bound) : k_(k), bound_(bound) {}

  bool derivable(const Term& goal) { return rec(goal, bound_); }

 private:
  bool rec(const Term& goal, int budget) {
    if (k_.contains(goal)) return true;
    if (budget <= 0) return false;
    auto it = memo_.find(goal);
    if (it != memo_.end() && it->second >= budget) return false;  // failed with >= budget before
    bool ok = false;
    switch (goal.kind()) {
      case TermKind::Atom:
        ok = false;  // atoms come only from the knowledge set
        break;
      case TermKind::Pair:
      case TermKind::Senc:
      case TermKind::Kdf:
        ok = rec(goal.child(0), budget - 1) && rec(goal.child(1), budget - 1);
        break;
      case TermKind::Sig:
        // signing requires the signing-key atom itself
        ok = goal.child(1).kind() == TermKind::Atom && rec(goal.child(0), budget - 1) &&
             rec(goal.child(1), budget - 1);
        break;
      case TermKind::Hash:
        ok = rec(goal.child(0), budget - 1);
        break;
      case TermKind::Exp:
        ok = rec(goal.child(0), budget - 1);
        break;
      case TermKind::Dh: {
        const Term& x = goal.child(0);
        const Term& peer = goal.child(1);
        ok = rec(x, budget - 1) && rec(peer, budget - 1);
        if (!ok && peer.kind() == TermKind::Exp) {
          // other orientation: know scalar y of the peer share, hold exp(g, x)
          ok = rec(peer.child(0), budget - 1) && rec(Term::exp_g(x), budget - 1);
        }
        break;
      }
    }
    if (!ok) {
      auto& best = memo_[goal];
      best = std::max(best, budget);
    }
    return ok;
  }

  const Knowledge& k_;
  int bound_;
  std::unordered_map<Term, int, TermHash> memo_;
};

}  // namespace

Knowledge close_knowledge(const Knowledge& initial, int depth_bound) {
  Knowledge k = initial;
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<Term> to_add;
    Synth synth(k, depth_bound);
    for (const auto& t : k.terms()) {
      switch (t.kind()) {
        case TermKind::Pair:
          if (!k.contains(t.child(0))) to_add.push_back(t.child(0));
          if (!k.contains(t.child(1))) to_add.push_back(t.child(1));
          break;
        case TermKind::Senc:
          if (!k.contains(t.child(0)) && synth.derivable(t.child(1)))
            to_add.push_back(t.child(0));
          break;
        default:
          break;
      }
    }
    // DH completion: every scalar we hold exponentiates the generator and
    // combines with every group element we hold.
    std::vector<Term> scalars;
    std::vector<Term> elements;
    for (const auto& t : k.terms()) {
      if (t.is_atom_with_prefix("sca:")) scalars.push_back(t);
      if (t.kind() == TermKind::Exp) elements.push_back(t);
    }
    for (const auto& s : scalars) {
      Term e = Term::exp_g(s);
      if (e.depth() <= depth_bound + 1 && !k.contains(e)) to_add.push_back(e);
      for (const auto& peer : elements) {
        Term d = Term::dh(s, peer);
        if (!k.contains(d)) to_add.push_back(d);
      }
    }
    for (const auto& t : to_add) {
      k.add(t);
      changed = true;
    }
  }
  return k;
}

bool derivable(const Term& goal, const Knowledge& k, int depth_bound) {
  Knowledge closed = close_knowledge(k, depth_bound);
  Synth synth(closed, depth_bound);
  return synth.derivable(goal);
}

}  // namespace vkex::sym
