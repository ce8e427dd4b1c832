// SPDX-License-Identifier: Apache-2.0
#ifndef VKEX_SYM_TERM_HPP
#define VKEX_SYM_TERM_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace vkex::sym {

enum class TermKind : std::uint8_t {
  Atom,  // named constant: scalars "sca:", signing keys "sk:", ids "id:", nonces "n:", ...
  Pair,
  Senc,  // symmetric encryption of child[0] under key child[1]
  Sig,   // signature over child[0] with signing-key atom child[1]
  Hash,
  Exp,   // exp(g, scalar atom)
  Dh,    // dh(scalar atom child[0], peer term child[1]); canonicalized
  Kdf,   // kdf(label, child[0], child[1])
};

/// Immutable symbolic term. Structural equality with cached hash; dh terms
/// are canonicalized at construction so both DH orientations compare equal.
class Term {
 public:
  Term() = default;

  static Term atom(const std::string& name);
  static Term pair(const Term& a, const Term& b);
  static Term senc(const Term& m, const Term& k);
  static Term sig(const Term& m, const Term& sk);
  static Term hash(const Term& t);
  static Term exp_g(const Term& scalar_atom);
  static Term dh(const Term& scalar_atom, const Term& peer);
  static Term kdf(const std::string& label, const Term& a, const Term& b);

  bool valid() const { return node_ != nullptr; }
  TermKind kind() const { return node_->kind; }
  const std::string& name() const { return node_->name; }   // Atom name or Kdf label
  const Term& child(std::size_t i) const { return node_->children[i]; }
  std::size_t arity() const { return node_->children.size(); }
  /// Constructor depth: atoms are 1.
  int depth() const { return node_->depth; }
  std::size_t hash_value() const { return node_->hash; }

  bool operator==(const Term& o) const;
  bool operator!=(const Term& o) const { return !(*this == o); }
  /// Total order; used for canonical serialization of term sets.
  bool operator<(const Term& o) const;

  /// Canonical s-expression form, e.g. (senc (pair id:a n:1) (kdf "adhoc1" ...)).
  std::string to_sexpr() const;
  static std::optional<Term> parse_sexpr(const std::string& text);

  bool is_atom_with_prefix(const char* prefix) const;

 private:
  struct Node {
    TermKind kind;
    std::string name;
    std::vector<Term> children;
    std::size_t hash = 0;
    int depth = 1;
  };
  explicit Term(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  static Term make(TermKind kind, std::string name, std::vector<Term> children);

  std::shared_ptr<const Node> node_;
};

struct TermHash {
  std::size_t operator()(const Term& t) const { return t.hash_value(); }
};

}  // namespace vkex::sym

#endif  // VKEX_SYM_TERM_HPP
