// SPDX-License-Identifier: Apache-2.0
#include "vkex/sym/term.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace vkex::sym {

namespace {

std::size_t mix(std::size_t h, std::size_t v) {
  return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

const char* kind_tag(TermKind k) {
  switch (k) {
    case TermKind::Atom: return "atom";
    case TermKind::Pair: return "pair";
    case TermKind::Senc: return "senc";
    case TermKind::Sig: return "sig";
    case TermKind::Hash: return "hash";
    case TermKind::Exp: return "exp";
    case TermKind::Dh: return "dh";
    case TermKind::Kdf: return "kdf";
  }
  return "?";
}

}  // namespace

Term Term::make(TermKind kind, std::string name, std::vector<Term> children) {
  auto node = std::make_shared<Node>();
  node->kind = kind;
  node->name = std::move(name);
  std::size_t h = mix(std::hash<int>{}(static_cast<int>(kind)), std::hash<std::string>{}(node->name));
  int depth = 1;
  for (const auto& c : children) {
    h = mix(h, c.hash_value());
    depth = std::max(depth, c.depth() + 1);
  }
  node->hash = h;
  node->depth = depth;
  node->children = std::move(children);
  return Term(std::move(node));
}

Term Term::atom(const std::string& name) { return make(TermKind::Atom, name, {}); }

Term Term::pair(const Term& a, const Term& b) { return make(TermKind::Pair, "", {a, b}); }

Term Term::senc(const Term& m, const Term& k) { return make(TermKind::Senc, "", {m, k}); }

Term Term::sig(const Term& m, const Term& sk) { return make(TermKind::Sig, "", {m, sk}); }

Term Term::hash(const Term& t) { return make(TermKind::Hash, "", {t}); }

Term Term::exp_g(const Term& scalar_atom) {
  if (scalar_atom.kind() != TermKind::Atom) throw std::invalid_argument("exp: scalar must be atom");
  return make(TermKind::Exp, "", {scalar_atom});
}

Term Term::dh(const Term& scalar_atom, const Term& peer) {
  if (scalar_atom.kind() != TermKind::Atom) throw std::invalid_argument("dh: scalar must be atom");
  // dh(x, exp(g, y)) and dh(y, exp(g, x)) denote the same group element;
  // canonical form puts the lexicographically smaller scalar first.
  if (peer.kind() == TermKind::Exp) {
    const Term& other = peer.child(0);
    if (other.name() < scalar_atom.name())
      return make(TermKind::Dh, "", {other, Term::exp_g(scalar_atom)});
  }
  return make(TermKind::Dh, "", {scalar_atom, peer});
}

Term Term::kdf(const std::string& label, const Term& a, const Term& b) {
  return make(TermKind::Kdf, label, {a, b});
}

bool Term::operator==(const Term& o) const {
  if (node_ == o.node_) return true;
  if (!node_ || !o.node_) return false;
  if (node_->hash != o.node_->hash || node_->kind != o.node_->kind ||
      node_->name != o.node_->name || node_->children.size() != o.node_->children.size())
    return false;
  for (std::size_t i = 0; i < node_->children.size(); ++i)
    if (!(node_->children[i] == o.node_->children[i])) return false;
  return true;
}

bool Term::operator<(const Term& o) const { return to_sexpr() < o.to_sexpr(); }

bool Term::is_atom_with_prefix(const char* prefix) const {
  return valid() && kind() == TermKind::Atom && name().rfind(prefix, 0) == 0;
}

std::string Term::to_sexpr() const {
  if (!node_) return "()";
  std::ostringstream os;
  std::function<void(const Term&)> rec = [&](const Term& t) {
    if (t.kind() == TermKind::Atom) {
      os << t.name();
      return;
    }
    os << '(' << kind_tag(t.kind());
    if (t.kind() == TermKind::Kdf) os << " \"" << t.name() << '"';
    if (t.kind() == TermKind::Exp) os << " g";
    for (std::size_t i = 0; i < t.arity(); ++i) {
      os << ' ';
      rec(t.child(i));
    }
    os << ')';
  };
  rec(*this);
  return os.str();
}

namespace {

struct Parser {
  const std::string& s;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\n' || s[pos] == '\t')) ++pos;
  }

  std::optional<std::string> token() {
    skip_ws();
    std::size_t start = pos;
    while (pos < s.size() && s[pos] != ' ' && s[pos] != '(' && s[pos] != ')' && s[pos] != '\n' &&
           s[pos] != '\t')
      ++pos;
    if (pos == start) return std::nullopt;
    return s.substr(start, pos - start);
  }

  std::optional<Term> parse() {
    skip_ws();
    if (pos >= s.size()) return std::nullopt;
    if (s[pos] != '(') {
      auto t = token();
      if (!t) return std::nullopt;
      return Term::atom(*t);
    }
    ++pos;  // consume '('
    auto tag = token();
    if (!tag) return std::nullopt;
    std::string label;
    if (*tag == "kdf") {
      skip_ws();
      if (pos >= s.size() || s[pos] != '"') return std::nullopt;
      ++pos;
      std::size_t end = s.find('"', pos);
      if (end == std::string::npos) return std::nullopt;
      label = s.substr(pos, end - pos);
      pos = end + 1;
    }
    if (*tag == "exp") {
      auto g = token();  // generator marker
      if (!g || *g != "g") return std::nullopt;
    }
    std::vector<Term> children;
    for (;;) {
      skip_ws();
      if (pos < s.size() && s[pos] == ')') {
        ++pos;
        break;
      }
      auto c = parse();
      if (!c) return std::nullopt;
      children.push_back(*c);
    }
    if (*tag == "pair" && children.size() == 2) return Term::pair(children[0], children[1]);
    if (*tag == "senc" && children.size() == 2) return Term::senc(children[0], children[1]);
    if (*tag == "sig" && children.size() == 2) return Term::sig(children[0], children[1]);
    if (*tag == "hash" && children.size() == 1) return Term::hash(children[0]);
    if (*tag == "exp" && children.size() == 1) return Term::exp_g(children[0]);
    if (*tag == "dh" && children.size() == 2) return Term::dh(children[0], children[1]);
    if (*tag == "kdf" && children.size() == 2) return Term::kdf(label, children[0], children[1]);
    return std::nullopt;
  }
};

}  // namespace

std::optional<Term> Term::parse_sexpr(const std::string& text) {
  Parser p{text};
  auto t = p.parse();
  if (!t) return std::nullopt;
  p.skip_ws();
  if (p.pos != text.size()) return std::nullopt;
  return t;
}

}  // namespace vkex::sym
