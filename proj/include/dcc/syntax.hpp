#pragma once

// Object formulae and arrow terms of the free dagger compact closed
// category with biproducts, their concrete syntax, typing and dagger
// elimination.

#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dcc/error.hpp"
#include "dcc/freegroup.hpp"

namespace dcc {

enum class ObjKind { P, Unit, Zero, Star, Tensor, Oplus };

class Obj {
 public:
  static Obj p();
  static Obj unit();  // I
  static Obj zero();  // 0
  static Obj star(const Obj& a);
  static Obj tensor(const Obj& a, const Obj& b);
  static Obj oplus(const Obj& a, const Obj& b);

  ObjKind kind() const { return node_->kind; }
  /// Operand of a star; left operand of a binary node.
  const Obj& lhs() const { return node_->children[0]; }
  const Obj& rhs() const { return node_->children[1]; }
  std::size_t depth() const;

  friend bool operator==(const Obj& a, const Obj& b);

 private:
  struct Node {
    ObjKind kind;
    std::vector<Obj> children;
  };
  explicit Obj(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

std::string print(const Obj& a);

enum class Prim {
  Gen, GenInv, Id, Alpha, AlphaInv, Lam, LamInv, Sigma, Eta, Eps,
  Pi1, Pi2, Iota1, Iota2, Zero
};

enum class TermKind { Prim, Dagger, Tensor, Oplus, Plus, Compose };

/// Number of object arguments each primitive takes (0 for generators).
std::size_t arity(Prim p);
std::string_view prim_name(Prim p);

class Term {
 public:
  static Term gen(Generator g, SourceLoc loc = {});
  static Term geninv(Generator g, SourceLoc loc = {});
  /// A structural primitive; throws std::invalid_argument on wrong arity.
  static Term prim(Prim p, std::vector<Obj> args, SourceLoc loc = {});
  static Term dagger(const Term& f, SourceLoc loc = {});
  static Term tensor(const Term& f, const Term& g, SourceLoc loc = {});
  static Term oplus(const Term& f, const Term& g, SourceLoc loc = {});
  static Term plus(const Term& f, const Term& g, SourceLoc loc = {});
  /// g∘f, written "g . f".
  static Term compose(const Term& g, const Term& f, SourceLoc loc = {});

  TermKind kind() const { return node_->kind; }
  Prim prim() const { return node_->prim; }
  Generator generator() const { return node_->gen; }
  const std::vector<Obj>& args() const { return node_->args; }
  /// Operand of a dagger; left operand of a binary node (g in g∘f).
  const Term& lhs() const { return node_->children[0]; }
  const Term& rhs() const { return node_->children[1]; }
  SourceLoc loc() const { return node_->loc; }

  std::size_t depth() const;
  bool has_dagger() const;

  /// Structural equality; source locations are ignored.
  friend bool operator==(const Term& a, const Term& b);

 private:
  struct Node {
    TermKind kind;
    Prim prim = Prim::Id;
    Generator gen;
    std::vector<Obj> args;
    std::vector<Term> children;
    SourceLoc loc;
  };
  explicit Term(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  static Term binary(TermKind k, const Term& a, const Term& b, SourceLoc loc);
  std::shared_ptr<const Node> node_;
};

struct Typing {
  Obj src;
  Obj tgt;
};

/// Derives (source, target). Throws TypeError naming the offending node's
/// location. With an alphabet, generators outside it are rejected.
Typing typecheck(const Term& t, const Alphabet* alphabet = nullptr);

/// Prints with minimal parentheses; generator names come from the alphabet.
std::string print(const Term& t, const Alphabet& alphabet);

/// A term with every dagger node removed, denoting the same arrow.
Term eliminate_dagger(const Term& t);

struct Check {
  Term lhs;
  Term rhs;
  SourceLoc loc;
};

struct Program {
  Alphabet alphabet;
  std::vector<std::pair<std::string, Term>> lets;
  std::vector<Check> checks;

  const Term* find(std::string_view name) const;
};

/// Parses a `.ccc` file. Let-bound names are substituted at use sites.
/// Throws ParseError with the position of the offending token.
Program parse_program(std::string_view text);

/// Parses a single term or object against a fixed alphabet.
Term parse_term(std::string_view text, const Alphabet& alphabet);
Obj parse_object(std::string_view text);

}  // namespace dcc
