#include "dcc/syntax.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace dcc {

Obj Obj::p() {
  static const Obj leaf(std::make_shared<const Node>(Node{ObjKind::P, {}}));
  return leaf;
}
Obj Obj::unit() {
  static const Obj leaf(std::make_shared<const Node>(Node{ObjKind::Unit, {}}));
  return leaf;
}
Obj Obj::zero() {
  static const Obj leaf(std::make_shared<const Node>(Node{ObjKind::Zero, {}}));
  return leaf;
}
Obj Obj::star(const Obj& a) { return Obj(std::make_shared<const Node>(Node{ObjKind::Star, {a}})); }
Obj Obj::tensor(const Obj& a, const Obj& b) {
  return Obj(std::make_shared<const Node>(Node{ObjKind::Tensor, {a, b}}));
}
Obj Obj::oplus(const Obj& a, const Obj& b) {
  return Obj(std::make_shared<const Node>(Node{ObjKind::Oplus, {a, b}}));
}

std::size_t Obj::depth() const {
  std::size_t d = 0;
  for (const auto& c : node_->children) d = std::max(d, c.depth());
  return node_->children.empty() ? 0 : d + 1;
}

bool operator==(const Obj& a, const Obj& b) {
  if (a.node_ == b.node_) return true;
  return a.kind() == b.kind() && a.node_->children == b.node_->children;
}

namespace {

int obj_prec(ObjKind k) {
  switch (k) {
    case ObjKind::Oplus: return 0;
    case ObjKind::Tensor: return 1;
    case ObjKind::Star: return 2;
    default: return 3;
  }
}

std::string print_obj(const Obj& a, int ctx) {
  std::string s;
  switch (a.kind()) {
    case ObjKind::P: return "p";
    case ObjKind::Unit: return "I";
    case ObjKind::Zero: return "0";
    case ObjKind::Star: s = print_obj(a.lhs(), 2) + "^*"; break;
    case ObjKind::Tensor: s = print_obj(a.lhs(), 1) + " (x) " + print_obj(a.rhs(), 2); break;
    case ObjKind::Oplus: s = print_obj(a.lhs(), 0) + " (+) " + print_obj(a.rhs(), 1); break;
  }
  return obj_prec(a.kind()) < ctx ? "(" + s + ")" : s;
}

constexpr std::array<std::string_view, 15> kPrimNames = {
    "gen", "inv", "id", "alpha", "alpha_inv", "lam", "lam_inv", "sigma", "eta", "eps",
    "pi1", "pi2", "iota1", "iota2", "zero"};

constexpr std::array<std::size_t, 15> kArity = {0, 0, 1, 3, 3, 1, 1, 2, 1, 1, 2, 2, 2, 2, 2};

}  // namespace

std::string print(const Obj& a) { return print_obj(a, 0); }

std::size_t arity(Prim p) { return kArity[static_cast<std::size_t>(p)]; }
std::string_view prim_name(Prim p) { return kPrimNames[static_cast<std::size_t>(p)]; }

Term Term::gen(Generator g, SourceLoc loc) {
  return Term(std::make_shared<const Node>(Node{TermKind::Prim, Prim::Gen, g, {}, {}, loc}));
}
Term Term::geninv(Generator g, SourceLoc loc) {
  return Term(std::make_shared<const Node>(Node{TermKind::Prim, Prim::GenInv, g, {}, {}, loc}));
}
Term Term::prim(Prim p, std::vector<Obj> args, SourceLoc loc) {
  if (p == Prim::Gen || p == Prim::GenInv) throw std::invalid_argument("use Term::gen/geninv");
  if (args.size() != arity(p)) {
    throw std::invalid_argument(std::string(prim_name(p)) + " takes " + std::to_string(arity(p)) +
                                " object arguments");
  }
  return Term(std::make_shared<const Node>(Node{TermKind::Prim, p, {}, std::move(args), {}, loc}));
}
Term Term::dagger(const Term& f, SourceLoc loc) {
  return Term(std::make_shared<const Node>(Node{TermKind::Dagger, Prim::Id, {}, {}, {f}, loc}));
}
Term Term::binary(TermKind k, const Term& a, const Term& b, SourceLoc loc) {
  return Term(std::make_shared<const Node>(Node{k, Prim::Id, {}, {}, {a, b}, loc}));
}
Term Term::tensor(const Term& f, const Term& g, SourceLoc loc) { return binary(TermKind::Tensor, f, g, loc); }
Term Term::oplus(const Term& f, const Term& g, SourceLoc loc) { return binary(TermKind::Oplus, f, g, loc); }
Term Term::plus(const Term& f, const Term& g, SourceLoc loc) { return binary(TermKind::Plus, f, g, loc); }
Term Term::compose(const Term& g, const Term& f, SourceLoc loc) { return binary(TermKind::Compose, g, f, loc); }

std::size_t Term::depth() const {
  std::size_t d = 0;
  for (const auto& c : node_->children) d = std::max(d, c.depth());
  return node_->children.empty() ? 0 : d + 1;
}

bool Term::has_dagger() const {
  if (kind() == TermKind::Dagger) return true;
  return std::any_of(node_->children.begin(), node_->children.end(),
                     [](const Term& c) { return c.has_dagger(); });
}

bool operator==(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  if (a.kind() == TermKind::Prim) {
    return a.prim() == b.prim() && a.generator() == b.generator() && a.args() == b.args();
  }
  return a.node_->children == b.node_->children;
}

namespace {

[[noreturn]] void type_fail(const Term& t, const std::string& msg) { throw TypeError(t.loc(), msg); }

Typing prim_type(const Term& t) {
  const auto& a = t.args();
  using O = Obj;
  switch (t.prim()) {
    case Prim::Gen:
    case Prim::GenInv: return {O::p(), O::p()};
    case Prim::Id: return {a[0], a[0]};
    case Prim::Alpha:
      return {O::tensor(a[0], O::tensor(a[1], a[2])), O::tensor(O::tensor(a[0], a[1]), a[2])};
    case Prim::AlphaInv:
      return {O::tensor(O::tensor(a[0], a[1]), a[2]), O::tensor(a[0], O::tensor(a[1], a[2]))};
    case Prim::Lam: return {O::tensor(O::unit(), a[0]), a[0]};
    case Prim::LamInv: return {a[0], O::tensor(O::unit(), a[0])};
    case Prim::Sigma: return {O::tensor(a[0], a[1]), O::tensor(a[1], a[0])};
    case Prim::Eta: return {O::unit(), O::tensor(O::star(a[0]), a[0])};
    case Prim::Eps: return {O::tensor(a[0], O::star(a[0])), O::unit()};
    case Prim::Pi1: return {O::oplus(a[0], a[1]), a[0]};
    case Prim::Pi2: return {O::oplus(a[0], a[1]), a[1]};
    case Prim::Iota1: return {a[0], O::oplus(a[0], a[1])};
    case Prim::Iota2: return {a[1], O::oplus(a[0], a[1])};
    case Prim::Zero: return {a[0], a[1]};
  }
  type_fail(t, "unknown primitive");
}

std::string arrow(const Typing& ty) { return print(ty.src) + " -> " + print(ty.tgt); }

}  // namespace

Typing typecheck(const Term& t, const Alphabet* alphabet) {
  switch (t.kind()) {
    case TermKind::Prim:
      if (alphabet && (t.prim() == Prim::Gen || t.prim() == Prim::GenInv) &&
          !alphabet->contains(t.generator())) {
        type_fail(t, "undeclared generator #" + std::to_string(t.generator().id));
      }
      return prim_type(t);
    case TermKind::Dagger: {
      auto ty = typecheck(t.lhs(), alphabet);
      return {ty.tgt, ty.src};
    }
    case TermKind::Tensor: {
      auto f = typecheck(t.lhs(), alphabet);
      auto g = typecheck(t.rhs(), alphabet);
      return {Obj::tensor(f.src, g.src), Obj::tensor(f.tgt, g.tgt)};
    }
    case TermKind::Oplus: {
      auto f = typecheck(t.lhs(), alphabet);
      auto g = typecheck(t.rhs(), alphabet);
      return {Obj::oplus(f.src, g.src), Obj::oplus(f.tgt, g.tgt)};
    }
    case TermKind::Plus: {
      auto f = typecheck(t.lhs(), alphabet);
      auto g = typecheck(t.rhs(), alphabet);
      if (!(f.src == g.src) || !(f.tgt == g.tgt)) {
        type_fail(t, "cannot add " + arrow(f) + " and " + arrow(g));
      }
      return f;
    }
    case TermKind::Compose: {
      auto g = typecheck(t.lhs(), alphabet);
      auto f = typecheck(t.rhs(), alphabet);
      if (!(f.tgt == g.src)) {
        type_fail(t, "cannot compose " + arrow(g) + " after " + arrow(f));
      }
      return {f.src, g.tgt};
    }
  }
  type_fail(t, "unknown term");
}

namespace {

int term_prec(TermKind k) {
  switch (k) {
    case TermKind::Compose: return 0;
    case TermKind::Plus: return 1;
    case TermKind::Oplus: return 2;
    case TermKind::Tensor: return 3;
    case TermKind::Dagger: return 4;
    case TermKind::Prim: return 5;
  }
  return 5;
}

std::string print_term(const Term& t, const Alphabet& al, int ctx) {
  std::string s;
  switch (t.kind()) {
    case TermKind::Prim:
      if (t.prim() == Prim::Gen) return al.name(t.generator());
      if (t.prim() == Prim::GenInv) return "inv(" + al.name(t.generator()) + ")";
      s = std::string(prim_name(t.prim())) + "[";
      for (std::size_t i = 0; i < t.args().size(); ++i) {
        if (i) s += ", ";
        s += print(t.args()[i]);
      }
      return s + "]";
    case TermKind::Dagger: s = print_term(t.lhs(), al, 4) + "!"; break;
    default: {
      const int p = term_prec(t.kind());
      const char* op = t.kind() == TermKind::Compose ? " . "
                       : t.kind() == TermKind::Plus  ? " + "
                       : t.kind() == TermKind::Oplus ? " (+) "
                                                     : " (x) ";
      s = print_term(t.lhs(), al, p) + op + print_term(t.rhs(), al, p + 1);
    }
  }
  return term_prec(t.kind()) < ctx ? "(" + s + ")" : s;
}

Term elim(const Term& t);

// A dagger-free term for t†, given that t itself may contain daggers.
Term elim_dagger_of(const Term& t) {
  const SourceLoc loc = t.loc();
  switch (t.kind()) {
    case TermKind::Dagger: return elim(t.lhs());
    case TermKind::Compose:
      return Term::compose(elim_dagger_of(t.rhs()), elim_dagger_of(t.lhs()), loc);
    case TermKind::Tensor:
      return Term::tensor(elim_dagger_of(t.lhs()), elim_dagger_of(t.rhs()), loc);
    case TermKind::Oplus:
      return Term::oplus(elim_dagger_of(t.lhs()), elim_dagger_of(t.rhs()), loc);
    case TermKind::Plus:
      return Term::plus(elim_dagger_of(t.lhs()), elim_dagger_of(t.rhs()), loc);
    case TermKind::Prim: break;
  }
  const auto& a = t.args();
  switch (t.prim()) {
    case Prim::Gen: return Term::geninv(t.generator(), loc);
    case Prim::GenInv: return Term::gen(t.generator(), loc);
    case Prim::Id: return t;
    case Prim::Alpha: return Term::prim(Prim::AlphaInv, a, loc);
    case Prim::AlphaInv: return Term::prim(Prim::Alpha, a, loc);
    case Prim::Lam: return Term::prim(Prim::LamInv, a, loc);
    case Prim::LamInv: return Term::prim(Prim::Lam, a, loc);
    case Prim::Sigma: return Term::prim(Prim::Sigma, {a[1], a[0]}, loc);
    case Prim::Eps:
      return Term::compose(Term::prim(Prim::Sigma, {Obj::star(a[0]), a[0]}, loc),
                           Term::prim(Prim::Eta, a, loc), loc);
    case Prim::Eta:
      return Term::compose(Term::prim(Prim::Eps, a, loc),
                           Term::prim(Prim::Sigma, {Obj::star(a[0]), a[0]}, loc), loc);
    case Prim::Pi1: return Term::prim(Prim::Iota1, a, loc);
    case Prim::Pi2: return Term::prim(Prim::Iota2, a, loc);
    case Prim::Iota1: return Term::prim(Prim::Pi1, a, loc);
    case Prim::Iota2: return Term::prim(Prim::Pi2, a, loc);
    case Prim::Zero: return Term::prim(Prim::Zero, {a[1], a[0]}, loc);
  }
  return t;
}

Term elim(const Term& t) {
  const SourceLoc loc = t.loc();
  switch (t.kind()) {
    case TermKind::Prim: return t;
    case TermKind::Dagger: return elim_dagger_of(t.lhs());
    case TermKind::Compose: return Term::compose(elim(t.lhs()), elim(t.rhs()), loc);
    case TermKind::Tensor: return Term::tensor(elim(t.lhs()), elim(t.rhs()), loc);
    case TermKind::Oplus: return Term::oplus(elim(t.lhs()), elim(t.rhs()), loc);
    case TermKind::Plus: return Term::plus(elim(t.lhs()), elim(t.rhs()), loc);
  }
  return t;
}

}  // namespace

std::string print(const Term& t, const Alphabet& alphabet) { return print_term(t, alphabet, 0); }

Term eliminate_dagger(const Term& t) { return elim(t); }

const Term* Program::find(std::string_view name) const {
  for (const auto& [n, t] : lets) {
    if (n == name) return &t;
  }
  return nullptr;
}

}  // namespace dcc
