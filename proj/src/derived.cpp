#include "dcc/derived.hpp"

#include <stdexcept>

namespace dcc::terms {

namespace {

Obj src(const Term& f) { return typecheck(f).src; }
Obj tgt(const Term& f) { return typecheck(f).tgt; }
Obj S(const Obj& a) { return Obj::star(a); }
Obj T(const Obj& a, const Obj& b) { return Obj::tensor(a, b); }

}  // namespace

Term id(const Obj& a) { return Term::prim(Prim::Id, {a}); }
Term alpha(const Obj& a, const Obj& b, const Obj& c) { return Term::prim(Prim::Alpha, {a, b, c}); }
Term alpha_inv(const Obj& a, const Obj& b, const Obj& c) { return Term::prim(Prim::AlphaInv, {a, b, c}); }
Term lam(const Obj& a) { return Term::prim(Prim::Lam, {a}); }
Term lam_inv(const Obj& a) { return Term::prim(Prim::LamInv, {a}); }
Term sigma(const Obj& a, const Obj& b) { return Term::prim(Prim::Sigma, {a, b}); }
Term eta(const Obj& a) { return Term::prim(Prim::Eta, {a}); }
Term eps(const Obj& a) { return Term::prim(Prim::Eps, {a}); }
Term pi1(const Obj& a, const Obj& b) { return Term::prim(Prim::Pi1, {a, b}); }
Term pi2(const Obj& a, const Obj& b) { return Term::prim(Prim::Pi2, {a, b}); }
Term iota1(const Obj& a, const Obj& b) { return Term::prim(Prim::Iota1, {a, b}); }
Term iota2(const Obj& a, const Obj& b) { return Term::prim(Prim::Iota2, {a, b}); }
Term zero(const Obj& a, const Obj& b) { return Term::prim(Prim::Zero, {a, b}); }

Term chain(const std::vector<Term>& fs) {
  if (fs.empty()) throw std::invalid_argument("empty composite");
  Term t = fs.back();
  for (std::size_t k = fs.size() - 1; k-- > 0;) t = Term::compose(fs[k], t);
  return t;
}

Term tensor(const Term& f, const Term& g) { return Term::tensor(f, g); }
Term oplus(const Term& f, const Term& g) { return Term::oplus(f, g); }
Term plus(const Term& f, const Term& g) { return Term::plus(f, g); }
Term dagger(const Term& f) { return Term::dagger(f); }

Term name(const Term& f) {
  const Obj a = src(f);
  return chain({tensor(id(S(a)), f), eta(a)});
}

Term coname(const Term& f) {
  const Obj b = tgt(f);
  return chain({eps(b), tensor(f, id(S(b)))});
}

Term star(const Term& f) {
  const auto ty = typecheck(f);
  const Obj& a = ty.src;
  const Obj& b = ty.tgt;
  const Obj as = S(a);
  const Obj bs = S(b);
  return chain({lam(as), sigma(as, Obj::unit()), tensor(id(as), eps(b)), alpha_inv(as, b, bs),
                tensor(tensor(id(as), f), id(bs)), tensor(eta(a), id(bs)), lam_inv(bs)});
}

Term lower_star(const Term& f) { return star(dagger(f)); }

Obj oplus_all(const std::vector<Obj>& as) {
  if (as.empty()) throw std::invalid_argument("empty biproduct");
  Obj out = as.front();
  for (std::size_t k = 1; k < as.size(); ++k) out = Obj::oplus(out, as[k]);
  return out;
}

Obj copies(const Obj& a, std::size_t n) { return oplus_all(std::vector<Obj>(n, a)); }

Term injection(const std::vector<Obj>& as, std::size_t k) {
  const std::size_t n = as.size();
  if (k >= n) throw std::out_of_range("injection index");
  if (n == 1) return id(as[0]);
  const std::vector<Obj> init(as.begin(), as.end() - 1);
  const Obj left = oplus_all(init);
  if (k == n - 1) return iota2(left, as.back());
  const Term inner = injection(init, k);
  const Term outer = iota1(left, as.back());
  return n == 2 ? outer : Term::compose(outer, inner);
}

Term projection(const std::vector<Obj>& as, std::size_t k) {
  const std::size_t n = as.size();
  if (k >= n) throw std::out_of_range("projection index");
  if (n == 1) return id(as[0]);
  const std::vector<Obj> init(as.begin(), as.end() - 1);
  const Obj left = oplus_all(init);
  if (k == n - 1) return pi2(left, as.back());
  const Term inner = projection(init, k);
  const Term outer = pi1(left, as.back());
  return n == 2 ? outer : Term::compose(inner, outer);
}

Term tuple(const std::vector<Term>& fs) {
  if (fs.empty()) throw std::invalid_argument("empty tuple");
  std::vector<Obj> tgts;
  for (const auto& f : fs) tgts.push_back(tgt(f));
  Term out = Term::compose(injection(tgts, 0), fs[0]);
  for (std::size_t k = 1; k < fs.size(); ++k) out = plus(out, Term::compose(injection(tgts, k), fs[k]));
  return out;
}

Term cotuple(const std::vector<Term>& fs) {
  if (fs.empty()) throw std::invalid_argument("empty cotuple");
  std::vector<Obj> srcs;
  for (const auto& f : fs) srcs.push_back(src(f));
  Term out = Term::compose(fs[0], projection(srcs, 0));
  for (std::size_t k = 1; k < fs.size(); ++k) out = plus(out, Term::compose(fs[k], projection(srcs, k)));
  return out;
}

Term copies(const Term& f, std::size_t n) { return oplus_all(std::vector<Term>(n, f)); }

Term oplus_all(const std::vector<Term>& fs) {
  if (fs.empty()) throw std::invalid_argument("empty biproduct");
  Term out = fs.front();
  for (std::size_t k = 1; k < fs.size(); ++k) out = oplus(out, fs[k]);
  return out;
}

Term distrib_tau(const Obj& a, const Obj& b, const Obj& c) { return distrib_tau(a, std::vector<Obj>{b, c}); }

Term distrib_upsilon(const Obj& a, const Obj& b, const Obj& c) {
  return distrib_upsilon(std::vector<Obj>{a, b}, c);
}

Term distrib_tau(const Obj& a, const std::vector<Obj>& bs) {
  std::vector<Term> fs;
  for (std::size_t k = 0; k < bs.size(); ++k) fs.push_back(tensor(id(a), projection(bs, k)));
  return tuple(fs);
}

Term distrib_upsilon(const std::vector<Obj>& as, const Obj& c) {
  std::vector<Term> fs;
  for (std::size_t k = 0; k < as.size(); ++k) fs.push_back(tensor(projection(as, k), id(c)));
  return tuple(fs);
}

Term trace(const Term& f) {
  const Obj a = src(f);
  const Obj as = S(a);
  return chain({eps(a), tensor(f, id(as)), sigma(as, a), eta(a)});
}

Term scalar_act(const Term& s, const Term& f) {
  const Obj a = src(f);
  return chain({f, lam(a), tensor(s, id(a)), lam_inv(a)});
}

Term iso_u(const Obj& a, const Obj& b) {
  const Obj x = S(T(a, b));
  const Obj as = S(a);
  const Obj bs = S(b);
  const Obj bx = T(b, x);
  return chain({
      tensor(id(bs), chain({lam(as), sigma(as, Obj::unit())})),
      tensor(id(bs), tensor(id(as), eps(T(a, b)))),
      tensor(id(bs), tensor(id(as), alpha(a, b, x))),
      tensor(id(bs), alpha_inv(as, a, bx)),
      tensor(id(bs), tensor(eta(a), id(bx))),
      tensor(id(bs), lam_inv(bx)),
      alpha_inv(bs, b, x),
      tensor(eta(b), id(x)),
      lam_inv(x),
  });
}

Term iso_v() { return chain({eps(Obj::unit()), lam_inv(S(Obj::unit()))}); }

Term iso_w(const Obj& a) {
  const Obj as = S(a);
  const Obj ass = S(as);
  return chain({lam(a), tensor(eps(as), id(a)), tensor(sigma(ass, as), id(a)), alpha(ass, as, a),
                tensor(id(ass), eta(a)), sigma(Obj::unit(), ass), lam_inv(ass)});
}

}  // namespace dcc::terms
