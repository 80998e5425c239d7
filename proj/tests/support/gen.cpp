#include "gen.hpp"

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <string>

namespace dcc::gen {

namespace {

constexpr std::uint64_t kDefaultSeed = 20240601;

std::size_t pick(Rng& rng, std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); }
bool coin(Rng& rng, double p = 0.5) { return std::bernoulli_distribution(p)(rng); }

std::size_t froms(const ObjectSeq& src, const ObjectSeq& tgt) {
  std::size_t n = 0;
  for (Sign s : src) n += s == Sign::Plus;
  for (Sign s : tgt) n += s == Sign::Minus;
  return n;
}

Obj small_object(Rng& rng) { return object(rng, {.depth = 1, .allow_zero = coin(rng, 0.2), .allow_oplus = true}); }

Term word_term(Rng& rng, std::size_t max_len) {
  GroupWord w;
  while (w.is_identity()) w = word(rng, std::max<std::size_t>(max_len, 1));
  std::vector<Term> fs;
  for (const Letter& l : w.letters()) fs.push_back(l.inverse ? Term::geninv(l.gen) : Term::gen(l.gen));
  return terms::chain(fs);
}

// Primitive arrows (and generator words) out of a.
Term leaf(Rng& rng, const Obj& a, const TermOptions& opt) {
  std::vector<Term> options{terms::id(a), terms::lam_inv(a)};
  if (a.kind() == ObjKind::P) {
    options.push_back(word_term(rng, opt.word_len));
    options.push_back(word_term(rng, opt.word_len));
    options.push_back(word_term(rng, opt.word_len));
  }
  if (a.kind() == ObjKind::Tensor) {
    const Obj& x = a.lhs();
    const Obj& y = a.rhs();
    options.push_back(terms::sigma(x, y));
    if (y.kind() == ObjKind::Tensor) options.push_back(terms::alpha(x, y.lhs(), y.rhs()));
    if (x.kind() == ObjKind::Tensor) options.push_back(terms::alpha_inv(x.lhs(), x.rhs(), y));
    if (x.kind() == ObjKind::Unit) options.push_back(terms::lam(y));
    if (y == Obj::star(x)) options.push_back(terms::eps(x));
  }
  if (a.kind() == ObjKind::Oplus) {
    options.push_back(terms::pi1(a.lhs(), a.rhs()));
    options.push_back(terms::pi2(a.lhs(), a.rhs()));
  }
  if (a.kind() == ObjKind::Unit) options.push_back(terms::eta(small_object(rng)));
  options.push_back(terms::iota1(a, small_object(rng)));
  options.push_back(terms::iota2(small_object(rng), a));
  if (coin(rng, 0.05)) return terms::zero(a, small_object(rng));
  return options[pick(rng, options.size())];
}

Term undagger(const Term& t, const TermOptions& opt) { return opt.daggers ? t : eliminate_dagger(t); }

}  // namespace

Obj target(const Term& t) { return typecheck(t).tgt; }

Term endo(Rng& rng, const Obj& a, const TermOptions& opt) {
  auto e = [&](const Obj& x) { return endo(rng, x, opt); };
  Term out = terms::id(a);
  switch (a.kind()) {
    case ObjKind::P:
      out = word_term(rng, opt.word_len);
      if (opt.daggers && coin(rng, 0.3)) out = terms::dagger(out);
      break;
    case ObjKind::Unit:
      out = coin(rng) ? terms::trace(word_term(rng, opt.word_len)) : terms::id(a);
      break;
    case ObjKind::Zero: break;
    case ObjKind::Star:
      out = coin(rng) ? terms::star(e(a.lhs())) : undagger(terms::lower_star(e(a.lhs())), opt);
      break;
    case ObjKind::Tensor:
      out = terms::tensor(e(a.lhs()), e(a.rhs()));
      if (a.lhs() == a.rhs() && coin(rng)) out = terms::chain({terms::sigma(a.lhs(), a.lhs()), out});
      break;
    case ObjKind::Oplus: {
      const Obj& x = a.lhs();
      const Obj& y = a.rhs();
      out = terms::oplus(e(x), e(y));
      if (x == y && coin(rng)) {
        out = terms::plus(terms::chain({terms::iota2(x, x), e(x), terms::pi1(x, x)}),
                          terms::chain({terms::iota1(x, x), e(x), terms::pi2(x, x)}));
      }
      break;
    }
  }
  if (coin(rng, 0.1)) out = terms::plus(out, e(a));
  return out;
}

Term twin(Rng& rng, const Term& f, const TermOptions& opt) {
  const Typing ty = typecheck(f);
  switch (pick(rng, 3)) {
    case 0: return terms::chain({endo(rng, ty.tgt, opt), f});
    case 1: return terms::chain({f, endo(rng, ty.src, opt)});
    default: return terms::plus(f, terms::chain({endo(rng, ty.tgt, opt), f, endo(rng, ty.src, opt)}));
  }
}

Term term_from(Rng& rng, const Obj& a, const TermOptions& opt) {
  if (opt.depth == 0) return leaf(rng, a, opt);
  TermOptions sub = opt;
  sub.depth = opt.depth - 1;
  for (;;) {
    switch (pick(rng, 7)) {
      case 0: {
        Term f = term_from(rng, a, sub);
        return terms::chain({term_from(rng, target(f), sub), f});
      }
      case 1:
        if (a.kind() != ObjKind::Tensor) break;
        return terms::tensor(term_from(rng, a.lhs(), sub), term_from(rng, a.rhs(), sub));
      case 2:
        if (a.kind() != ObjKind::Oplus) break;
        return terms::oplus(term_from(rng, a.lhs(), sub), term_from(rng, a.rhs(), sub));
      case 3: return twin(rng, term_from(rng, a, sub), sub);
      case 4: {
        Term f = term_from(rng, a, sub);
        return terms::chain({endo(rng, target(f), sub), f});
      }
      case 5: return terms::chain({term_from(rng, a, sub), endo(rng, a, sub)});
      default: {
        if (!opt.daggers) return leaf(rng, a, opt);
        const Term f = term_from(rng, a, sub);
        return coin(rng) ? terms::dagger(terms::dagger(f)) : terms::dagger(eliminate_dagger(terms::dagger(f)));
      }
    }
  }
}

Term term(Rng& rng, const Obj& a, const Obj& b, const TermOptions& opt) {
  if (a == b) return coin(rng, 0.7) ? endo(rng, a, opt) : twin(rng, endo(rng, a, opt), opt);
  for (int attempt = 0; attempt < 16; ++attempt) {
    const Term f = term_from(rng, a, opt);
    if (target(f) == b) return f;
  }
  return terms::zero(a, b);
}

std::uint64_t seed() {
  static const std::uint64_t value = [] {
    std::uint64_t s = kDefaultSeed;
    if (const char* env = std::getenv("DCC_SEED")) s = std::stoull(env);
    std::cerr << "[seed] DCC_SEED=" << s << "\n";
    return s;
  }();
  return value;
}

Rng make_rng(std::uint64_t salt) { return Rng(seed() ^ (salt * 0x9E3779B97F4A7C15ULL)); }

GroupWord word(Rng& rng, std::size_t max_len, std::size_t generators) {
  std::vector<Letter> letters;
  const std::size_t len = pick(rng, max_len + 1);
  for (std::size_t i = 0; i < len; ++i) {
    letters.push_back(Letter{Generator{static_cast<std::uint32_t>(pick(rng, generators))}, coin(rng)});
  }
  return GroupWord::from_letters(letters);
}

ObjectSeq object_seq(Rng& rng, std::size_t max_len) {
  ObjectSeq a(pick(rng, max_len + 1));
  for (Sign& s : a) s = coin(rng) ? Sign::Plus : Sign::Minus;
  return a;
}

ObjectSeq balanced_target(Rng& rng, const ObjectSeq& src, std::size_t max_len) {
  for (;;) {
    ObjectSeq tgt = object_seq(rng, max_len);
    if (2 * froms(src, tgt) == src.size() + tgt.size()) return tgt;
  }
}

GCob gcob(Rng& rng, const ObjectSeq& src, const ObjectSeq& tgt, std::size_t max_circles) {
  std::vector<BoundaryPoint> from;
  std::vector<BoundaryPoint> to;
  for (std::uint32_t i = 0; i < src.size(); ++i) {
    (src[i] == Sign::Plus ? from : to).push_back({Side::Source, i});
  }
  for (std::uint32_t i = 0; i < tgt.size(); ++i) {
    (tgt[i] == Sign::Minus ? from : to).push_back({Side::Target, i});
  }
  std::shuffle(to.begin(), to.end(), rng);
  std::vector<Segment> segments;
  for (std::size_t k = 0; k < from.size(); ++k) segments.push_back({from[k], to[k], word(rng, 2)});
  std::vector<CyclicWord> circles;
  const std::size_t nc = pick(rng, max_circles + 1);
  for (std::size_t k = 0; k < nc; ++k) circles.push_back(cyclic_canonical(word(rng, 3)));
  return GCob(src, tgt, std::move(segments), std::move(circles));
}

CobSum cobsum(Rng& rng, const ObjectSeq& src, const ObjectSeq& tgt, std::size_t max_terms) {
  CobSum x(src, tgt);
  const std::size_t n = pick(rng, max_terms + 1);
  for (std::size_t k = 0; k < n; ++k) x.insert(gcob(rng, src, tgt), 1 + pick(rng, 3));
  return x;
}

ObjList obj_list(Rng& rng, std::size_t max_len, std::size_t max_seq) {
  ObjList a(pick(rng, max_len + 1));
  for (auto& s : a) s = object_seq(rng, max_seq);
  return a;
}

MatArrow mat_arrow(Rng& rng, const ObjList& src, const ObjList& tgt) {
  MatArrow m(src, tgt);
  for (std::size_t i = 0; i < tgt.size(); ++i) {
    for (std::size_t j = 0; j < src.size(); ++j) {
      if (2 * froms(src[j], tgt[i]) == src[j].size() + tgt[i].size()) m.set(i, j, cobsum(rng, src[j], tgt[i], 2));
    }
  }
  return m;
}

Obj object(Rng& rng, const ObjOptions& opt) {
  const std::size_t kinds = opt.depth == 0 ? 0 : (opt.allow_oplus ? 3 : 2);
  const std::size_t leaves = opt.allow_zero ? 3 : 2;
  const std::size_t r = pick(rng, leaves + 2 * kinds);
  if (r >= leaves) {
    ObjOptions sub = opt;
    sub.depth = opt.depth - 1;
    switch ((r - leaves) % kinds) {
      case 0: return Obj::tensor(object(rng, sub), object(rng, sub));
      case 1: return Obj::star(object(rng, sub));
      default: return Obj::oplus(object(rng, sub), object(rng, sub));
    }
  }
  if (r == 0 || r == 1) return r == 0 ? Obj::p() : (coin(rng, 0.6) ? Obj::p() : Obj::unit());
  return Obj::zero();
}

}  // namespace dcc::gen
