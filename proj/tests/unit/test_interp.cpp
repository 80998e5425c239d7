#include <doctest.h>

#include "dcc/derived.hpp"
#include "dcc/interp.hpp"
#include "gen.hpp"

using namespace dcc;
using namespace dcc::terms;

namespace {

constexpr Sign P = Sign::Plus;
constexpr Sign M = Sign::Minus;
const Alphabet al = Alphabet::standard(4);
const Obj p = Obj::p();
const Obj I = Obj::unit();
const Obj O = Obj::zero();
Term parse(const char* s) { return parse_term(s, al); }

}  // namespace

TEST_CASE("injections and projections of (p+I)+0") {
  const Obj a = Obj::oplus(Obj::oplus(p, I), O);
  const InjProjFamily f = inj_proj(a);
  REQUIRE(f.injections.size() == 3);
  const Obj pI = Obj::oplus(p, I);
  CHECK(f.injections[0] == Term::compose(iota1(pI, O), iota1(p, I)));
  CHECK(f.injections[1] == Term::compose(iota1(pI, O), iota2(p, I)));
  CHECK(f.injections[2] == iota2(pI, O));
  CHECK(f.projections[0] == Term::compose(pi1(p, I), pi1(pI, O)));
  CHECK(f.projections[1] == Term::compose(pi2(p, I), pi1(pI, O)));
  CHECK(f.projections[2] == pi2(pI, O));
}

TEST_CASE("injections and projections of ((p+0)+p)x(I+p)*") {
  const Obj p0 = Obj::oplus(p, O);
  const Obj l = Obj::oplus(p0, p);
  const Obj r = Obj::oplus(I, p);
  const Obj b = Obj::tensor(l, Obj::star(r));
  const InjProjFamily f = inj_proj(b);
  REQUIRE(f.injections.size() == 6);
  const Term li[3] = {Term::compose(iota1(p0, p), iota1(p, O)), Term::compose(iota1(p0, p), iota2(p, O)), iota2(p0, p)};
  const Term lp[3] = {Term::compose(pi1(p, O), pi1(p0, p)), Term::compose(pi2(p, O), pi1(p0, p)), pi2(p0, p)};
  const Term ri[2] = {star(pi1(I, p)), star(pi2(I, p))};
  const Term rp[2] = {star(iota1(I, p)), star(iota2(I, p))};
  for (std::size_t j = 0; j < 6; ++j) {
    CHECK(f.injections[j] == Term::tensor(li[j / 2], ri[j % 2]));
    CHECK(f.projections[j] == Term::tensor(lp[j / 2], rp[j % 2]));
  }
  CHECK(f.injections[4] == Term::tensor(iota2(p0, p), star(pi1(I, p))));
}

TEST_CASE("oplus-free objects have a single identity injection") {
  const Obj a = Obj::tensor(p, Obj::star(p));
  const InjProjFamily f = inj_proj(a);
  REQUIRE(f.injections.size() == 1);
  CHECK(f.injections[0] == id(a));
  CHECK(f.projections[0] == id(a));
}

TEST_CASE("object interpretation") {
  CHECK(interp_object(Obj::tensor(p, p)) == ObjList{{P, P}});
  CHECK(interp_object(Obj::oplus(Obj::oplus(p, I), O)) == ObjList{{P}, {}});
  CHECK(interp_object(Obj::star(p)) == ObjList{{M}});
}

TEST_CASE("biproduct identities hold for families") {
  auto rng = gen::make_rng(51);
  for (int k = 0; k < 40; ++k) {
    const Obj a = gen::object(rng, {.depth = 3});
    const InjProjFamily f = inj_proj(a);
    MatArrow sum = zero(interp_object(a), interp_object(a));
    for (std::size_t i = 0; i < f.injections.size(); ++i) {
      sum = add(sum, H(Term::compose(f.injections[i], f.projections[i])));
    }
    CHECK(sum == identity(interp_object(a)));
  }
}

TEST_CASE("interpretation of terms") {
  CHECK(H(parse("b1 . inv(b1)")) == identity({{P}}));
  CHECK(H(parse("alpha[p, p, p]")) == identity({{P, P, P}}));
  const MatArrow i1 = H(parse("iota1[p, p]"));
  REQUIRE(i1.rows() == 2);
  REQUIRE(i1.cols() == 1);
  CHECK(i1.at(0, 0) == CobSum::identity({P}));
  CHECK(i1.at(1, 0).is_zero());
}

TEST_CASE("matrix forms") {
  const MatrixForm m = matrix_form(parse("iota1[p, p]"));
  REQUIRE(m.rows() == 2);
  REQUIRE(m.cols() == 1);
  CHECK(m.at(0, 0) == identity({{P}}));
  CHECK(is_zero(m.at(1, 0)));
  const Term u = parse("sigma[p, p] . (b1 (x) b2!)");
  const MatrixForm mu = matrix_form(u);
  REQUIRE(mu.rows() == 1);
  CHECK(mu.at(0, 0) == H(u));
}

TEST_CASE("matrix forms are functorial") {
  auto rng = gen::make_rng(52);
  for (int k = 0; k < 30; ++k) {
    const Obj a = gen::object(rng, {.depth = 2});
    const Term f = gen::term_from(rng, a, {.depth = 2});
    const Term g = gen::term_from(rng, typecheck(f).tgt, {.depth = 2});
    CHECK(matrix_form(Term::compose(g, f)) == compose(matrix_form(g), matrix_form(f)));
    CHECK(matrix_form(Term::tensor(f, g)) == tensor(matrix_form(f), matrix_form(g)));
    CHECK(matrix_form(Term::oplus(f, g)) == oplus(matrix_form(f), matrix_form(g)));
  }
}

TEST_CASE("equality decisions") {
  const Term f = parse("b1 . b2!");
  CHECK(equal(f, f).equal);
  CHECK(equal(parse("sigma[p, p] . sigma[p, p]"), parse("id[p (x) p]")).equal);
  const Verdict v = equal(parse("b1"), parse("b2"));
  CHECK_FALSE(v.equal);
  REQUIRE(v.diff.has_value());
  CHECK(v.lhs.at(0, 0) != v.rhs.at(0, 0));
  CHECK_THROWS_AS(equal(parse("b1"), parse("id[I]")), TypeError);
}

TEST_CASE("the dual-of-tensor isomorphism permutes components") {
  const Obj a = Obj::oplus(p, Obj::star(p));
  const Obj b = Obj::oplus(I, p);
  const MatArrow u = H(iso_u(a, b));
  CHECK(u.src() != u.tgt());
  REQUIRE(u.rows() == 4);
  REQUIRE(u.cols() == 4);
  // (a⊗b)* lists components a-major, b*⊗a* lists them b-major.
  const std::size_t perm[4] = {0, 2, 1, 3};
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      if (i == perm[j]) {
        CHECK(u.at(i, j) == CobSum::identity(u.src()[j]));
      } else {
        CHECK(u.at(i, j).is_zero());
      }
    }
  }
  CHECK(H(iso_u(p, b)) == identity(H(iso_u(p, b)).src()));
  CHECK(H(iso_w(a)) == identity(interp_object(a)));
  CHECK(H(iso_v()) == identity(unit_list()));
}
