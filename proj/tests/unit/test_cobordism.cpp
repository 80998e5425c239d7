#include <doctest.h>

#include "dcc/cobordism.hpp"
#include "gen.hpp"

using namespace dcc;

namespace {

const Alphabet al = Alphabet::standard(4);
constexpr Sign P = Sign::Plus;
constexpr Sign M = Sign::Minus;
BoundaryPoint s(std::uint32_t i) { return {Side::Source, i}; }
BoundaryPoint t(std::uint32_t i) { return {Side::Target, i}; }
GroupWord w(const char* x) { return al.parse_word(x); }

}  // namespace

TEST_CASE("identities") {
  const GCob one = GCob::identity({P});
  REQUIRE(one.segments().size() == 1);
  CHECK(one.segments()[0].from == s(0));
  CHECK(one.segments()[0].to == t(0));
  CHECK(one.segments()[0].label.is_identity());
  CHECK(GCob::identity({}).segments().empty());
  CHECK(GCob::identity({}).circles().empty());
  CHECK(compose(one, one) == one);
}

TEST_CASE("composition multiplies labels later-on-the-left") {
  const GCob f = GCob::segment(w("b1"));
  const GCob g = GCob::segment(w("b2"));
  CHECK(compose(g, f) == GCob::segment(w("b2·b1")));
  CHECK(compose(f, GCob::identity({P})) == f);
}

TEST_CASE("bending a labelled segment into a loop gives one circle") {
  // ε(+)∘(w⊗1₋)∘σ₋,₊∘η(+): the segment w and three e-segments close up.
  for (const char* x : {"e", "b1", "b1·b2^-1", "b3·b1·b3^-1"}) {
    const GCob loop = compose(eps({P}), compose(tensor(GCob::segment(w(x)), GCob::identity({M})),
                                                compose(sigma({M}, {P}), eta({P}))));
    CHECK(loop == GCob::circle(cyclic_canonical(w(x))));
  }
  CHECK(compose(eps({P}), compose(tensor(GCob::segment(w("b3·b1·b3^-1")), GCob::identity({M})),
                                  compose(sigma({M}, {P}), eta({P}))))
            .circles()[0]
            .rep() == w("b1"));
}

TEST_CASE("tensor is disjoint union") {
  CHECK(tensor(GCob::identity({P}), GCob::identity({M})) == GCob::identity({P, M}));
  auto rng = gen::make_rng(11);
  const GCob f = gen::gcob(rng, {P, M}, {M, P});
  CHECK(tensor(f, GCob::empty()) == f);
  CHECK(tensor(GCob::empty(), f) == f);
  const auto u = cyclic_canonical(w("b1"));
  const auto v = cyclic_canonical(w("b2·b3"));
  CHECK(tensor(GCob::circle(u), GCob::circle(v)) == GCob({}, {}, {}, {u, v}));
}

TEST_CASE("dagger reverses and inverts") {
  CHECK(dagger(GCob::segment(w("b1"))) == GCob::segment(w("b1^-1")));
  CHECK(dagger(GCob::circle(cyclic_canonical(w("b1·b2")))) == GCob::circle(cyclic_canonical(w("b2^-1·b1^-1"))));
  auto rng = gen::make_rng(12);
  for (int k = 0; k < 50; ++k) {
    const ObjectSeq a = gen::object_seq(rng, 4);
    const GCob f = gen::gcob(rng, a, gen::balanced_target(rng, a, 4));
    CHECK(dagger(dagger(f)) == f);
    CHECK(f == f);
  }
}

TEST_CASE("duals") {
  CHECK(dual_object({P, M, M}) == ObjectSeq{P, P, M});
  CHECK(dual_object({}).empty());
  CHECK(dual_object(dual_object({P, M, P, P})) == ObjectSeq{P, M, P, P});
  CHECK(format(ObjectSeq{}) == "o");
  CHECK(format(ObjectSeq{P, M}) == "+-");
}

TEST_CASE("units and counits") {
  CHECK(eta({P}) == GCob({}, {M, P}, {{t(0), t(1), {}}}));
  // a = +−−, a* = ++−: three nested caps.
  CHECK(eta({P, M, M}) == GCob({}, {P, P, M, P, M, M}, {{t(5), t(0), {}}, {t(4), t(1), {}}, {t(2), t(3), {}}}));
  CHECK(eps({P}) == GCob({P, M}, {}, {{s(0), s(1), {}}}));
  auto rng = gen::make_rng(13);
  for (int k = 0; k < 30; ++k) {
    const ObjectSeq a = gen::object_seq(rng, 4);
    const ObjectSeq d = dual_object(a);
    CHECK(compose(tensor(eps(a), GCob::identity(a)), tensor(GCob::identity(a), eta(a))) == GCob::identity(a));
    CHECK(compose(tensor(GCob::identity(d), eps(a)), tensor(eta(a), GCob::identity(d))) == GCob::identity(d));
  }
}

TEST_CASE("names, conames and stars") {
  CHECK(name(GCob::identity({P})) == eta({P}));
  CHECK(coname(GCob::identity({P})) == eps({P}));
  CHECK(lower_star(GCob::segment(w("b2"))) == GCob({M}, {M}, {{t(0), s(0), w("b2^-1")}}));
  CHECK(transpose_star(GCob::segment(w("b2"))) == GCob({M}, {M}, {{t(0), s(0), w("b2")}}));
}

TEST_CASE("symmetry") {
  CHECK(sigma({P}, {M}) == GCob({P, M}, {M, P}, {{s(0), t(1), {}}, {t(0), s(1), {}}}));
  auto rng = gen::make_rng(14);
  for (int k = 0; k < 30; ++k) {
    const ObjectSeq a = gen::object_seq(rng, 3);
    const ObjectSeq b = gen::object_seq(rng, 3);
    CHECK(compose(sigma(b, a), sigma(a, b)) == GCob::identity(concat(a, b)));
  }
}

TEST_CASE("malformed cobordisms are rejected") {
  CHECK_THROWS_AS(GCob({P}, {P}, {{t(0), s(0), {}}}), InvalidCobordism);
  CHECK_THROWS_AS(GCob({P}, {P}, {}), InvalidCobordism);
  CHECK_THROWS_AS(GCob({P, P}, {P, P}, {{s(0), t(0), {}}, {s(1), t(0), {}}}), InvalidCobordism);
  CHECK_THROWS_AS(compose(GCob::identity({P}), GCob::identity({M})), TypeMismatch);
}
