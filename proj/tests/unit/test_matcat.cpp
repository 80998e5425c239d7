#include <doctest.h>

#include "dcc/matcat.hpp"
#include "gen.hpp"

using namespace dcc;

namespace {

constexpr Sign P = Sign::Plus;
constexpr Sign M = Sign::Minus;
const Alphabet al = Alphabet::standard(4);
const ObjList plus1{{P}};

MatArrow seg(const char* x) { return MatArrow(CobSum(GCob::segment(al.parse_word(x)))); }

}  // namespace

TEST_CASE("composition") {
  auto rng = gen::make_rng(31);
  const ObjList a = {{P}, {M, P}};
  const MatArrow f = gen::mat_arrow(rng, a, a);
  CHECK(compose(identity(a), f) == f);
  CHECK(compose(f, identity(a)) == f);
  // Going through the zero object yields the zero matrix.
  CHECK(compose(zero({}, plus1), zero(plus1, {})) == zero(plus1, plus1));
  const MatArrow d1 = oplus(seg("b1"), seg("b2"));
  const MatArrow d2 = oplus(seg("b3"), seg("b4"));
  CHECK(compose(d1, d2) == oplus(compose(seg("b1"), seg("b3")), compose(seg("b2"), seg("b4"))));
}

TEST_CASE("tensor is a Kronecker product") {
  auto rng = gen::make_rng(32);
  const MatArrow f = gen::mat_arrow(rng, {{P}, {M}}, {{P}, {M}});
  CHECK(tensor(identity(unit_list()), f) == f);
  CHECK(tensor(f, identity(unit_list())) == f);
  const MatArrow e = tensor(f, identity({}));
  CHECK(e.rows() == 0);
  CHECK(e.cols() == 0);
  const MatArrow col = tuple({seg("b1"), seg("b2")});
  const MatArrow row = cotuple({seg("b3"), seg("b4")});
  const MatArrow k = tensor(col, row);
  REQUIRE(k.rows() == 2);
  REQUIRE(k.cols() == 2);
  const char* l[] = {"b1", "b2"};
  const char* r[] = {"b3", "b4"};
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) CHECK(MatArrow(k.at(i, j)) == tensor(seg(l[i]), seg(r[j])));
  }
}

TEST_CASE("biproduct structure") {
  const ObjList a = {{P}, {M, M}};
  const ObjList b = {{}};
  CHECK(compose(pi1(a, b), iota1(a, b)) == identity(a));
  CHECK(compose(pi2(a, b), iota2(a, b)) == identity(b));
  CHECK(compose(pi2(a, b), iota1(a, b)) == zero(a, b));
  CHECK(compose(pi1(a, b), iota2(a, b)) == zero(b, a));
  CHECK(add(compose(iota1(a, b), pi1(a, b)), compose(iota2(a, b), pi2(a, b))) == identity(oplus(a, b)));
  auto rng = gen::make_rng(33);
  const MatArrow f = gen::mat_arrow(rng, a, a);
  CHECK(oplus(f, identity({})) == f);
  CHECK(dagger(pi1(a, b)) == iota1(a, b));
  CHECK(dagger(dagger(f)) == f);
}

TEST_CASE("symmetry matches the block display") {
  const ObjList a = {{P}, {M}, {P, P}};
  const ObjList b = {{M, P}, {}};
  const MatArrow s = sigma(a, b);
  REQUIRE(s.rows() == 6);
  REQUIRE(s.cols() == 6);
  for (std::size_t r = 0; r < 6; ++r) {
    for (std::size_t c = 0; c < 6; ++c) {
      bool placed = false;
      for (std::size_t j = 0; j < 3; ++j) {
        for (std::size_t l = 0; l < 2; ++l) {
          if (r == l * 3 + j && c == j * 2 + l) {
            placed = true;
            CHECK(s.at(r, c) == CobSum(sigma(a[j], b[l])));
          }
        }
      }
      if (!placed) CHECK(s.at(r, c).is_zero());
    }
  }
  CHECK(dagger(s) == sigma(b, a));
  CHECK(compose(sigma(b, a), s) == identity(tensor(a, b)));
}

TEST_CASE("compact structure on lists") {
  CHECK(eta(plus1) == MatArrow(CobSum(eta({P}))));
  auto rng = gen::make_rng(34);
  for (int k = 0; k < 20; ++k) {
    const ObjList a = gen::obj_list(rng, 3, 2);
    const ObjList d = dual(a);
    CHECK(compose(tensor(eps(a), identity(a)), tensor(identity(a), eta(a))) == identity(a));
    CHECK(compose(tensor(identity(d), eps(a)), tensor(eta(a), identity(d))) == identity(d));
  }
}

TEST_CASE("traces") {
  const MatArrow t = trace(identity(plus1));
  REQUIRE(t.rows() == 1);
  CHECK(t.at(0, 0) == CobSum(GCob::circle(CyclicWord{})));
  for (int i = 1; i <= 4; ++i) {
    for (int j = 1; j <= 4; ++j) {
      const GroupWord bi = GroupWord::generator(Generator{static_cast<std::uint32_t>(i - 1)});
      const GroupWord bj = GroupWord::generator(Generator{static_cast<std::uint32_t>(j - 1)});
      const MatArrow f = compose(MatArrow(CobSum(GCob::segment(bi))), dagger(MatArrow(CobSum(GCob::segment(bj)))));
      const MatArrow tr = trace(f);
      const CyclicWord expected = cyclic_canonical(mul(bi, inverse(bj)));
      CHECK(tr.at(0, 0) == CobSum(GCob::circle(expected)));
      CHECK(expected.is_identity() == (i == j));
    }
  }
}

TEST_CASE("structural arrows are identities") {
  auto rng = gen::make_rng(35);
  for (int k = 0; k < 20; ++k) {
    const ObjList a = gen::obj_list(rng, 2, 2), b = gen::obj_list(rng, 2, 2), c = gen::obj_list(rng, 2, 2);
    CHECK(distrib_upsilon(a, b, c) == identity(tensor(oplus(a, b), c)));
    CHECK(alpha(a, b, c) == identity(tensor(a, tensor(b, c))));
    CHECK(lambda(a) == identity(a));
    if (a.size() == 1) CHECK(distrib_tau(a, b, c) == identity(tensor(a, oplus(b, c))));
  }
}

TEST_CASE("shape errors throw") {
  CHECK_THROWS_AS(compose(identity(plus1), identity({{M}})), TypeMismatch);
  CHECK_THROWS_AS(MatArrow(plus1, plus1, {}), TypeMismatch);
}
