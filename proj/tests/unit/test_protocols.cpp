#include <doctest.h>

#include "dcc/derived.hpp"
#include "dcc/protocols.hpp"

using namespace dcc;

namespace {

constexpr Sign P = Sign::Plus;
constexpr Sign M = Sign::Minus;
BoundaryPoint t(std::uint32_t i) { return {Side::Target, i}; }
GroupWord b(std::size_t i) { return GroupWord::generator(Generator{static_cast<std::uint32_t>(i - 1)}); }

}  // namespace

TEST_CASE("teleportation") {
  const ProtocolReport r = verify("teleportation");
  REQUIRE(r.equal());
  const MatArrow v = *r.common_value();
  REQUIRE(v.rows() == 4);
  REQUIRE(v.cols() == 1);
  for (std::size_t i = 0; i < 4; ++i) CHECK(v.at(i, 0) == CobSum::identity({P}));
  CHECK(H(protocol::delta4()) == v);
}

TEST_CASE("teleportation without inverse corrections fails") {
  const Legs legs = teleportation_legs();
  std::vector<Term> plain, shifted;
  for (std::size_t i = 1; i <= 4; ++i) {
    plain.push_back(protocol::beta(i));
    shifted.push_back(protocol::beta_inv(i % 4 + 1));
  }
  CHECK_FALSE(equal(legs.left, protocol::teleportation_right(plain)).equal);
  const Verdict v = equal(legs.left, protocol::teleportation_right(shifted));
  CHECK_FALSE(v.equal);
}

TEST_CASE("entanglement swapping") {
  const ProtocolReport r = verify("swap");
  REQUIRE(r.equal());
  const MatArrow v = *r.common_value();
  REQUIRE(v.rows() == 4);
  const GCob caps({}, {M, P, M, P}, {{t(0), t(1), {}}, {t(2), t(3), {}}});
  for (std::size_t i = 0; i < 4; ++i) CHECK(v.at(i, 0) == CobSum(caps));
}

TEST_CASE("superdense coding") {
  const ProtocolReport r = verify("superdense");
  REQUIRE(r.equal());
  const MatArrow v = *r.common_value();
  REQUIRE(v.rows() == 16);
  for (std::size_t i = 1; i <= 4; ++i) {
    for (std::size_t j = 1; j <= 4; ++j) {
      const CyclicWord c = cyclic_canonical(mul(b(j), inverse(b(i))));
      CHECK(v.at(4 * (i - 1) + (j - 1), 0) == CobSum(GCob::circle(c)));
      CHECK(c.is_identity() == (i == j));
    }
  }
  CHECK(v.at(1, 0) == CobSum(GCob::circle(cyclic_canonical(mul(b(2), inverse(b(1)))))));
}

TEST_CASE("protocol lookup") {
  CHECK(protocol_names() == std::vector<std::string>{"teleportation", "swap", "superdense"});
  CHECK_THROWS_AS(verify("nosuch"), std::invalid_argument);
  for (const auto& n : protocol_names()) {
    const Legs l = protocol_legs(n);
    const Typing a = typecheck(l.left);
    const Typing b2 = typecheck(l.right);
    CHECK(a.src == b2.src);
    CHECK(a.tgt == b2.tgt);
  }
}
