#include "dcc/protocols.hpp"

#include <stdexcept>

#include "dcc/derived.hpp"

namespace dcc {

namespace protocol {

namespace {

using namespace terms;

const Obj Q = Obj::p();
const Obj Qs = Obj::star(Obj::p());
const Obj I = Obj::unit();

Obj X() { return Obj::tensor(Q, Qs); }  // Q ⊗ Q*

Generator gen_of(std::size_t i) {
  if (i < 1 || i > 4) throw std::out_of_range("β index must be 1..4");
  return Generator{static_cast<std::uint32_t>(i - 1)};
}

template <typename F>
std::vector<Term> for_each_beta(F f) {
  std::vector<Term> out;
  for (std::size_t i = 1; i <= 4; ++i) out.push_back(f(i));
  return out;
}

}  // namespace

Term beta(std::size_t i) { return Term::gen(gen_of(i)); }
Term beta_inv(std::size_t i) { return Term::geninv(gen_of(i)); }
Term gamma(std::size_t i) { return lower_star(beta(i)); }

Term P(std::size_t i) {
  return chain({tensor(iso_w(Q), id(Qs)), name(gamma(i)), coname(beta(i))});
}

Term delta4() { return tuple(std::vector<Term>(4, id(Q))); }

Term Theta() {
  return tensor(id(Qs), tensor(tuple(for_each_beta(P)), id(Q)));
}

Term phi() {
  const Obj xc = Obj::tensor(X(), Q);
  const Term m = chain({tensor(sigma(Q, Qs), id(Obj::tensor(Qs, Q))), alpha_inv(X(), Qs, Q),
                        tensor(sigma(Qs, X()), id(Q)), alpha(Qs, X(), Q)});
  return chain({copies(m, 4), distrib_tau(Qs, std::vector<Obj>(4, xc)),
                tensor(id(Qs), distrib_upsilon(std::vector<Obj>(4, X()), Q))});
}

Term zeta() {
  return oplus_all(for_each_beta([](std::size_t i) {
    return tensor(tensor(id(Qs), beta(i)), tensor(id(Qs), beta_inv(i)));
  }));
}

Term Omega() {
  const Term epr = tensor(name(id(Q)), name(id(Q)));
  return tuple(std::vector<Term>(4, epr));
}

Term Xi() {
  return tuple(for_each_beta([](std::size_t i) {
    return tuple(for_each_beta([i](std::size_t j) {
      return trace(Term::compose(beta(j), Term::dagger(beta(i))));
    }));
  }));
}

Term teleportation_right(const std::vector<Term>& corrections) {
  if (corrections.size() != 4) throw std::invalid_argument("teleportation needs four corrections");
  return chain({
      oplus_all(corrections),
      copies(lam(Q), 4),
      distrib_upsilon(std::vector<Obj>(4, I), Q),
      tensor(tuple(for_each_beta([](std::size_t i) { return coname(beta(i)); })), id(Q)),
      alpha(Q, Qs, Q),
      tensor(id(Q), name(id(Q))),
      sigma(I, Q),
      lam_inv(Q),
  });
}

}  // namespace protocol

using namespace terms;

Legs teleportation_legs() {
  std::vector<Term> corr;
  for (std::size_t i = 1; i <= 4; ++i) corr.push_back(protocol::beta_inv(i));
  return {protocol::delta4(), protocol::teleportation_right(corr)};
}

Legs entanglement_swap_legs() {
  const Obj q = Obj::p();
  const Obj qs = Obj::star(q);
  const Term epr = tensor(name(id(q)), name(id(q)));
  const Term deloc = chain({tensor(id(qs), alpha(q, qs, q)), alpha_inv(qs, q, Obj::tensor(qs, q))});
  return {protocol::Omega(),
          chain({protocol::zeta(), protocol::phi(), protocol::Theta(), deloc, epr})};
}

Legs superdense_legs() {
  const Obj q = Obj::p();
  const Obj qs = Obj::star(q);
  std::vector<Term> selections;
  std::vector<Term> observations;
  for (std::size_t i = 1; i <= 4; ++i) {
    selections.push_back(protocol::gamma(i));
    observations.push_back(coname(protocol::beta(i)));
  }
  const Term right = chain({
      copies(tuple(observations), 4),
      copies(sigma(qs, q), 4),
      distrib_upsilon(std::vector<Obj>(4, qs), q),
      tensor(tuple(selections), id(q)),
      name(id(q)),
  });
  return {protocol::Xi(), right};
}

std::optional<MatArrow> ProtocolReport::common_value() const {
  if (!verdict.equal) return std::nullopt;
  return verdict.lhs;
}

const std::vector<std::string>& protocol_names() {
  static const std::vector<std::string> names = {"teleportation", "swap", "superdense"};
  return names;
}

Legs protocol_legs(std::string_view name) {
  if (name == "teleportation") return teleportation_legs();
  if (name == "swap") return entanglement_swap_legs();
  if (name == "superdense") return superdense_legs();
  throw std::invalid_argument("unknown protocol '" + std::string(name) + "'");
}

ProtocolReport verify(std::string_view name) {
  const auto start = std::chrono::steady_clock::now();
  Legs legs = protocol_legs(name);
  Verdict v = equal(legs.left, legs.right);
  const auto stop = std::chrono::steady_clock::now();
  return {std::string(name), std::move(v), std::move(legs), stop - start};
}

}  // namespace dcc
