#include "dcc/cobsum.hpp"

#include <stdexcept>

#include "dcc/error.hpp"

namespace dcc {

namespace {

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = 0;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("multiplicity overflow");
  return r;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("multiplicity overflow");
  return r;
}

}  // namespace

CobSum::CobSum(GCob f) : src_(f.src()), tgt_(f.tgt()) { terms_.emplace(std::move(f), 1); }

std::uint64_t CobSum::cardinality() const {
  std::uint64_t n = 0;
  for (const auto& [f, k] : terms_) n = checked_add(n, k);
  return n;
}

void CobSum::insert(const GCob& f, std::uint64_t count) {
  if (f.src() != src_ || f.tgt() != tgt_) {
    throw TypeMismatch("cobordism " + format(f.src()) + " -> " + format(f.tgt()) +
                       " added to a sum of type " + format(src_) + " -> " + format(tgt_));
  }
  if (count == 0) return;
  auto [it, fresh] = terms_.try_emplace(f, count);
  if (!fresh) it->second = checked_add(it->second, count);
}

CobSum add(const CobSum& x, const CobSum& y) {
  if (x.src() != y.src() || x.tgt() != y.tgt()) throw TypeMismatch("sum of differently typed arrows");
  CobSum out = x;
  for (const auto& [f, n] : y.terms()) out.insert(f, n);
  return out;
}

CobSum compose(const CobSum& y, const CobSum& x) {
  if (x.tgt() != y.src()) {
    throw TypeMismatch("cannot compose through " + format(x.tgt()) + " and " + format(y.src()));
  }
  CobSum out(x.src(), y.tgt());
  for (const auto& [f, n] : x.terms()) {
    for (const auto& [g, m] : y.terms()) out.insert(compose(g, f), checked_mul(n, m));
  }
  return out;
}

CobSum tensor(const CobSum& x, const CobSum& y) {
  CobSum out(concat(x.src(), y.src()), concat(x.tgt(), y.tgt()));
  for (const auto& [f, n] : x.terms()) {
    for (const auto& [g, m] : y.terms()) out.insert(tensor(f, g), checked_mul(n, m));
  }
  return out;
}

CobSum dagger(const CobSum& x) {
  return map_terms(x, x.tgt(), x.src(), [](const GCob& f) { return dagger(f); });
}

}  // namespace dcc
