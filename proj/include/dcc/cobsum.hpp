#pragma once

// Finite multisets of cobordisms with a common boundary: the arrows of the
// commutative-monoid enriched category of formal sums.

#include <cstdint>
#include <map>

#include "dcc/cobordism.hpp"

namespace dcc {

class CobSum {
 public:
  using Terms = std::map<GCob, std::uint64_t>;

  /// The zero arrow src → tgt (empty multiset).
  CobSum(ObjectSeq src, ObjectSeq tgt) : src_(std::move(src)), tgt_(std::move(tgt)) {}
  /// The singleton {f}.
  explicit CobSum(GCob f);

  static CobSum zero(const ObjectSeq& src, const ObjectSeq& tgt) { return {src, tgt}; }
  static CobSum identity(const ObjectSeq& a) { return CobSum(GCob::identity(a)); }

  const ObjectSeq& src() const { return src_; }
  const ObjectSeq& tgt() const { return tgt_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Total multiplicity.
  std::uint64_t cardinality() const;

  /// Adds `count` copies of f. Throws TypeMismatch on a boundary mismatch and
  /// std::overflow_error if a multiplicity would exceed 2^64-1.
  void insert(const GCob& f, std::uint64_t count = 1);

  bool operator==(const CobSum&) const = default;

 private:
  ObjectSeq src_;
  ObjectSeq tgt_;
  Terms terms_;
};

CobSum add(const CobSum& x, const CobSum& y);
/// y∘x, all pairwise composites.
CobSum compose(const CobSum& y, const CobSum& x);
CobSum tensor(const CobSum& x, const CobSum& y);
CobSum dagger(const CobSum& x);

/// Applies a boundary-reshaping cobordism operation (name, transpose_star, ...)
/// to every member.
template <typename Op>
CobSum map_terms(const CobSum& x, const ObjectSeq& src, const ObjectSeq& tgt, Op op) {
  CobSum out(src, tgt);
  for (const auto& [f, n] : x.terms()) out.insert(op(f), n);
  return out;
}

}  // namespace dcc
