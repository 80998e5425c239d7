#pragma once

// Matrices of cobordism sums: the biproduct completion of the sum-enriched
// cobordism category, with its dagger compact closed structure.

#include <cstddef>
#include <string>
#include <vector>

#include "dcc/cobsum.hpp"

namespace dcc {

/// A finite list of point sequences. The empty list is the zero object 𝟎,
/// which differs from the singleton list [o] (the tensor unit).
using ObjList = std::vector<ObjectSeq>;

ObjList unit_list();  // [o]
ObjList tensor(const ObjList& a, const ObjList& b);
ObjList oplus(const ObjList& a, const ObjList& b);
ObjList dual(const ObjList& a);
std::string format(const ObjList& a);

/// An m×n matrix of CobSum; entry (i, j) is typed src[j] → tgt[i].
class MatArrow {
 public:
  /// The zero matrix src → tgt.
  MatArrow(ObjList src, ObjList tgt);
  /// Checks every entry against its row and column objects; entries are
  /// given row-major.
  MatArrow(ObjList src, ObjList tgt, std::vector<CobSum> entries);
  /// The 1×1 matrix containing x.
  explicit MatArrow(const CobSum& x);

  const ObjList& src() const { return src_; }
  const ObjList& tgt() const { return tgt_; }
  std::size_t rows() const { return tgt_.size(); }
  std::size_t cols() const { return src_.size(); }
  const CobSum& at(std::size_t i, std::size_t j) const { return entries_[i * cols() + j]; }
  void set(std::size_t i, std::size_t j, CobSum x);
  const std::vector<CobSum>& entries() const { return entries_; }

  bool operator==(const MatArrow&) const = default;

 private:
  ObjList src_;
  ObjList tgt_;
  std::vector<CobSum> entries_;
};

MatArrow identity(const ObjList& a);
MatArrow zero(const ObjList& a, const ObjList& b);  // a → b
bool is_zero(const MatArrow& f);

/// g∘f by matrix multiplication. Throws TypeMismatch if f.tgt ≠ g.src.
MatArrow compose(const MatArrow& g, const MatArrow& f);
MatArrow add(const MatArrow& f, const MatArrow& g);
MatArrow tensor(const MatArrow& f, const MatArrow& g);
MatArrow oplus(const MatArrow& f, const MatArrow& g);
MatArrow dagger(const MatArrow& f);

MatArrow pi1(const ObjList& a, const ObjList& b);     // a⊕b → a
MatArrow pi2(const ObjList& a, const ObjList& b);     // a⊕b → b
MatArrow iota1(const ObjList& a, const ObjList& b);   // a → a⊕b
MatArrow iota2(const ObjList& a, const ObjList& b);   // b → a⊕b

/// Strict structure: these are identity matrices on the appropriate lists.
MatArrow alpha(const ObjList& a, const ObjList& b, const ObjList& c);
MatArrow alpha_inv(const ObjList& a, const ObjList& b, const ObjList& c);
MatArrow lambda(const ObjList& a);
MatArrow lambda_inv(const ObjList& a);

MatArrow sigma(const ObjList& a, const ObjList& b);  // a⊗b → b⊗a
MatArrow eta(const ObjList& a);                      // [o] → a*⊗a
MatArrow eps(const ObjList& a);                      // a⊗a* → [o]

MatArrow name(const MatArrow& f);            // [o] → a*⊗b
MatArrow coname(const MatArrow& f);          // a⊗b* → [o]
MatArrow transpose_star(const MatArrow& f);  // b* → a*
MatArrow lower_star(const MatArrow& f);      // a* → b*

/// Vertical stacking of arrows with a common source.
MatArrow tuple(const std::vector<MatArrow>& fs);
/// Horizontal juxtaposition of arrows with a common target.
MatArrow cotuple(const std::vector<MatArrow>& fs);

/// ε_a∘(f⊗a*)∘σ_{a*,a}∘η_a for an endomorphism f: a → a.
MatArrow trace(const MatArrow& f);
/// s•f = f∘(s⊗1_a) for a scalar s: [o] → [o].
MatArrow scalar_act(const MatArrow& s, const MatArrow& f);

MatArrow distrib_tau(const ObjList& a, const ObjList& b, const ObjList& c);
MatArrow distrib_upsilon(const ObjList& a, const ObjList& b, const ObjList& c);

}  // namespace dcc
