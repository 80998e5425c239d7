#pragma once

// Interpretation of terms as matrices of cobordism sums, injections and
// projections of object formulae, matrix forms, and the equality decision.

#include <cstddef>
#include <optional>
#include <vector>

#include "dcc/matcat.hpp"
#include "dcc/syntax.hpp"

namespace dcc {

struct InjProjFamily {
  Obj object;
  std::vector<Term> injections;   // component[i] → object
  std::vector<Term> projections;  // object → component[i]
  std::vector<Obj> components;    // ⊕-free
};

bool oplus_free(const Obj& a);
InjProjFamily inj_proj(const Obj& a);

ObjList interp_object(const Obj& a);
/// The functor H. Daggers are interpreted semantically.
MatArrow H(const Term& t);

/// A grid of arrows between the ⊕-free components of the source (columns)
/// and target (rows) of a term.
struct MatrixForm {
  std::vector<Obj> col_components;
  std::vector<Obj> row_components;
  std::vector<MatArrow> entries;  // row-major

  std::size_t rows() const { return row_components.size(); }
  std::size_t cols() const { return col_components.size(); }
  const MatArrow& at(std::size_t i, std::size_t j) const { return entries[i * cols() + j]; }
  bool operator==(const MatrixForm&) const = default;
};

/// Entry (i, j) is H(π^i_b)∘H(u)∘H(ι^j_a).
MatrixForm matrix_form(const Term& u);

MatrixForm compose(const MatrixForm& g, const MatrixForm& f);
MatrixForm tensor(const MatrixForm& f, const MatrixForm& g);
MatrixForm oplus(const MatrixForm& f, const MatrixForm& g);
MatrixForm add(const MatrixForm& f, const MatrixForm& g);

struct Verdict {
  bool equal = false;
  MatArrow lhs;
  MatArrow rhs;
  /// First differing entry (row, column) in row-major order, when unequal.
  std::optional<std::pair<std::size_t, std::size_t>> diff;
};

/// Decides equality of two terms with identical endpoints. Throws TypeError
/// if the terms are ill-typed or their endpoints differ.
Verdict equal(const Term& f, const Term& g, const Alphabet* alphabet = nullptr);

}  // namespace dcc
