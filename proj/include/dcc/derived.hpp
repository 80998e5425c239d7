#pragma once

// Term builders for derived arrows: names, conames, stars, n-ary
// biproduct operations, traces, scalar action and the canonical
// isomorphisms of a compact closed category. All builders produce fully
// typed terms with explicit associativity and unit arrows.

#include <cstddef>
#include <vector>

#include "dcc/syntax.hpp"

namespace dcc::terms {

Term id(const Obj& a);
Term alpha(const Obj& a, const Obj& b, const Obj& c);
Term alpha_inv(const Obj& a, const Obj& b, const Obj& c);
Term lam(const Obj& a);
Term lam_inv(const Obj& a);
Term sigma(const Obj& a, const Obj& b);
Term eta(const Obj& a);
Term eps(const Obj& a);
Term pi1(const Obj& a, const Obj& b);
Term pi2(const Obj& a, const Obj& b);
Term iota1(const Obj& a, const Obj& b);
Term iota2(const Obj& a, const Obj& b);
Term zero(const Obj& a, const Obj& b);

/// Right-nested composite: chain({h, g, f}) = h∘g∘f.
Term chain(const std::vector<Term>& fs);
Term tensor(const Term& f, const Term& g);
Term oplus(const Term& f, const Term& g);
Term plus(const Term& f, const Term& g);
Term dagger(const Term& f);

Term name(const Term& f);         // ⌜f⌝ = (a*⊗f)∘η_a
Term coname(const Term& f);       // ⌞f⌟ = ε_b∘(f⊗b*)
Term star(const Term& f);         // f*: b* → a*
Term lower_star(const Term& f);   // f_* = (f†)*

/// Left-associated n-fold biproduct ((a₀⊕a₁)⊕a₂)⊕…; n ≥ 1.
Obj oplus_all(const std::vector<Obj>& as);
/// n·a, the n-fold biproduct of a with itself.
Obj copies(const Obj& a, std::size_t n);
/// The k-th injection/projection of a left-associated n-fold biproduct.
Term injection(const std::vector<Obj>& as, std::size_t k);
Term projection(const std::vector<Obj>& as, std::size_t k);

/// ⟨f₀,…,f_{n−1}⟩ = Σ ι^k∘f_k and [f₀,…,f_{n−1}] = Σ f_k∘π^k.
Term tuple(const std::vector<Term>& fs);
Term cotuple(const std::vector<Term>& fs);
/// n·f = f⊕f⊕…⊕f, left-associated.
Term copies(const Term& f, std::size_t n);
/// ⊕_k f_k, left-associated.
Term oplus_all(const std::vector<Term>& fs);

/// τ: a⊗(b⊕c) → (a⊗b)⊕(a⊗c) and υ: (a⊕b)⊗c → (a⊗c)⊕(b⊗c).
Term distrib_tau(const Obj& a, const Obj& b, const Obj& c);
Term distrib_upsilon(const Obj& a, const Obj& b, const Obj& c);
/// n-ary versions over left-associated sums: a⊗(⊕b_k) → ⊕(a⊗b_k) and
/// (⊕a_k)⊗c → ⊕(a_k⊗c).
Term distrib_tau(const Obj& a, const std::vector<Obj>& bs);
Term distrib_upsilon(const std::vector<Obj>& as, const Obj& c);

Term trace(const Term& f);                     // ε_a∘(f⊗a*)∘σ_{a*,a}∘η_a
Term scalar_act(const Term& s, const Term& f); // f∘λ_a∘(s⊗a)∘λ⁻¹_a

Term iso_u(const Obj& a, const Obj& b);  // (a⊗b)* → b*⊗a*
Term iso_v();                            // I* → I
Term iso_w(const Obj& a);                // a** → a

}  // namespace dcc::terms
