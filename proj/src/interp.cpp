#include "dcc/interp.hpp"

#include "dcc/derived.hpp"

namespace dcc {

bool oplus_free(const Obj& a) {
  switch (a.kind()) {
    case ObjKind::Oplus: return false;
    case ObjKind::Star: return oplus_free(a.lhs());
    case ObjKind::Tensor: return oplus_free(a.lhs()) && oplus_free(a.rhs());
    default: return true;
  }
}

InjProjFamily inj_proj(const Obj& a) {
  using namespace terms;
  if (oplus_free(a)) return {a, {id(a)}, {id(a)}, {a}};
  InjProjFamily out{a, {}, {}, {}};
  switch (a.kind()) {
    case ObjKind::Tensor: {
      const auto f1 = inj_proj(a.lhs());
      const auto f2 = inj_proj(a.rhs());
      const std::size_t n1 = f1.components.size();
      const std::size_t n2 = f2.components.size();
      for (std::size_t i = 0; i < n1 * n2; ++i) {
        const std::size_t q = i / n2;
        const std::size_t r = i % n2;
        out.injections.push_back(tensor(f1.injections[q], f2.injections[r]));
        out.projections.push_back(tensor(f1.projections[q], f2.projections[r]));
        out.components.push_back(Obj::tensor(f1.components[q], f2.components[r]));
      }
      break;
    }
    case ObjKind::Star: {
      const auto f1 = inj_proj(a.lhs());
      for (std::size_t i = 0; i < f1.components.size(); ++i) {
        out.injections.push_back(star(f1.projections[i]));
        out.projections.push_back(star(f1.injections[i]));
        out.components.push_back(Obj::star(f1.components[i]));
      }
      break;
    }
    case ObjKind::Oplus: {
      const Obj& a1 = a.lhs();
      const Obj& a2 = a.rhs();
      const InjProjFamily fs[2] = {inj_proj(a1), inj_proj(a2)};
      const Term outer_inj[2] = {iota1(a1, a2), iota2(a1, a2)};
      const Term outer_proj[2] = {pi1(a1, a2), pi2(a1, a2)};
      for (int s = 0; s < 2; ++s) {
        const bool trivial = oplus_free(s == 0 ? a1 : a2);
        for (std::size_t k = 0; k < fs[s].components.size(); ++k) {
          if (trivial) {
            out.injections.push_back(outer_inj[s]);
            out.projections.push_back(outer_proj[s]);
          } else {
            out.injections.push_back(Term::compose(outer_inj[s], fs[s].injections[k]));
            out.projections.push_back(Term::compose(fs[s].projections[k], outer_proj[s]));
          }
          out.components.push_back(fs[s].components[k]);
        }
      }
      break;
    }
    default: break;
  }
  return out;
}

ObjList interp_object(const Obj& a) {
  switch (a.kind()) {
    case ObjKind::P: return {ObjectSeq{Sign::Plus}};
    case ObjKind::Unit: return unit_list();
    case ObjKind::Zero: return {};
    case ObjKind::Star: return dual(interp_object(a.lhs()));
    case ObjKind::Tensor: return tensor(interp_object(a.lhs()), interp_object(a.rhs()));
    case ObjKind::Oplus: return oplus(interp_object(a.lhs()), interp_object(a.rhs()));
  }
  return {};
}

namespace {

MatArrow prim_value(const Term& t) {
  std::vector<ObjList> a;
  for (const auto& o : t.args()) a.push_back(interp_object(o));
  switch (t.prim()) {
    case Prim::Gen: return MatArrow(CobSum(GCob::segment(GroupWord::generator(t.generator()))));
    case Prim::GenInv:
      return MatArrow(CobSum(GCob::segment(inverse(GroupWord::generator(t.generator())))));
    case Prim::Id: return identity(a[0]);
    case Prim::Alpha: return alpha(a[0], a[1], a[2]);
    case Prim::AlphaInv: return alpha_inv(a[0], a[1], a[2]);
    case Prim::Lam: return lambda(a[0]);
    case Prim::LamInv: return lambda_inv(a[0]);
    case Prim::Sigma: return sigma(a[0], a[1]);
    case Prim::Eta: return eta(a[0]);
    case Prim::Eps: return eps(a[0]);
    case Prim::Pi1: return pi1(a[0], a[1]);
    case Prim::Pi2: return pi2(a[0], a[1]);
    case Prim::Iota1: return iota1(a[0], a[1]);
    case Prim::Iota2: return iota2(a[0], a[1]);
    case Prim::Zero: return zero(a[0], a[1]);
  }
  throw TypeError(t.loc(), "unknown primitive");
}

}  // namespace

MatArrow H(const Term& t) {
  switch (t.kind()) {
    case TermKind::Prim: return prim_value(t);
    case TermKind::Dagger: return dagger(H(t.lhs()));
    case TermKind::Tensor: return tensor(H(t.lhs()), H(t.rhs()));
    case TermKind::Oplus: return oplus(H(t.lhs()), H(t.rhs()));
    case TermKind::Plus: return add(H(t.lhs()), H(t.rhs()));
    case TermKind::Compose: return compose(H(t.lhs()), H(t.rhs()));
  }
  throw TypeError(t.loc(), "unknown term");
}

MatrixForm matrix_form(const Term& u) {
  const auto ty = typecheck(u);
  const auto fa = inj_proj(ty.src);
  const auto fb = inj_proj(ty.tgt);
  const MatArrow hu = H(u);
  std::vector<MatArrow> inj;
  for (const auto& t : fa.injections) inj.push_back(compose(hu, H(t)));
  MatrixForm out{fa.components, fb.components, {}};
  for (const auto& p : fb.projections) {
    const MatArrow hp = H(p);
    for (const auto& x : inj) out.entries.push_back(compose(hp, x));
  }
  return out;
}

MatrixForm compose(const MatrixForm& g, const MatrixForm& f) {
  if (!(g.col_components == f.row_components)) throw TypeMismatch("matrix forms do not compose");
  MatrixForm out{f.col_components, g.row_components, {}};
  for (std::size_t i = 0; i < g.rows(); ++i) {
    for (std::size_t j = 0; j < f.cols(); ++j) {
      MatArrow acc = zero(interp_object(f.col_components[j]), interp_object(g.row_components[i]));
      for (std::size_t k = 0; k < f.rows(); ++k) acc = add(acc, compose(g.at(i, k), f.at(k, j)));
      out.entries.push_back(std::move(acc));
    }
  }
  return out;
}

MatrixForm tensor(const MatrixForm& f, const MatrixForm& g) {
  MatrixForm out;
  for (const auto& a : f.col_components) {
    for (const auto& b : g.col_components) out.col_components.push_back(Obj::tensor(a, b));
  }
  for (const auto& a : f.row_components) {
    for (const auto& b : g.row_components) out.row_components.push_back(Obj::tensor(a, b));
  }
  for (std::size_t i = 0; i < f.rows(); ++i) {
    for (std::size_t k = 0; k < g.rows(); ++k) {
      for (std::size_t j = 0; j < f.cols(); ++j) {
        for (std::size_t l = 0; l < g.cols(); ++l) out.entries.push_back(tensor(f.at(i, j), g.at(k, l)));
      }
    }
  }
  return out;
}

MatrixForm oplus(const MatrixForm& f, const MatrixForm& g) {
  MatrixForm out;
  out.col_components = f.col_components;
  out.col_components.insert(out.col_components.end(), g.col_components.begin(), g.col_components.end());
  out.row_components = f.row_components;
  out.row_components.insert(out.row_components.end(), g.row_components.begin(), g.row_components.end());
  for (std::size_t i = 0; i < out.rows(); ++i) {
    for (std::size_t j = 0; j < out.cols(); ++j) {
      const bool top = i < f.rows();
      const bool left = j < f.cols();
      if (top && left) {
        out.entries.push_back(f.at(i, j));
      } else if (!top && !left) {
        out.entries.push_back(g.at(i - f.rows(), j - f.cols()));
      } else {
        out.entries.push_back(zero(interp_object(out.col_components[j]),
                                   interp_object(out.row_components[i])));
      }
    }
  }
  return out;
}

MatrixForm add(const MatrixForm& f, const MatrixForm& g) {
  if (!(f.col_components == g.col_components) || !(f.row_components == g.row_components)) {
    throw TypeMismatch("matrix forms of different shape");
  }
  MatrixForm out{f.col_components, f.row_components, {}};
  for (std::size_t k = 0; k < f.entries.size(); ++k) out.entries.push_back(add(f.entries[k], g.entries[k]));
  return out;
}

Verdict equal(const Term& f, const Term& g, const Alphabet* alphabet) {
  const auto tf = typecheck(f, alphabet);
  const auto tg = typecheck(g, alphabet);
  if (!(tf.src == tg.src) || !(tf.tgt == tg.tgt)) {
    throw TypeError(f.loc(), "endpoints differ: " + print(tf.src) + " -> " + print(tf.tgt) + " versus " +
                                 print(tg.src) + " -> " + print(tg.tgt));
  }
  Verdict v{false, H(f), H(g), std::nullopt};
  v.equal = v.lhs == v.rhs;
  if (!v.equal) {
    for (std::size_t i = 0; i < v.lhs.rows() && !v.diff; ++i) {
      for (std::size_t j = 0; j < v.lhs.cols(); ++j) {
        if (!(v.lhs.at(i, j) == v.rhs.at(i, j))) {
          v.diff = {i, j};
          break;
        }
      }
    }
  }
  return v;
}

}  // namespace dcc
