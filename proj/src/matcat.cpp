#include "dcc/matcat.hpp"

#include "dcc/error.hpp"

namespace dcc {

ObjList unit_list() { return {ObjectSeq{}}; }

ObjList tensor(const ObjList& a, const ObjList& b) {
  ObjList out;
  out.reserve(a.size() * b.size());
  for (const auto& x : a) {
    for (const auto& y : b) out.push_back(concat(x, y));
  }
  return out;
}

ObjList oplus(const ObjList& a, const ObjList& b) {
  ObjList out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

ObjList dual(const ObjList& a) {
  ObjList out;
  out.reserve(a.size());
  for (const auto& x : a) out.push_back(dual_object(x));
  return out;
}

std::string format(const ObjList& a) {
  std::string out = "[";
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) out += ", ";
    out += format(a[i]);
  }
  return out + "]";
}

MatArrow::MatArrow(ObjList src, ObjList tgt) : src_(std::move(src)), tgt_(std::move(tgt)) {
  entries_.reserve(rows() * cols());
  for (const auto& t : tgt_) {
    for (const auto& s : src_) entries_.emplace_back(s, t);
  }
}

MatArrow::MatArrow(ObjList src, ObjList tgt, std::vector<CobSum> entries)
    : src_(std::move(src)), tgt_(std::move(tgt)), entries_(std::move(entries)) {
  if (entries_.size() != rows() * cols()) throw TypeMismatch("matrix entry count mismatch");
  for (std::size_t i = 0; i < rows(); ++i) {
    for (std::size_t j = 0; j < cols(); ++j) {
      const auto& e = at(i, j);
      if (e.src() != src_[j] || e.tgt() != tgt_[i]) {
        throw TypeMismatch("matrix entry (" + std::to_string(i) + ", " + std::to_string(j) +
                           ") has the wrong type");
      }
    }
  }
}

MatArrow::MatArrow(const CobSum& x) : MatArrow({x.src()}, {x.tgt()}, {x}) {}

void MatArrow::set(std::size_t i, std::size_t j, CobSum x) {
  if (x.src() != src_[j] || x.tgt() != tgt_[i]) throw TypeMismatch("entry type mismatch");
  entries_[i * cols() + j] = std::move(x);
}

MatArrow identity(const ObjList& a) {
  MatArrow out(a, a);
  for (std::size_t i = 0; i < a.size(); ++i) out.set(i, i, CobSum::identity(a[i]));
  return out;
}

MatArrow zero(const ObjList& a, const ObjList& b) { return MatArrow(a, b); }

bool is_zero(const MatArrow& f) {
  for (const auto& e : f.entries()) {
    if (!e.is_zero()) return false;
  }
  return true;
}

MatArrow compose(const MatArrow& g, const MatArrow& f) {
  if (f.tgt() != g.src()) {
    throw TypeMismatch("cannot compose " + format(f.src()) + " -> " + format(f.tgt()) +
                       " with " + format(g.src()) + " -> " + format(g.tgt()));
  }
  MatArrow out(f.src(), g.tgt());
  for (std::size_t i = 0; i < g.rows(); ++i) {
    for (std::size_t j = 0; j < f.cols(); ++j) {
      CobSum acc(f.src()[j], g.tgt()[i]);
      for (std::size_t k = 0; k < f.rows(); ++k) {
        const auto& x = f.at(k, j);
        const auto& y = g.at(i, k);
        if (x.is_zero() || y.is_zero()) continue;
        acc = add(acc, compose(y, x));
      }
      out.set(i, j, std::move(acc));
    }
  }
  return out;
}

MatArrow add(const MatArrow& f, const MatArrow& g) {
  if (f.src() != g.src() || f.tgt() != g.tgt()) throw TypeMismatch("sum of differently typed matrices");
  std::vector<CobSum> es;
  es.reserve(f.entries().size());
  for (std::size_t k = 0; k < f.entries().size(); ++k) es.push_back(add(f.entries()[k], g.entries()[k]));
  return MatArrow(f.src(), f.tgt(), std::move(es));
}

MatArrow tensor(const MatArrow& f, const MatArrow& g) {
  MatArrow out(tensor(f.src(), g.src()), tensor(f.tgt(), g.tgt()));
  const std::size_t gr = g.rows();
  const std::size_t gc = g.cols();
  for (std::size_t i = 0; i < f.rows(); ++i) {
    for (std::size_t j = 0; j < f.cols(); ++j) {
      const auto& x = f.at(i, j);
      if (x.is_zero()) continue;
      for (std::size_t k = 0; k < gr; ++k) {
        for (std::size_t l = 0; l < gc; ++l) {
          const auto& y = g.at(k, l);
          if (y.is_zero()) continue;
          out.set(i * gr + k, j * gc + l, tensor(x, y));
        }
      }
    }
  }
  return out;
}

MatArrow oplus(const MatArrow& f, const MatArrow& g) {
  MatArrow out(oplus(f.src(), g.src()), oplus(f.tgt(), g.tgt()));
  for (std::size_t i = 0; i < f.rows(); ++i) {
    for (std::size_t j = 0; j < f.cols(); ++j) out.set(i, j, f.at(i, j));
  }
  for (std::size_t i = 0; i < g.rows(); ++i) {
    for (std::size_t j = 0; j < g.cols(); ++j) out.set(f.rows() + i, f.cols() + j, g.at(i, j));
  }
  return out;
}

MatArrow dagger(const MatArrow& f) {
  MatArrow out(f.tgt(), f.src());
  for (std::size_t i = 0; i < f.rows(); ++i) {
    for (std::size_t j = 0; j < f.cols(); ++j) out.set(j, i, dagger(f.at(i, j)));
  }
  return out;
}

MatArrow pi1(const ObjList& a, const ObjList& b) { return dagger(iota1(a, b)); }
MatArrow pi2(const ObjList& a, const ObjList& b) { return dagger(iota2(a, b)); }

MatArrow iota1(const ObjList& a, const ObjList& b) {
  MatArrow out(a, oplus(a, b));
  for (std::size_t i = 0; i < a.size(); ++i) out.set(i, i, CobSum::identity(a[i]));
  return out;
}

MatArrow iota2(const ObjList& a, const ObjList& b) {
  MatArrow out(b, oplus(a, b));
  for (std::size_t i = 0; i < b.size(); ++i) out.set(a.size() + i, i, CobSum::identity(b[i]));
  return out;
}

MatArrow alpha(const ObjList& a, const ObjList& b, const ObjList& c) {
  return identity(tensor(tensor(a, b), c));
}
MatArrow alpha_inv(const ObjList& a, const ObjList& b, const ObjList& c) {
  return identity(tensor(a, tensor(b, c)));
}
MatArrow lambda(const ObjList& a) { return identity(a); }
MatArrow lambda_inv(const ObjList& a) { return identity(a); }

MatArrow sigma(const ObjList& a, const ObjList& b) {
  const std::size_t n = a.size();
  const std::size_t m = b.size();
  MatArrow out(tensor(a, b), tensor(b, a));
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t l = 0; l < m; ++l) out.set(l * n + j, j * m + l, CobSum(sigma(a[j], b[l])));
  }
  return out;
}

MatArrow eta(const ObjList& a) {
  const std::size_t n = a.size();
  MatArrow out(unit_list(), tensor(dual(a), a));
  for (std::size_t k = 0; k < n; ++k) out.set(k * (n + 1), 0, CobSum(eta(a[k])));
  return out;
}

MatArrow eps(const ObjList& a) {
  const std::size_t n = a.size();
  MatArrow out(tensor(a, dual(a)), unit_list());
  for (std::size_t k = 0; k < n; ++k) out.set(0, k * (n + 1), CobSum(eps(a[k])));
  return out;
}

MatArrow name(const MatArrow& f) {
  return compose(tensor(identity(dual(f.src())), f), eta(f.src()));
}

MatArrow coname(const MatArrow& f) {
  return compose(eps(f.tgt()), tensor(f, identity(dual(f.tgt()))));
}

MatArrow transpose_star(const MatArrow& f) {
  MatArrow out(dual(f.tgt()), dual(f.src()));
  for (std::size_t i = 0; i < f.rows(); ++i) {
    for (std::size_t j = 0; j < f.cols(); ++j) {
      const auto& x = f.at(i, j);
      out.set(j, i, map_terms(x, dual_object(x.tgt()), dual_object(x.src()),
                              [](const GCob& c) { return transpose_star(c); }));
    }
  }
  return out;
}

MatArrow lower_star(const MatArrow& f) { return transpose_star(dagger(f)); }

MatArrow tuple(const std::vector<MatArrow>& fs) {
  if (fs.empty()) throw TypeMismatch("tuple of no arrows has no source");
  ObjList tgt;
  for (const auto& f : fs) {
    if (f.src() != fs.front().src()) throw TypeMismatch("tuple components differ in source");
    tgt = oplus(tgt, f.tgt());
  }
  MatArrow out(fs.front().src(), tgt);
  std::size_t row = 0;
  for (const auto& f : fs) {
    for (std::size_t i = 0; i < f.rows(); ++i) {
      for (std::size_t j = 0; j < f.cols(); ++j) out.set(row + i, j, f.at(i, j));
    }
    row += f.rows();
  }
  return out;
}

MatArrow cotuple(const std::vector<MatArrow>& fs) {
  std::vector<MatArrow> ds;
  ds.reserve(fs.size());
  for (const auto& f : fs) ds.push_back(dagger(f));
  // Transposition twice with entrywise dagger twice is the identity.
  return dagger(tuple(ds));
}

MatArrow trace(const MatArrow& f) {
  if (f.src() != f.tgt()) throw TypeMismatch("trace of a non-endomorphism");
  const ObjList& a = f.src();
  const ObjList as = dual(a);
  return compose(eps(a), compose(tensor(f, identity(as)), compose(sigma(as, a), eta(a))));
}

MatArrow scalar_act(const MatArrow& s, const MatArrow& f) {
  if (s.src() != unit_list() || s.tgt() != unit_list()) throw TypeMismatch("scalar must be [o] -> [o]");
  return compose(f, tensor(s, identity(f.src())));
}

MatArrow distrib_tau(const ObjList& a, const ObjList& b, const ObjList& c) {
  const MatArrow ia = identity(a);
  return tuple({tensor(ia, pi1(b, c)), tensor(ia, pi2(b, c))});
}

MatArrow distrib_upsilon(const ObjList& a, const ObjList& b, const ObjList& c) {
  const MatArrow ic = identity(c);
  return tuple({tensor(pi1(a, b), ic), tensor(pi2(a, b), ic)});
}

}  // namespace dcc
