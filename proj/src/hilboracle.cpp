#include "dcc/hilboracle.hpp"

#include <limits>
#include <numeric>
#include <stdexcept>

namespace dcc {

namespace {

using Dims = std::vector<Eigen::Index>;
using Idx = Eigen::Index;
using cd = std::complex<double>;

Idx total(const Dims& d) { return std::accumulate(d.begin(), d.end(), Idx{0}); }

Dims tensor_dims(const Dims& a, const Dims& b) {
  Dims out;
  for (auto x : a) {
    for (auto y : b) out.push_back(x * y);
  }
  return out;
}

Dims concat_dims(const Dims& a, const Dims& b) {
  Dims out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

Dims offsets(const Dims& d) {
  Dims out(d.size(), 0);
  for (std::size_t k = 1; k < d.size(); ++k) out[k] = out[k - 1] + d[k - 1];
  return out;
}

// Position in block order of the plain Kronecker basis vector x⊗y.
std::vector<Idx> kron_to_block(const Dims& a, const Dims& b) {
  const Idx nb = total(b);
  const Dims oa = offsets(a);
  const Dims ob = offsets(b);
  std::vector<Idx> perm(static_cast<std::size_t>(total(a) * nb));
  Idx block_start = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t k = 0; k < b.size(); ++k) {
      for (Idx x = 0; x < a[i]; ++x) {
        for (Idx y = 0; y < b[k]; ++y) {
          perm[static_cast<std::size_t>((oa[i] + x) * nb + ob[k] + y)] = block_start + x * b[k] + y;
        }
      }
      block_start += a[i] * b[k];
    }
  }
  return perm;
}

Eigen::MatrixXcd permutation_matrix(const std::vector<Idx>& perm) {
  const Idx n = static_cast<Idx>(perm.size());
  Eigen::MatrixXcd p = Eigen::MatrixXcd::Zero(n, n);
  for (Idx k = 0; k < n; ++k) p(perm[static_cast<std::size_t>(k)], k) = 1.0;
  return p;
}

Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Idx i = 0; i < a.rows(); ++i) {
    for (Idx j = 0; j < a.cols(); ++j) out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  }
  return out;
}

ComplexBlockMatrix make(Dims rows, Dims cols, Eigen::MatrixXcd m) {
  return {std::move(rows), std::move(cols), std::move(m)};
}

ComplexBlockMatrix ident(const Dims& d) {
  return make(d, d, Eigen::MatrixXcd::Identity(total(d), total(d)));
}

ComplexBlockMatrix tensor(const ComplexBlockMatrix& f, const ComplexBlockMatrix& g) {
  const auto pr = permutation_matrix(kron_to_block(f.row_dims, g.row_dims));
  const auto pc = permutation_matrix(kron_to_block(f.col_dims, g.col_dims));
  return make(tensor_dims(f.row_dims, g.row_dims), tensor_dims(f.col_dims, g.col_dims),
              pr * kron(f.value, g.value) * pc.transpose());
}

ComplexBlockMatrix oplus(const ComplexBlockMatrix& f, const ComplexBlockMatrix& g) {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(f.value.rows() + g.value.rows(), f.value.cols() + g.value.cols());
  m.topLeftCorner(f.value.rows(), f.value.cols()) = f.value;
  m.bottomRightCorner(g.value.rows(), g.value.cols()) = g.value;
  return make(concat_dims(f.row_dims, g.row_dims), concat_dims(f.col_dims, g.col_dims), std::move(m));
}

ComplexBlockMatrix sigma(const Dims& a, const Dims& b) {
  const Idx na = total(a);
  const Idx nb = total(b);
  Eigen::MatrixXcd s = Eigen::MatrixXcd::Zero(na * nb, na * nb);
  for (Idx x = 0; x < na; ++x) {
    for (Idx y = 0; y < nb; ++y) s(y * na + x, x * nb + y) = 1.0;
  }
  const auto p_ab = permutation_matrix(kron_to_block(a, b));
  const auto p_ba = permutation_matrix(kron_to_block(b, a));
  return make(tensor_dims(b, a), tensor_dims(a, b), p_ba * s * p_ab.transpose());
}

Eigen::MatrixXcd cup(const Dims& a) {
  const Idx n = total(a);
  Eigen::MatrixXcd v = Eigen::MatrixXcd::Zero(n * n, 1);
  for (Idx i = 0; i < n; ++i) v(i * n + i, 0) = 1.0;
  return permutation_matrix(kron_to_block(a, a)) * v;
}

ComplexBlockMatrix injection(const Dims& a, const Dims& b, bool second) {
  const Dims sum = concat_dims(a, b);
  const Idx na = total(a);
  const Idx nb = total(b);
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(na + nb, second ? nb : na);
  if (second) {
    m.bottomRows(nb) = Eigen::MatrixXcd::Identity(nb, nb);
  } else {
    m.topRows(na) = Eigen::MatrixXcd::Identity(na, na);
  }
  return make(sum, second ? b : a, std::move(m));
}

ComplexBlockMatrix adjoint(const ComplexBlockMatrix& f) {
  return make(f.col_dims, f.row_dims, f.value.adjoint());
}

const Eigen::Matrix2cd& lookup(const Assignment& as, Generator g) {
  if (g.id >= as.size()) throw std::invalid_argument("generator #" + std::to_string(g.id) + " is unassigned");
  return as[g.id];
}

ComplexBlockMatrix eval(const Term& t, const Assignment& as) {
  switch (t.kind()) {
    case TermKind::Dagger: return adjoint(eval(t.lhs(), as));
    case TermKind::Tensor: return tensor(eval(t.lhs(), as), eval(t.rhs(), as));
    case TermKind::Oplus: return oplus(eval(t.lhs(), as), eval(t.rhs(), as));
    case TermKind::Plus: {
      auto f = eval(t.lhs(), as);
      auto g = eval(t.rhs(), as);
      if (f.value.rows() != g.value.rows() || f.value.cols() != g.value.cols()) {
        throw std::logic_error("dimension mismatch in sum");
      }
      f.value += g.value;
      return f;
    }
    case TermKind::Compose: {
      auto g = eval(t.lhs(), as);
      auto f = eval(t.rhs(), as);
      if (g.value.cols() != f.value.rows()) throw std::logic_error("dimension mismatch in composite");
      return make(g.row_dims, f.col_dims, g.value * f.value);
    }
    case TermKind::Prim: break;
  }
  std::vector<Dims> d;
  for (const auto& o : t.args()) d.push_back(block_dims(o));
  switch (t.prim()) {
    case Prim::Gen: return make({2}, {2}, lookup(as, t.generator()));
    case Prim::GenInv: {
      const auto& m = lookup(as, t.generator());
      if (std::abs(m.determinant()) < 1e-12) throw std::invalid_argument("singular generator matrix");
      return make({2}, {2}, m.inverse());
    }
    case Prim::Id:
    case Prim::Lam:
    case Prim::LamInv: return ident(d[0]);
    case Prim::Alpha:
    case Prim::AlphaInv: return ident(tensor_dims(tensor_dims(d[0], d[1]), d[2]));
    case Prim::Sigma: return sigma(d[0], d[1]);
    case Prim::Eta: return make(tensor_dims(d[0], d[0]), {1}, cup(d[0]));
    case Prim::Eps: return make({1}, tensor_dims(d[0], d[0]), cup(d[0]).transpose());
    case Prim::Iota1: return injection(d[0], d[1], false);
    case Prim::Iota2: return injection(d[0], d[1], true);
    case Prim::Pi1: return adjoint(injection(d[0], d[1], false));
    case Prim::Pi2: return adjoint(injection(d[0], d[1], true));
    case Prim::Zero: return make(d[1], d[0], Eigen::MatrixXcd::Zero(total(d[1]), total(d[0])));
  }
  throw std::logic_error("unknown primitive");
}

}  // namespace

std::vector<Eigen::Index> block_dims(const Obj& a) {
  switch (a.kind()) {
    case ObjKind::P: return {2};
    case ObjKind::Unit: return {1};
    case ObjKind::Zero: return {};
    case ObjKind::Star: return block_dims(a.lhs());
    case ObjKind::Tensor: return tensor_dims(block_dims(a.lhs()), block_dims(a.rhs()));
    case ObjKind::Oplus: return concat_dims(block_dims(a.lhs()), block_dims(a.rhs()));
  }
  return {};
}

Assignment pauli_assignment(std::size_t generators) {
  const cd i(0.0, 1.0);
  Eigen::Matrix2cd s0, s1, s2, s3;
  s0 << 1, 0, 0, 1;
  s1 << 0, 1, 1, 0;
  s2 << 0, -i, i, 0;
  s3 << 1, 0, 0, -1;
  Assignment out = {s0, s1, s3, cd(0.0, -1.0) * s2};
  out.resize(generators, Eigen::Matrix2cd::Identity());
  return out;
}

Eigen::Matrix2cd random_unitary(std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  Eigen::Matrix2cd z;
  for (Idx r = 0; r < 2; ++r) {
    for (Idx c = 0; c < 2; ++c) z(r, c) = cd(normal(rng), normal(rng));
  }
  Eigen::HouseholderQR<Eigen::Matrix2cd> qr(z);
  Eigen::Matrix2cd q = qr.householderQ();
  const Eigen::Matrix2cd r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Idx k = 0; k < 2; ++k) {
    const double mod = std::abs(r(k, k));
    if (mod > 0) q.col(k) *= r(k, k) / mod;
  }
  return q;
}

Assignment random_unitary_assignment(std::size_t generators, std::mt19937_64& rng) {
  Assignment out;
  for (std::size_t k = 0; k < generators; ++k) out.push_back(random_unitary(rng));
  return out;
}

ComplexBlockMatrix eval_numeric(const Term& t, const Assignment& assignment) { return eval(t, assignment); }

double max_difference(const ComplexBlockMatrix& x, const ComplexBlockMatrix& y) {
  if (x.value.rows() != y.value.rows() || x.value.cols() != y.value.cols()) {
    return std::numeric_limits<double>::infinity();
  }
  if (x.value.size() == 0) return 0.0;
  return (x.value - y.value).cwiseAbs().maxCoeff();
}

bool agree(const Term& f, const Term& g, double tol, const Assignment& assignment) {
  const auto tf = typecheck(f);
  const auto tg = typecheck(g);
  if (!(tf.src == tg.src) || !(tf.tgt == tg.tgt)) throw TypeError(f.loc(), "endpoints differ");
  return max_difference(eval_numeric(f, assignment), eval_numeric(g, assignment)) <= tol;
}

}  // namespace dcc
