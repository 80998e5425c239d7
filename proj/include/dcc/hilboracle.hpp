#pragma once

// Numeric semantics in finite-dimensional complex vector spaces. The letter
// p denotes C², duals are interpreted on the same space with unnormalised
// cups and caps, and ⊕ is the block direct sum.

#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "dcc/syntax.hpp"

namespace dcc {

using Assignment = std::vector<Eigen::Matrix2cd>;

/// A dense matrix whose rows and columns are grouped into one block per
/// ⊕-component of the target and source objects.
struct ComplexBlockMatrix {
  std::vector<Eigen::Index> row_dims;
  std::vector<Eigen::Index> col_dims;
  Eigen::MatrixXcd value;
};

/// Block dimensions of an object formula: p ↦ [2], I ↦ [1], 0 ↦ [].
std::vector<Eigen::Index> block_dims(const Obj& a);

/// β₁ = σ₀, β₂ = σ₁, β₃ = σ₃, β₄ = −iσ₂, then identity for further generators.
Assignment pauli_assignment(std::size_t generators = 4);
Eigen::Matrix2cd random_unitary(std::mt19937_64& rng);
Assignment random_unitary_assignment(std::size_t generators, std::mt19937_64& rng);

/// Throws std::invalid_argument if a generator is unassigned or its matrix
/// is singular.
ComplexBlockMatrix eval_numeric(const Term& t, const Assignment& assignment);

/// Largest entrywise modulus of the difference; infinity on a shape mismatch.
double max_difference(const ComplexBlockMatrix& x, const ComplexBlockMatrix& y);

/// Throws TypeError if the endpoints of f and g differ.
bool agree(const Term& f, const Term& g, double tol, const Assignment& assignment);

}  // namespace dcc
