#pragma once

// Closed-form Schmidt decomposition of two-qubit pure states.
//
// Two formulas cover every state, chosen by the diagonal condition
// c00* c01 + c10* c11 = 0:
//   * diagonal states: the Gram matrix is already diagonal, the B-side
//     Schmidt basis is the computational basis and the A-side vectors are the
//     normalized columns of the coefficient matrix;
//   * non-diagonal states: coefficients follow from the concurrence and the
//     B-side vectors from the explicit Gram eigenvectors
//     y_j = (c00* c01 + c10* c11, lambda_j^2 - |c00|^2 - |c10|^2), with the
//     A-side vectors x_j = M y_j.

#include <array>

#include "orthoschmidt/core.hpp"

namespace orthoschmidt {

enum class SchmidtBranch { Diagonal, NonDiagonal, Product, ClosedForm, Oracle };

/// sum_l coeffs[l] * basis_a[l] (x) basis_b[l], coeffs[0] >= coeffs[1] >= 0.
struct SchmidtDecomposition {
  std::array<double, 2> coeffs{1.0, 0.0};
  std::array<QubitVector, 2> basis_a{QubitVector::zero(), QubitVector::one()};
  std::array<QubitVector, 2> basis_b{QubitVector::zero(), QubitVector::one()};
  SchmidtBranch branch = SchmidtBranch::Diagonal;
  /// Set when coeffs[1] is zero within tolerance; the second basis pair is then
  /// an orthogonal completion rather than something the state determines.
  bool rank_deficient = false;
};

/// Raw output of a closed formula before normalization: coefficient pair plus
/// unnormalized A-side and B-side vectors, in the formula's own index order.
/// `b` holds the vectors exactly as they appear in the tensor product (the
/// conjugated y_j for the non-diagonal formulas).
struct ClosedForm {
  std::array<double, 2> coeffs{};
  std::array<QubitVector, 2> a{};
  std::array<QubitVector, 2> b{};
};

/// Turns a closed form of `state` into a SchmidtDecomposition. Coefficients
/// are sorted, the B-side vector with the smaller Gram eigen-residual is kept
/// and its partner completed orthogonally (keeping the partner's phase), and
/// the A-side vectors are taken as M conj(b_j) normalized. Only form.coeffs
/// and form.b are used; a formula's A-side vectors may differ from these by
/// a global phase.
SchmidtDecomposition assemble(const TwoQubitState& state, const ClosedForm& form,
                              SchmidtBranch branch = SchmidtBranch::ClosedForm,
                              double tol = kClassifyTol);

/// Decomposition of a product state a (x) b (vectors are normalized).
SchmidtDecomposition product_decomposition(const QubitVector& a, const QubitVector& b);

/// Closed form of the diagonal formula, applied without checking the
/// diagonal condition. On a non-diagonal state the A-side vectors come out
/// non-orthogonal.
ClosedForm diagonal_form(const TwoQubitState& state);

/// Closed form of the non-diagonal formula, applied without checking. On a
/// diagonal state at least one y_j is the zero vector.
ClosedForm nondiagonal_form(const TwoQubitState& state);

/// Schmidt coefficients sqrt((1 +- s) / 2) for s = sqrt(1 - C^2), with the
/// smaller one evaluated as C / sqrt(2 (1 + s)) to avoid cancellation.
std::array<double, 2> coefficients_from_discriminant(double s, double c);

/// Diagonal branch. Throws NotDiagonal when |c00* c01 + c10* c11| > tol.
SchmidtDecomposition schmidt_diagonal(const TwoQubitState& state, double tol = kClassifyTol);

/// Non-diagonal branch. Throws Diagonal when the diagonal condition holds
/// within tol (the y_j vectors then degenerate to zero).
SchmidtDecomposition schmidt_nondiagonal(const TwoQubitState& state, double tol = kClassifyTol);

/// Dispatches on is_diagonal(state, tol); boundary cases go to the diagonal
/// branch. The state must be unit-norm within 1e-10 (see make_state).
SchmidtDecomposition schmidt(const TwoQubitState& state, double tol = kClassifyTol);

/// sum_l coeffs[l] * basis_a[l] (x) basis_b[l].
TwoQubitState reconstruct(const SchmidtDecomposition& d);

/// Largest violation of the decomposition invariants: unit vectors,
/// orthogonal pairs (when coeffs[1] > tol), descending non-negative
/// coefficients and coeffs[0]^2 + coeffs[1]^2 = 1.
double invariant_violation(const SchmidtDecomposition& d, double tol = kClassifyTol);

}  // namespace orthoschmidt
