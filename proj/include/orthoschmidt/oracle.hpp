#pragma once

// Independent verification path. The oracle decomposes a state through a
// direct eigen-decomposition of its Gram matrix and never looks at the
// diagonal condition, so it can be used to check the closed-form branches.

#include <string>
#include <vector>

#include "orthoschmidt/set.hpp"

namespace orthoschmidt {

struct Eigen2 {
  std::array<double, 2> values{};          // descending
  std::array<QubitVector, 2> vectors{};    // orthonormal
};

/// Eigen-decomposition of a 2x2 Hermitian matrix. The larger eigenvalue uses
/// the trace/discriminant formula, the smaller one det / lambda_max.
Eigen2 hermitian_eigen(const Matrix2& h);

SchmidtDecomposition oracle_schmidt(const TwoQubitState& state);

/// 'P' when C <= tol, 'M' when refine and |C - 1| <= tol, otherwise 'E'.
char classify_state(const TwoQubitState& state, bool refine = false, double tol = kClassifyTol);

/// Ordered pattern such as "PPEE". Throws NotNormalized for non-unit members.
std::string classify(const std::vector<TwoQubitState>& states, bool refine = false,
                     double tol = kClassifyTol);

/// Declared pattern vs. the states: 'P' and 'E' must match the unrefined
/// label, 'M' the refined one. An 'E' position also accepts an M state.
bool labels_match(const std::string& declared, const std::vector<TwoQubitState>& states,
                  double tol = kClassifyTol);

struct StateReport {
  double norm_error = 0.0;
  double concurrence = 0.0;
  char label = 'P';
  /// Dispatching decomposition (schmidt) vs. the state.
  double reconstruction_error = 0.0;
  double oracle_reconstruction_error = 0.0;
  double coefficient_mismatch_vs_oracle = 0.0;
  double invariant_violation = 0.0;
  /// Set only by verify(OrthoSet): the constructor's own decomposition.
  double closed_form_reconstruction_error = 0.0;
  double closed_form_coefficient_mismatch = 0.0;
  double closed_form_invariant_violation = 0.0;
};

struct VerificationReport {
  double max_pairwise_overlap = 0.0;
  std::vector<StateReport> per_state;
  std::string pattern;          // refined labels
  bool labels_ok = true;        // only meaningful for verify(OrthoSet)
  bool complete = false;        // four members, Gram matrix identity
  bool passed = false;
};

/// Pairwise overlaps, per-state decompositions on both paths, labels.
/// `tol` classifies, `verify_tol` bounds every error for `passed`.
VerificationReport verify_set(const std::vector<TwoQubitState>& states, double tol = kClassifyTol,
                              double verify_tol = kVerifyTol);

/// verify_set plus the constructor's decompositions and declared labels.
VerificationReport verify(const OrthoSet& set, double tol = kClassifyTol,
                          double verify_tol = kVerifyTol);

}  // namespace orthoschmidt
