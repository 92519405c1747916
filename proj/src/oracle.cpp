#include "orthoschmidt/oracle.hpp"

#include <algorithm>
#include <cmath>

#include "orthoschmidt/error.hpp"

namespace orthoschmidt {

namespace {

Complex phase_of(Complex z) {
  const double r = std::abs(z);
  return r > 0.0 ? z / r : Complex(1.0);
}

double coefficient_gap(const SchmidtDecomposition& x, const SchmidtDecomposition& y) {
  return std::max(std::abs(x.coeffs[0] - y.coeffs[0]), std::abs(x.coeffs[1] - y.coeffs[1]));
}

}  // namespace

Eigen2 hermitian_eigen(const Matrix2& h) {
  const double p = h(0, 0).real(), q = h(1, 1).real();
  const Complex g = h(0, 1);
  const double big = 0.5 * (p + q + std::hypot(p - q, 2.0 * std::abs(g)));
  const double det = p * q - std::norm(g);
  const double small = big > 0.0 ? det / big : 0.0;

  // Null vector of the longer row of h - big*I.
  const QubitVector from_row0{g, big - p};
  const QubitVector from_row1{big - q, std::conj(g)};
  const QubitVector v = from_row0.norm() >= from_row1.norm() ? from_row0 : from_row1;
  Eigen2 e;
  e.values = {big, small};
  e.vectors[0] = v.norm() > 0.0 ? v.normalized() : QubitVector::zero();
  e.vectors[1] = orthogonal_complement(e.vectors[0]);
  return e;
}

SchmidtDecomposition oracle_schmidt(const TwoQubitState& state) {
  const Matrix2 m = coefficient_matrix(state);
  const Matrix2 g = gram(state);
  Eigen2 e = hermitian_eigen(g);
  // The determinant of the Gram matrix is |det M|^2; use it directly.
  e.values[1] = e.values[0] > 0.0 ? std::norm(m.det()) / e.values[0] : 0.0;

  SchmidtDecomposition d;
  d.branch = SchmidtBranch::Oracle;
  d.coeffs = {std::sqrt(std::max(e.values[0], 0.0)), std::sqrt(std::max(e.values[1], 0.0))};
  const QubitVector v0 = m * e.vectors[0];
  d.basis_a[0] = v0.norm() > 0.0 ? v0.normalized() : QubitVector::zero();
  const QubitVector perp = orthogonal_complement(d.basis_a[0]);
  d.basis_a[1] = phase_of(inner(perp, m * e.vectors[1])) * perp;
  d.basis_b = {e.vectors[0].conj(), e.vectors[1].conj()};
  d.rank_deficient = d.coeffs[1] <= kClassifyTol;
  return d;
}

char classify_state(const TwoQubitState& state, bool refine, double tol) {
  const double c = concurrence(state);
  if (c <= tol) return 'P';
  if (refine && std::abs(c - 1.0) <= tol) return 'M';
  return 'E';
}

std::string classify(const std::vector<TwoQubitState>& states, bool refine, double tol) {
  std::string out;
  for (const auto& s : states) {
    for (const auto& z : s.amplitudes())
      if (!is_finite(z)) throw Error(ErrorCode::NonFinite, "state amplitudes must be finite");
    if (std::abs(s.norm() - 1.0) > tol)
      throw Error(ErrorCode::NotNormalized, "states must be unit within the tolerance");
    out.push_back(classify_state(s, refine, tol));
  }
  return out;
}

bool labels_match(const std::string& declared, const std::vector<TwoQubitState>& states, double tol) {
  if (declared.size() != states.size()) return false;
  for (std::size_t i = 0; i < states.size(); ++i) {
    const char coarse = classify_state(states[i], false, tol);
    const char fine = classify_state(states[i], true, tol);
    switch (declared[i]) {
      case 'P': if (coarse != 'P') return false; break;
      case 'E': if (coarse != 'E') return false; break;
      case 'M': if (fine != 'M') return false; break;
      default: return false;
    }
  }
  return true;
}

VerificationReport verify_set(const std::vector<TwoQubitState>& states, double tol,
                              double verify_tol) {
  if (states.empty() || states.size() > 4)
    throw Error(ErrorCode::InvalidArgument, "a set holds between one and four states");
  VerificationReport r;
  for (std::size_t i = 0; i < states.size(); ++i)
    for (std::size_t j = i + 1; j < states.size(); ++j)
      r.max_pairwise_overlap = std::max(r.max_pairwise_overlap, std::abs(inner(states[i], states[j])));

  bool ok = r.max_pairwise_overlap <= verify_tol;
  for (const auto& raw : states) {
    // A non-unit member fails on norm_error; the other checks run on its
    // normalized copy.
    const TwoQubitState s = make_state(raw.amplitudes(), true);
    StateReport sr;
    sr.norm_error = std::abs(raw.norm() - 1.0);
    sr.concurrence = concurrence(s);
    sr.label = classify_state(s, true, tol);
    const SchmidtDecomposition d = schmidt(s, tol);
    const SchmidtDecomposition o = oracle_schmidt(s);
    sr.reconstruction_error = max_abs_diff(reconstruct(d), s);
    sr.oracle_reconstruction_error = max_abs_diff(reconstruct(o), s);
    sr.coefficient_mismatch_vs_oracle = coefficient_gap(d, o);
    sr.invariant_violation = invariant_violation(d, tol);
    ok = ok && sr.norm_error <= verify_tol && sr.reconstruction_error <= verify_tol &&
         sr.oracle_reconstruction_error <= verify_tol &&
         sr.coefficient_mismatch_vs_oracle <= verify_tol && sr.invariant_violation <= verify_tol;
    r.pattern.push_back(sr.label);
    r.per_state.push_back(sr);
  }
  r.complete = ok && states.size() == 4;
  r.passed = ok;
  return r;
}

VerificationReport verify(const OrthoSet& set, double tol, double verify_tol) {
  VerificationReport r = verify_set(set.states, tol, verify_tol);
  r.labels_ok = labels_match(set.label, set.states, tol);
  bool ok = r.passed && r.labels_ok && set.schmidt.size() == set.states.size() &&
            set.states.size() == set_size(set.type);
  for (std::size_t i = 0; i < set.schmidt.size() && i < set.states.size(); ++i) {
    StateReport& sr = r.per_state[i];
    const SchmidtDecomposition& d = set.schmidt[i];
    sr.closed_form_reconstruction_error = max_abs_diff(reconstruct(d), set.states[i]);
    sr.closed_form_coefficient_mismatch = coefficient_gap(d, oracle_schmidt(set.states[i]));
    sr.closed_form_invariant_violation = invariant_violation(d, tol);
    ok = ok && sr.closed_form_reconstruction_error <= verify_tol &&
         sr.closed_form_coefficient_mismatch <= verify_tol &&
         sr.closed_form_invariant_violation <= verify_tol;
  }
  r.complete = ok && set.states.size() == 4;
  r.passed = ok;
  return r;
}

}  // namespace orthoschmidt
